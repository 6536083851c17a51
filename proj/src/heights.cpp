#include "padecert/heights.hpp"

#include <algorithm>

namespace padecert {

namespace {

Rational abs_rat(const Rational& x) { return sgn(x) < 0 ? Rational(-x) : x; }

// Sum of the totient-average harmonic term in V: (D/phi(D)) sum_{(j,D)=1} 1/j.
Rational totient_harmonic(const Int& D) {
  Rational sum = 0;
  for (Int j = 1; j <= D; ++j) {
    Int g;
    mpz_gcd(g.get_mpz_t(), j.get_mpz_t(), D.get_mpz_t());
    if (g == 1) sum += Rational(Int(1), j);
  }
  Rational ratio(D, euler_phi(D));
  ratio.canonicalize();
  return ratio * sum;
}

}  // namespace

Int denominator_lcm(const std::vector<Rational>& xs) {
  Int l = 1;
  for (const auto& x : xs)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  return l;
}

std::vector<unsigned long> prime_support(const std::vector<Rational>& xs) {
  std::vector<unsigned long> out;
  Int prod = 1;
  for (const auto& x : xs) {
    if (sgn(x) != 0) prod *= x.get_num();
    prod *= x.get_den();
  }
  if (prod < 0) prod = -prod;
  if (prod <= 1) return out;
  for (const auto& [p, e] : factorize(prod)) {
    (void)e;
    out.push_back(mpz_get_ui(p.get_mpz_t()));
  }
  return out;
}

LogLinear log_abs_v(const Rational& x, const Place& v) {
  if (sgn(x) == 0) throw std::domain_error("log|0|_v is undefined");
  if (v.arch) return LogLinear::from_log(abs_rat(x));
  return LogLinear::log_term(Rational(-padic_valuation(x, v.p)),
                             Rational(static_cast<long>(v.p)));
}

LogLinear height_v(const std::vector<Rational>& xs, const Place& v) {
  if (v.arch) {
    Rational r = 1;
    for (const auto& x : xs) {
      Rational a = abs_rat(x);
      if (a > r) r = a;
    }
    return LogLinear::from_log(r);
  }
  long e = 0;
  for (const auto& x : xs) {
    if (sgn(x) == 0) continue;  // |0|_p = 0 never exceeds 1
    e = std::max(e, -padic_valuation(x, v.p));
  }
  return LogLinear::log_term(Rational(e), Rational(static_cast<long>(v.p)));
}

LogLinear height_global(const std::vector<Rational>& xs) {
  LogLinear h = height_v(xs, Place::infinity());
  std::vector<Rational> dens;
  for (const auto& x : xs) dens.emplace_back(x.get_den());
  for (unsigned long p : prime_support(dens))
    h += height_v(xs, Place::finite(p));
  return h;
}

LogLinear mu_log(const Rational& s) {
  const Int d(s.get_den());
  LogLinear out = LogLinear::from_log(Rational(d));
  for (const auto& [q, e] : factorize(d)) {
    (void)e;
    Int qm1 = q - 1;
    out += LogLinear::log_term(Rational(Int(1), qm1), Rational(q));
  }
  return out;
}

Int mu_n(const Rational& s, unsigned long n) {
  const Int d(s.get_den());
  Int out;
  mpz_pow_ui(out.get_mpz_t(), d.get_mpz_t(), n);
  for (const auto& [q, e] : factorize(d)) {
    (void)e;
    Int qm1 = q - 1;
    Int exponent = Int(n) / qm1;
    Int power;
    mpz_pow_ui(power.get_mpz_t(), q.get_mpz_t(),
               mpz_get_ui(exponent.get_mpz_t()));
    out *= power;
  }
  return out;
}

Int d_n(const Rational& b, unsigned long n) {
  if (is_integer_leq(b, -1))
    throw hypothesis_error("d_n undefined: b + k + 1 vanishes");
  Int l = 1;
  for (unsigned long k = 0; k <= n; ++k) {
    Rational inv = 1 / (b + Rational(static_cast<long>(k) + 1));
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), inv.get_den().get_mpz_t());
  }
  return l;
}

LogLinear mu_v_log(const Rational& s, const Place& v) {
  if (v.arch) return LogLinear();
  if (sgn(s) == 0 || padic_valuation(s, v.p) >= 0) return LogLinear();
  const long e = padic_valuation(Int(s.get_den()), v.p);
  // log(|den(s)|_p |p|_p^{1/(p-1)}) = -(e + 1/(p-1)) log p
  Int pm1 = Int(v.p) - 1;
  Rational coeff = -(Rational(e) + Rational(Int(1), pm1));
  return LogLinear::log_term(coeff, Rational(static_cast<long>(v.p)));
}

LogLinear V_value(const Instance& inst, const Rational& beta,
                  const Place& v0) {
  if (sgn(beta) == 0) throw std::domain_error("V requires beta != 0");
  const long m = inst.m;
  LogLinear V = Rational(m) * height_v({beta}, v0);
  V -= Rational(m - 1) * height_global({beta});
  for (const auto& ai : inst.alpha) V -= height_global({ai});
  LogLinear inner = height_global(inst.alpha);
  for (unsigned i = 0; i < inst.m; ++i) inner += mu_log(inst.exponent(i));
  inner += LogLinear::log_term(Rational(2), Rational(2));  // log 4
  V -= Rational(m) * inner;
  V -= LogLinear::from_rational(Rational(m - 1) *
                                totient_harmonic(Int(inst.b_top.get_den())));
  return V;
}

LogLinear A_value(const Instance& inst, const Rational& beta,
                  const Place& v0) {
  if (sgn(beta) == 0) throw std::domain_error("A requires beta != 0");
  const long m = inst.m;
  LogLinear A = log_abs_v(beta, v0);
  for (const auto& ai : inst.alpha) A -= height_v({ai}, v0);
  A -= Rational(m) * height_v(inst.alpha, v0);
  if (v0.arch) {
    A -= LogLinear::log_term(Rational(m), Rational(2));  // m log 2
  } else {
    LogLinear mus;
    for (unsigned i = 0; i < inst.m; ++i)
      mus += mu_v_log(inst.exponent(i), v0);
    A += Rational(m) * mus;
  }
  return A;
}

LogLinear U_value(const Instance& inst, const Rational& beta,
                  const Place& v0) {
  if (sgn(beta) == 0) throw std::domain_error("U requires beta != 0");
  const long m = inst.m;
  LogLinear U;
  for (const auto& ai : inst.alpha) U += height_v({ai}, v0);
  U += Rational(m - 1) * (height_v(inst.alpha, v0) + height_v({beta}, v0));
  LogLinear mus;
  for (unsigned i = 0; i < inst.m; ++i) mus += mu_v_log(inst.exponent(i), v0);
  U += Rational(m) * mus;
  return U;
}

LogLinear F_value(const Instance& inst, const Rational& beta, const Place& v,
                  unsigned long n) {
  if (sgn(beta) == 0) throw std::domain_error("F requires beta != 0");
  const long m = inst.m;
  LogLinear base;
  for (const auto& ai : inst.alpha) base += height_v({ai}, v);
  base += Rational(m - 1) * (height_v(inst.alpha, v) + height_v({beta}, v));
  if (v.arch) {
    base += LogLinear::log_term(Rational(2 * m), Rational(2));  // m log 4
    return Rational(Int(n)) * base;
  }
  LogLinear F = Rational(Int(n)) * base;
  const Rational pr(static_cast<long>(v.p));
  for (unsigned i = 0; i < inst.m; ++i) {
    long val = padic_valuation(mu_n(inst.exponent(i), n), v.p);
    F += Rational(m) * LogLinear::log_term(Rational(val), pr);
  }
  long dval = padic_valuation(d_n(inst.b_top, (m - 1) * (n + 1)), v.p);
  F += LogLinear::log_term(Rational(dval), pr);
  return F;
}

MeasureReport measure(const Instance& inst, const Rational& beta,
                      const Place& v0, const Rational& epsilon,
                      mpfr_prec_t prec) {
  MeasureReport rep;
  rep.v0 = v0;
  rep.beta = beta;
  rep.epsilon = epsilon;
  rep.prec = prec;
  rep.V = V_value(inst, beta, v0);
  rep.A = A_value(inst, beta, v0);
  rep.U = U_value(inst, beta, v0);
  rep.v_iv = rep.V.enclose(prec);
  rep.a_iv = rep.A.enclose(prec);
  rep.u_iv = rep.U.enclose(prec);

  LogLinear vme = rep.V - LogLinear::from_rational(epsilon);
  BigInterval vme_iv = vme.enclose(prec);
  rep.applicable = sgn(epsilon) > 0 && vme_iv.is_positive();
  if (!rep.applicable) return rep;

  BigInterval au = rep.a_iv + rep.u_iv;
  rep.mu_iv = au / vme_iv;
  BigInterval log2 = BigInterval::log_rational(2, prec);
  BigInterval one = BigInterval::from_long(1, prec);
  rep.c_iv = (-((log2 / vme_iv + one) * au)).exp();
  return rep;
}

}  // namespace padecert
