#include "padecert/pade.hpp"

#include "padecert/linalg.hpp"
#include "padecert/ratfunc.hpp"

namespace padecert {

namespace {

size_t min_truncation_for_system(const Instance& inst, unsigned n) {
  // deg P_{n,m-1} + n + 2
  return (inst.m - 1) * (n + 1) + n + 2;
}

void check_degree(const Instance& inst, unsigned n, unsigned l,
                  const Poly& p) {
  if (p.degree() != static_cast<int>(l + n * (inst.m - 1)))
    throw std::logic_error("approximant degree formula violated");
}

bool tail_order_ok(const LaurentSeries& tail, unsigned n) {
  for (unsigned k = 0; k < n && k < tail.truncation(); ++k)
    if (sgn(tail.coeff(k)) != 0) return false;
  return true;
}

std::vector<PadeSystem> build_range(const SolutionFamily& fam, unsigned n_lo,
                                    unsigned n_hi, Exec mode) {
  const Instance& inst = fam.inst;
  if (fam.T < min_truncation_for_system(inst, n_hi))
    throw truncation_error(
        "truncation " + std::to_string(fam.T) + " below required " +
        std::to_string(min_truncation_for_system(inst, n_hi)));
  unsigned count = n_hi - n_lo + 1;
  std::vector<PadeSystem> out(count);
  for (unsigned t = 0; t < count; ++t) {
    out[t].n = n_lo + t;
    out[t].m = inst.m;
    out[t].P.resize(inst.m);
    out[t].Q.assign(inst.w + 1, std::vector<Poly>(inst.m));
    out[t].R.assign(inst.w + 1,
                    std::vector<LaurentSeries>(inst.m, LaurentSeries(0)));
  }
  // P cells (n, l), then pairing cells (n, j, l); all independent.
  par_for(mode, static_cast<long>(count) * inst.m, [&](long cell) {
    unsigned t = static_cast<unsigned>(cell) / inst.m;
    unsigned l = static_cast<unsigned>(cell) % inst.m;
    out[t].P[l] = rodrigues_poly(inst, n_lo + t, l);
  });
  par_for(mode, static_cast<long>(count) * (inst.w + 1) * inst.m,
          [&](long cell) {
    unsigned per = (inst.w + 1) * inst.m;
    unsigned t = static_cast<unsigned>(cell) / per;
    unsigned rest = static_cast<unsigned>(cell) % per;
    unsigned j = rest / inst.m;
    unsigned l = rest % inst.m;
    out[t].Q[j][l] = phi_bivariate(fam.f[j], out[t].P[l]);
    out[t].R[j][l] = fam.f[j].mul_by_poly(out[t].P[l]).tail;
  });
  for (unsigned t = 0; t < count; ++t) {
    bool ok = true;
    for (unsigned j = 0; j <= inst.w && ok; ++j)
      for (unsigned l = 0; l < inst.m && ok; ++l) {
        if (!tail_order_ok(out[t].R[j][l], n_lo + t)) ok = false;
        if (out[t].Q[j][l].degree() >= out[t].P[l].degree()) ok = false;
      }
    out[t].verified = ok;
  }
  return out;
}

}  // namespace

Poly rodrigues_poly(const Instance& inst, unsigned n, unsigned l) {
  Poly p = Poly::monomial(1, l);
  const Poly da = inst.a.derivative();
  for (unsigned k = n; k-- > 0;)
    p = inst.a * p.derivative() + (Rational(k + 1) * da + inst.b) * p;
  p = Rational(1, factorial(n)) * p;
  check_degree(inst, n, l, p);
  return p;
}

Poly rodrigues_poly_power_form(const Instance& inst, unsigned n, unsigned l) {
  RatFunc g(inst.a.pow(n) * Poly::monomial(1, l));
  RatFunc b_over_a(inst.b, inst.a);
  for (unsigned k = 0; k < n; ++k) g = g.derivative() + b_over_a * g;
  Poly p = Rational(1, factorial(n)) * g.as_polynomial();
  check_degree(inst, n, l, p);
  return p;
}

Poly leibniz_poly(const Instance& inst, unsigned n, unsigned l) {
  Poly out;
  std::vector<Poly> linear;
  for (unsigned i = 0; i < inst.m; ++i)
    linear.push_back(Poly(std::vector<Rational>{-inst.alpha[i], Rational(1)}));
  for (unsigned long k = 0; k <= n; ++k) {
    Poly level;
    for_compositions(inst.m, k, [&](const std::vector<unsigned long>& ks) {
      Rational factor = 1;
      for (unsigned i = 0; i < inst.m; ++i)
        factor *= pochhammer(-inst.exponent(i), ks[i]) /
                  Rational(factorial(ks[i]));
      if (sgn(factor) == 0) return;
      for_compositions(inst.m + 1, n - k,
                       [&](const std::vector<unsigned long>& js) {
        if (js[inst.m] > l) return;  // C(l, j_{m+1}) = 0 past l
        Rational c = factor * Rational(binomial_uint(l, js[inst.m]));
        Poly term = Poly::monomial(c, l - js[inst.m]);
        for (unsigned i = 0; i < inst.m; ++i) {
          term = Rational(binomial_uint(n, js[i])) * term;
          unsigned long e = n - js[i] - ks[i];
          term *= linear[i].pow(e);
        }
        level += term;
      });
    });
    out = (k % 2 == 0) ? out + level : out - level;
  }
  check_degree(inst, n, l, out);
  return out;
}

PadeSystem build_system(const SolutionFamily& fam, unsigned n, Exec mode) {
  std::vector<PadeSystem> one = build_range(fam, n, n, mode);
  return std::move(one.front());
}

std::vector<PadeSystem> build_systems(const SolutionFamily& fam,
                                      unsigned n_max, Exec mode) {
  return build_range(fam, 0, n_max, mode);
}

LaurentSeries remainder_closed_form(const SolutionFamily& fam, unsigned n,
                                    unsigned j, unsigned l, size_t K) {
  const Instance& inst = fam.inst;
  if (fam.T < n + K + l + n * inst.m)
    throw truncation_error("truncation too small for " + std::to_string(K) +
                           " closed-form remainder terms");
  Poly an = inst.a.pow(n);
  std::vector<Rational> r(n + K, Rational(0));
  for (size_t k = n; k < n + K; ++k) {
    // t^{k+l-n} a(t)^n paired against f_j
    Rational v = phi(fam.f[j], an.shifted(k + l - n));
    Rational c = Rational(binomial_uint(k, n)) * v;
    r[k] = (n % 2 == 0) ? c : -c;
  }
  return LaurentSeries(std::move(r));
}

std::vector<bool> kernel_membership(const SolutionFamily& fam, const Poly& q) {
  std::vector<bool> out;
  for (unsigned j = 0; j <= fam.inst.w; ++j)
    out.push_back(sgn(phi(fam.f[j], q)) == 0);
  return out;
}

PadeSolve solve_pade_linear_system(const SolutionFamily& fam,
                                   const std::vector<unsigned>& weights,
                                   unsigned M) {
  if (weights.size() != fam.f.size())
    throw std::invalid_argument("one weight per family member required");
  unsigned long rows = 0;
  for (unsigned nj : weights) rows += nj;
  if (rows > M)
    throw std::invalid_argument("total weight exceeds degree budget M");
  for (unsigned j = 0; j < weights.size(); ++j)
    if (weights[j] > 0 && weights[j] - 1 + M >= fam.T)
      throw truncation_error("truncation too small for the condition rows");
  Matrix<Rational> mat(rows, M + 1);
  size_t row = 0;
  for (unsigned j = 0; j < weights.size(); ++j)
    for (unsigned k = 0; k < weights[j]; ++k, ++row)
      for (unsigned i = 0; i <= M; ++i)
        mat.at(row, i) = fam.f[j].coeff(k + i);
  auto vec = kernel_vector(mat);
  if (!vec.has_value())
    throw std::logic_error("underdetermined system with trivial kernel");
  PadeSolve out;
  out.P = Poly(std::move(*vec));
  for (unsigned j = 0; j < weights.size(); ++j)
    out.Q.push_back(phi_bivariate(fam.f[j], out.P));
  return out;
}

}  // namespace padecert
