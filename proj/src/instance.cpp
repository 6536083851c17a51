#include "padecert/instance.hpp"

#include <algorithm>
#include <sstream>

namespace padecert {

namespace {

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> out{Int(1)};
  for (const auto& [p, e] : factorize(n)) {
    size_t base = out.size();
    Int pw = 1;
    for (unsigned long i = 1; i <= e; ++i) {
      pw *= p;
      for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pw);
    }
  }
  return out;
}

// Primitive integer version of p (content removed).
std::vector<Int> integer_coeffs(const Poly& p) {
  Int scale = 1;
  for (const auto& c : p.coeffs())
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Int> out;
  out.reserve(p.coeffs().size());
  Int content = 0;
  for (const auto& c : p.coeffs()) {
    Rational scaled = Rational(scale) * c;
    out.push_back(Int(scaled.get_num()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
            out.back().get_mpz_t());
  }
  if (content > 1)
    for (auto& c : out) c /= content;
  return out;
}

}  // namespace

RootSplit rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("roots of zero polynomial");
  RootSplit out;
  Poly rest = p;
  while (rest.degree() > 0 && sgn(rest.coeff(0)) == 0) {
    out.roots.emplace_back(0);
    rest = Poly::divexact(rest, Poly::variable());
  }
  while (rest.degree() > 0) {
    std::vector<Int> ic = integer_coeffs(rest);
    bool found = false;
    for (const Int& num : divisors(abs(ic.front()))) {
      for (const Int& den : divisors(abs(ic.back()))) {
        for (int sign : {1, -1}) {
          Rational cand(sign * num, den);
          cand.canonicalize();
          if (sgn(rest.eval(cand)) != 0) continue;
          out.roots.push_back(cand);
          rest = Poly::divexact(
              rest, Poly(std::vector<Rational>{-cand, Rational(1)}));
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
  out.nonsplit = rest;
  return out;
}

void Instance::finish() {
  m = static_cast<unsigned>(alpha.size());
  if (m < 2) throw hypothesis_error("degree of a must be at least 2");
  w = m - 2;
  b_top = b.coeff(m - 1);

  flags.distinct_roots = true;
  for (size_t i = 0; i < alpha.size() && flags.distinct_roots; ++i)
    for (size_t j = i + 1; j < alpha.size(); ++j)
      if (alpha[i] == alpha[j]) {
        flags.distinct_roots = false;
        break;
      }

  flags.exponents_ok = true;
  flags.coprimality_ok = true;
  for (const auto& si : s) {
    if (!si.has_value()) {
      flags.exponents_ok = false;
      flags.coprimality_ok = false;
      continue;
    }
    if (is_integer_leq(*si, -1)) {
      flags.exponents_ok = false;
      flags.coprimality_ok = false;
    }
  }

  flags.top_coeff_ok = !is_integer_leq(b_top, -2);

  // With a monic the leading recurrence coefficient is k m + n + m + b_top,
  // nonzero for all k, n >= 0 iff b_top is outside Z_{<=-m}.
  flags.leading_nonzero =
      static_cast<int>(b.degree()) < static_cast<int>(m) - 1 ||
      !is_integer_leq(b_top, -static_cast<long>(m));

  // exactness checks on the defining identities
  Poly prod(Rational(1));
  for (const auto& r : alpha)
    prod *= Poly(std::vector<Rational>{-r, Rational(1)});
  if (prod != a)
    throw hypothesis_error("product of linear factors does not reproduce a");
  bool all_defined =
      std::all_of(s.begin(), s.end(), [](const auto& x) { return x.has_value(); });
  if (all_defined) {
    Rational sum = 0;
    for (const auto& si : s) sum += *si;
    if (sum != b_top)
      throw hypothesis_error("sum of exponents does not match top coefficient of b");
  }
}

Instance Instance::from_roots(std::vector<Rational> alpha,
                              std::vector<Rational> s) {
  if (alpha.size() != s.size())
    throw std::invalid_argument("alpha and s must have equal length");
  Instance inst;
  inst.alpha = std::move(alpha);
  for (auto& si : s) inst.s.emplace_back(std::move(si));
  inst.a = Poly(Rational(1));
  for (const auto& r : inst.alpha)
    inst.a *= Poly(std::vector<Rational>{-r, Rational(1)});
  inst.b = Poly();
  for (size_t i = 0; i < inst.alpha.size(); ++i) {
    Poly partial(Rational(1));
    for (size_t j = 0; j < inst.alpha.size(); ++j)
      if (j != i)
        partial *= Poly(std::vector<Rational>{-inst.alpha[j], Rational(1)});
    inst.b += *inst.s[i] * partial;
  }
  inst.finish();
  return inst;
}

Instance Instance::from_polys(const Poly& a, const Poly& b) {
  if (a.degree() < 2) throw hypothesis_error("degree of a must be at least 2");
  if (a.leading() != 1) throw hypothesis_error("a must be monic");
  if (b.degree() >= a.degree())
    throw hypothesis_error("deg b must be at most deg a - 1");
  RootSplit split = rational_roots(a);
  if (split.nonsplit.degree() > 0)
    throw hypothesis_error("a does not split over Q: irreducible factor " +
                           split.nonsplit.to_string());
  Instance inst;
  inst.a = a;
  inst.b = b;
  inst.alpha = split.roots;
  Poly da = a.derivative();
  for (const auto& r : inst.alpha) {
    Rational denom = da.eval(r);
    if (sgn(denom) == 0)
      inst.s.emplace_back(std::nullopt);  // repeated root
    else
      inst.s.emplace_back(b.eval(r) / denom);
  }
  inst.finish();
  return inst;
}

Rational Instance::exponent(size_t i) const {
  if (i >= s.size() || !s[i].has_value())
    throw hypothesis_error("exponent undefined at repeated root");
  return *s[i];
}

std::string Instance::canonical_string() const {
  std::ostringstream out;
  out << "m=" << m << ";alpha=[";
  for (size_t i = 0; i < alpha.size(); ++i)
    out << (i ? "," : "") << rat_to_string(alpha[i]);
  out << "];s=[";
  for (size_t i = 0; i < s.size(); ++i)
    out << (i ? "," : "") << (s[i] ? rat_to_string(*s[i]) : "undef");
  out << "];a=" << a.to_string() << ";b=" << b.to_string();
  return out.str();
}

}  // namespace padecert
