#include "padecert/poly.hpp"

#include <sstream>

namespace padecert {

namespace {
const Rational kZero = 0;
}

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  prune();
}

Poly Poly::monomial(const Rational& coeff, size_t deg) {
  if (sgn(coeff) == 0) return Poly();
  std::vector<Rational> c(deg + 1, Rational(0));
  c[deg] = coeff;
  return Poly(std::move(c));
}

Poly Poly::variable() {
  return monomial(1, 1);
}

void Poly::prune() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Rational& Poly::coeff(size_t k) const {
  return k < c_.size() ? c_[k] : kZero;
}

Rational Poly::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of 0");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  prune();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  prune();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly operator*(const Rational& c, const Poly& p) {
  if (sgn(c) == 0) return Poly();
  Poly out = p;
  for (auto& x : out.c_) x *= c;
  return out;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rational(i) * c_[i];
  return Poly(std::move(c));
}

Poly Poly::derivative(unsigned long k) const {
  Poly out = *this;
  for (unsigned long i = 0; i < k && !out.is_zero(); ++i)
    out = out.derivative();
  return out;
}

Poly Poly::shifted(size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> c(c_.size() + k, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
  return Poly(std::move(c));
}

Poly Poly::pow(unsigned long n) const {
  Poly out(Rational(1));
  Poly base = *this;
  while (n) {
    if (n & 1) out *= base;
    base *= base;
    n >>= 1;
  }
  return out;
}

Rational Poly::eval(const Rational& x) const {
  Rational out = 0;
  for (size_t i = c_.size(); i-- > 0;) out = out * x + c_[i];
  return out;
}

Poly Poly::monic() const {
  return Rational(1) / leading() * *this;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by 0");
  q = Poly();
  r = a;
  const Rational lead = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    size_t shift = static_cast<size_t>(r.degree() - b.degree());
    Rational factor = r.leading() / lead;
    q += Poly::monomial(factor, shift);
    r -= factor * b.shifted(shift);
  }
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0)");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly q, r;
    divmod(x, y, q, r);
    x = y;
    y = r;
  }
  return x.monic();
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (sgn(c_[i]) == 0) continue;
    Rational c = c_[i];
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    Rational ac = abs(c);
    if (i == 0 || ac != 1) out << rat_to_string(ac);
    if (i > 0) {
      if (ac != 1) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace padecert
