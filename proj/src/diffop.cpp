#include "padecert/diffop.hpp"

namespace padecert {

LaurentSeries::PolyProduct DiffOp1::apply(const LaurentSeries& f) const {
  LaurentSeries df = f.derivative();  // valid length T + 1
  auto first = df.mul_by_poly(d1);
  auto second = f.mul_by_poly(d0);
  return {first.polynomial + second.polynomial, first.tail + second.tail};
}

DiffOpN::DiffOpN(std::vector<Poly> coeffs) : c_(std::move(coeffs)) {
  prune();
}

void DiffOpN::prune() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

DiffOpN DiffOpN::derivative_power(unsigned long k) {
  std::vector<Poly> c(k + 1);
  c[k] = Poly(Rational(1));
  return DiffOpN(std::move(c));
}

namespace {
const Poly kZeroPoly;
}

const Poly& DiffOpN::coeff(size_t i) const {
  return i < c_.size() ? c_[i] : kZeroPoly;
}

Poly DiffOpN::apply(const Poly& p) const {
  Poly out;
  Poly dp = p;
  for (size_t i = 0; i < c_.size(); ++i) {
    out += c_[i] * dp;
    dp = dp.derivative();
  }
  return out;
}

DiffOpN operator+(const DiffOpN& a, const DiffOpN& b) {
  std::vector<Poly> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return DiffOpN(std::move(c));
}

DiffOpN operator-(const DiffOpN& a, const DiffOpN& b) {
  std::vector<Poly> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return DiffOpN(std::move(c));
}

DiffOpN operator*(const Rational& c, const DiffOpN& op) {
  std::vector<Poly> out(op.c_.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = c * op.c_[i];
  return DiffOpN(std::move(out));
}

DiffOpN compose(const DiffOpN& a, const DiffOpN& b) {
  // D^i q = sum_t C(i, t) q^(t) D^(i-t)
  if (a.c_.empty() || b.c_.empty()) return DiffOpN();
  std::vector<Poly> out(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      Poly q = b.c_[j];
      for (size_t t = 0; t <= i; ++t) {
        out[i - t + j] += Rational(binomial_uint(i, t)) * (a.c_[i] * q);
        q = q.derivative();
        if (q.is_zero()) break;
      }
    }
  }
  return DiffOpN(std::move(out));
}

DiffOpN DiffOpN::adjoint() const {
  DiffOpN out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    DiffOpN term =
        compose(derivative_power(i), DiffOpN(std::vector<Poly>{c_[i]}));
    out = (i % 2 == 0) ? out + term : out - term;
  }
  return out;
}

}  // namespace padecert
