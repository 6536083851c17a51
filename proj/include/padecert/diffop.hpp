#pragma once

#include <vector>

#include "padecert/laurent.hpp"
#include "padecert/poly.hpp"

namespace padecert {

// First-order operator d1(z) d/dz + d0(z).
struct DiffOp1 {
  Poly d1, d0;

  // The operator -a d/dz + b attached to an instance.
  static DiffOp1 minus_a_d_plus_b(const Poly& a, const Poly& b) {
    return {-a, b};
  }

  Poly apply(const Poly& p) const { return d1 * p.derivative() + d0 * p; }

  // Splits (d1 f' + d0 f) for f in (1/z)Q[[1/z]] into polynomial part and
  // tail.  Tail valid length: T + 1 - max(deg d1, deg d0 + 1).
  LaurentSeries::PolyProduct apply(const LaurentSeries& f) const;

  // Formal transpose: (p1 d/dz + p0)^t = -p1 d/dt + (p0 - p1').
  DiffOp1 adjoint() const { return {-d1, d0 - d1.derivative()}; }

  friend bool operator==(const DiffOp1& a, const DiffOp1& b) {
    return a.d1 == b.d1 && a.d0 == b.d0;
  }
};

// Operator sum_i c[i] (d/dz)^i in normal form (coefficients to the left of
// the derivatives).
class DiffOpN {
 public:
  DiffOpN() = default;
  explicit DiffOpN(std::vector<Poly> coeffs);
  DiffOpN(const DiffOp1& op)  // NOLINT
      : DiffOpN(std::vector<Poly>{op.d0, op.d1}) {}

  static DiffOpN derivative_power(unsigned long k);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Poly& coeff(size_t i) const;
  const std::vector<Poly>& coeffs() const { return c_; }

  Poly apply(const Poly& p) const;

  friend DiffOpN operator+(const DiffOpN& a, const DiffOpN& b);
  friend DiffOpN operator-(const DiffOpN& a, const DiffOpN& b);
  friend DiffOpN operator*(const Rational& c, const DiffOpN& op);
  // Operator composition a after b, normal-ordered via Leibniz.
  friend DiffOpN compose(const DiffOpN& a, const DiffOpN& b);
  friend bool operator==(const DiffOpN& a, const DiffOpN& b) {
    return a.c_ == b.c_;
  }

  // Formal transpose sum_i (-1)^i (d/dt)^i c_i(t), returned in normal form.
  DiffOpN adjoint() const;

 private:
  void prune();
  std::vector<Poly> c_;
};

}  // namespace padecert
