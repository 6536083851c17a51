#pragma once

#include <vector>

#include "padecert/poly.hpp"
#include "padecert/rational.hpp"

namespace padecert {

// Truncated element of (1/z) Q[[1/z]]: stores c[0..T-1] representing
// sum_k c[k] z^{-k-1}.  T is the explicit truncation length; every operation
// states the valid length of its result and nothing is silently
// zero-extended.
class LaurentSeries {
 public:
  explicit LaurentSeries(size_t truncation)
      : c_(truncation, Rational(0)) {}
  explicit LaurentSeries(std::vector<Rational> coeffs)
      : c_(std::move(coeffs)) {}

  size_t truncation() const { return c_.size(); }
  const Rational& coeff(size_t k) const;
  void set_coeff(size_t k, const Rational& v);
  const std::vector<Rational>& coeffs() const { return c_; }

  // Order at infinity: ord(f) = 1 + index of first nonzero coefficient.
  // When every stored coefficient vanishes the order is only known to be
  // >= T + 1 and exact is false.
  struct OrdInf {
    bool exact;
    long value;
  };
  OrdInf ord_at_infinity() const;

  LaurentSeries truncated(size_t new_T) const;

  // Result length = min of the operand lengths.
  friend LaurentSeries operator+(const LaurentSeries& a,
                                 const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a,
                                 const LaurentSeries& b);
  friend LaurentSeries operator*(const Rational& c, const LaurentSeries& f);
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.c_ == b.c_;
  }

  // Splits p(z) * f into its polynomial part and its tail in (1/z)Q[[1/z]].
  // The tail is valid to length T - deg p (T for constant p).
  struct PolyProduct;
  PolyProduct mul_by_poly(const Poly& p) const;

  // Termwise derivative d/dz; valid length T + 1.
  LaurentSeries derivative() const;

 private:
  std::vector<Rational> c_;
};

struct LaurentSeries::PolyProduct {
  Poly polynomial;
  LaurentSeries tail;
};

}  // namespace padecert
