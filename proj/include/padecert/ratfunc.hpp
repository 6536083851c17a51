#pragma once

#include "padecert/poly.hpp"

namespace padecert {

// Reduced rational function num/den with monic denominator.  Only the small
// amount of arithmetic needed to run first-order operators with polynomial
// per a(z) denominators lives here.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  RatFunc(Poly num, Poly den);
  RatFunc(const Poly& p) : num_(p), den_(Rational(1)) {}  // NOLINT

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  // Requires a polynomial value (denominator 1 after reduction).
  Poly as_polynomial() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  RatFunc derivative() const;

 private:
  void reduce();
  Poly num_, den_;
};

}  // namespace padecert
