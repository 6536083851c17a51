#pragma once

#include <mpfr.h>

#include <string>

#include "padecert/rational.hpp"

namespace padecert {

// Closed real interval [lo, hi] with MPFR endpoints; every operation rounds
// lo down and hi up, so the result always encloses the exact value.
class BigInterval {
 public:
  explicit BigInterval(mpfr_prec_t prec = 256);
  BigInterval(const BigInterval& o);
  BigInterval(BigInterval&& o) noexcept;
  BigInterval& operator=(BigInterval o);
  ~BigInterval();

  static BigInterval from_rational(const Rational& q, mpfr_prec_t prec = 256);
  static BigInterval from_long(long v, mpfr_prec_t prec = 256);
  // log q for exact rational q > 0.
  static BigInterval log_rational(const Rational& q, mpfr_prec_t prec = 256);
  static BigInterval hull(const BigInterval& a, const BigInterval& b);

  mpfr_prec_t precision() const { return prec_; }

  friend BigInterval operator+(const BigInterval& a, const BigInterval& b);
  friend BigInterval operator-(const BigInterval& a, const BigInterval& b);
  friend BigInterval operator*(const BigInterval& a, const BigInterval& b);
  // Requires 0 outside b.
  friend BigInterval operator/(const BigInterval& a, const BigInterval& b);
  BigInterval operator-() const;
  BigInterval abs() const;
  BigInterval exp() const;
  BigInterval log() const;  // requires lo > 0

  bool contains(const Rational& q) const;
  bool contains_zero() const;
  bool is_positive() const;  // lo > 0
  bool is_negative() const;  // hi < 0
  // True when every point of *this is below every point of o.
  bool certainly_less(const BigInterval& o) const;

  double lo_double() const;  // rounded down
  double hi_double() const;  // rounded up
  double mid_double() const;
  double width() const;
  // (hi - lo) / max(1, |midpoint|), as a double upper bound.
  double relative_width() const;

  // Decimal endpoint strings, outward rounded; deterministic for equal
  // inputs and precision.
  std::string lo_string(int digits = 25) const;
  std::string hi_string(int digits = 25) const;

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
};

}  // namespace padecert
