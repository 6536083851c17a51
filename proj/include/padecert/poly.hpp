#pragma once

#include <string>
#include <vector>

#include "padecert/rational.hpp"

namespace padecert {

// Dense univariate polynomial over Q.  Coefficients are stored lowest degree
// first with no trailing zeros; the zero polynomial has an empty coefficient
// vector and degree() == -1 (the "-infinity" sentinel).
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constant polynomial
  Poly(long c);             // NOLINT
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(const Rational& coeff, size_t deg);
  static Poly variable();  // z

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }

  // Coefficient of z^k; zero beyond the degree.
  const Rational& coeff(size_t k) const;
  Rational leading() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator*(const Rational& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const;
  Poly derivative(unsigned long k) const;
  // Multiplication by z^k (index shift).
  Poly shifted(size_t k) const;
  Poly pow(unsigned long n) const;
  Rational eval(const Rational& x) const;
  Poly monic() const;  // requires nonzero

  // Euclidean division; requires b nonzero.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  // Division known to be exact; throws std::domain_error on a remainder.
  static Poly divexact(const Poly& a, const Poly& b);
  // Monic gcd; gcd(0, 0) is an error.
  static Poly gcd(const Poly& a, const Poly& b);

  std::string to_string(const std::string& var = "z") const;

 private:
  void prune();
  std::vector<Rational> c_;
};

}  // namespace padecert
