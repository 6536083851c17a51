#pragma once

#include <map>

#include "padecert/interval.hpp"
#include "padecert/rational.hpp"

namespace padecert {

struct RatLess {
  bool operator()(const Rational& a, const Rational& b) const {
    return cmp(a, b) < 0;
  }
};

// Exact value of the form  constant + sum_i coeff_i * log(base_i)  with
// rational constant and coefficients and positive rational bases.  Bases are
// kept prime wherever trial division succeeds, so algebraic cancellations
// (log 4 = 2 log 2 and the like) happen exactly.  Heights, mu-factors and
// the measure building blocks are all of this shape.
class LogLinear {
 public:
  LogLinear() : constant_(0) {}

  static LogLinear from_rational(const Rational& t);
  // log q for q > 0, split into prime bases.
  static LogLinear from_log(const Rational& q);
  // c * log p.
  static LogLinear log_term(const Rational& coeff, const Rational& base);

  const Rational& constant() const { return constant_; }
  const std::map<Rational, Rational, RatLess>& terms() const { return terms_; }

  bool is_zero() const { return sgn(constant_) == 0 && terms_.empty(); }

  LogLinear& operator+=(const LogLinear& o);
  LogLinear& operator-=(const LogLinear& o);
  friend LogLinear operator+(LogLinear a, const LogLinear& b) { return a += b; }
  friend LogLinear operator-(LogLinear a, const LogLinear& b) { return a -= b; }
  friend LogLinear operator*(const Rational& c, const LogLinear& x);
  friend bool operator==(const LogLinear& a, const LogLinear& b) {
    return a.constant_ == b.constant_ && a.terms_ == b.terms_;
  }

  BigInterval enclose(mpfr_prec_t prec = 256) const;

 private:
  void add_term(const Rational& coeff, const Rational& base);
  Rational constant_;
  std::map<Rational, Rational, RatLess> terms_;
};

}  // namespace padecert
