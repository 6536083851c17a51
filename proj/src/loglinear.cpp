#include "padecert/loglinear.hpp"

namespace padecert {

LogLinear LogLinear::from_rational(const Rational& t) {
  LogLinear out;
  out.constant_ = t;
  return out;
}

LogLinear LogLinear::from_log(const Rational& q) {
  if (sgn(q) <= 0) throw std::domain_error("log of non-positive rational");
  LogLinear out;
  for (const auto& [p, e] : factorize(Int(q.get_num())))
    out.add_term(Rational(e), Rational(p));
  for (const auto& [p, e] : factorize(Int(q.get_den())))
    out.add_term(Rational(-static_cast<long>(e)), Rational(p));
  return out;
}

LogLinear LogLinear::log_term(const Rational& coeff, const Rational& base) {
  if (sgn(base) <= 0) throw std::domain_error("log of non-positive rational");
  LogLinear out;
  if (sgn(coeff) == 0 || base == 1) return out;
  // split the base into primes so equal contributions merge
  for (const auto& [p, e] : factorize(Int(base.get_num())))
    out.add_term(coeff * Rational(e), Rational(p));
  for (const auto& [p, e] : factorize(Int(base.get_den())))
    out.add_term(coeff * Rational(-static_cast<long>(e)), Rational(p));
  return out;
}

void LogLinear::add_term(const Rational& coeff, const Rational& base) {
  if (sgn(coeff) == 0 || base == 1) return;
  auto [it, inserted] = terms_.emplace(base, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LogLinear& LogLinear::operator+=(const LogLinear& o) {
  constant_ += o.constant_;
  for (const auto& [base, coeff] : o.terms_) add_term(coeff, base);
  return *this;
}

LogLinear& LogLinear::operator-=(const LogLinear& o) {
  constant_ -= o.constant_;
  for (const auto& [base, coeff] : o.terms_) add_term(-coeff, base);
  return *this;
}

LogLinear operator*(const Rational& c, const LogLinear& x) {
  LogLinear out;
  if (sgn(c) == 0) return out;
  out.constant_ = c * x.constant_;
  for (const auto& [base, coeff] : x.terms_) out.terms_.emplace(base, c * coeff);
  return out;
}

BigInterval LogLinear::enclose(mpfr_prec_t prec) const {
  BigInterval out = BigInterval::from_rational(constant_, prec);
  for (const auto& [base, coeff] : terms_)
    out = out + BigInterval::from_rational(coeff, prec) *
                    BigInterval::log_rational(base, prec);
  return out;
}

}  // namespace padecert
