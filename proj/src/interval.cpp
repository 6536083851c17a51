#include "padecert/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace padecert {

BigInterval::BigInterval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

BigInterval::BigInterval(const BigInterval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

BigInterval::BigInterval(BigInterval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

BigInterval& BigInterval::operator=(BigInterval o) {
  std::swap(prec_, o.prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

BigInterval::~BigInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

BigInterval BigInterval::from_rational(const Rational& q, mpfr_prec_t prec) {
  BigInterval out(prec);
  mpfr_set_q(out.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, q.get_mpq_t(), MPFR_RNDU);
  return out;
}

BigInterval BigInterval::from_long(long v, mpfr_prec_t prec) {
  BigInterval out(prec);
  mpfr_set_si(out.lo_, v, MPFR_RNDD);
  mpfr_set_si(out.hi_, v, MPFR_RNDU);
  return out;
}

BigInterval BigInterval::log_rational(const Rational& q, mpfr_prec_t prec) {
  if (sgn(q) <= 0) throw std::domain_error("log of non-positive rational");
  BigInterval out(prec);
  mpfr_set_q(out.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_log(out.lo_, out.lo_, MPFR_RNDD);
  mpfr_set_q(out.hi_, q.get_mpq_t(), MPFR_RNDU);
  mpfr_log(out.hi_, out.hi_, MPFR_RNDU);
  return out;
}

BigInterval BigInterval::hull(const BigInterval& a, const BigInterval& b) {
  BigInterval out(std::max(a.prec_, b.prec_));
  mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

BigInterval operator+(const BigInterval& a, const BigInterval& b) {
  BigInterval out(std::max(a.prec_, b.prec_));
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

BigInterval operator-(const BigInterval& a, const BigInterval& b) {
  BigInterval out(std::max(a.prec_, b.prec_));
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

BigInterval operator*(const BigInterval& a, const BigInterval& b) {
  BigInterval out(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, out.prec_);
  mpfr_mul(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  for (auto [x, y] : {std::pair(a.lo_, b.hi_), std::pair(a.hi_, b.lo_),
                      std::pair(a.hi_, b.hi_)}) {
    mpfr_mul(t, x, y, MPFR_RNDD);
    mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
  }
  mpfr_mul(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  for (auto [x, y] : {std::pair(a.lo_, b.lo_), std::pair(a.lo_, b.hi_),
                      std::pair(a.hi_, b.lo_)}) {
    mpfr_mul(t, x, y, MPFR_RNDU);
    mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
  }
  mpfr_clear(t);
  return out;
}

BigInterval operator/(const BigInterval& a, const BigInterval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by 0");
  BigInterval out(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, out.prec_);
  mpfr_div(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  for (auto [x, y] : {std::pair(a.lo_, b.hi_), std::pair(a.hi_, b.lo_),
                      std::pair(a.hi_, b.hi_)}) {
    mpfr_div(t, x, y, MPFR_RNDD);
    mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
  }
  mpfr_div(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  for (auto [x, y] : {std::pair(a.lo_, b.lo_), std::pair(a.lo_, b.hi_),
                      std::pair(a.hi_, b.lo_)}) {
    mpfr_div(t, x, y, MPFR_RNDU);
    mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
  }
  mpfr_clear(t);
  return out;
}

BigInterval BigInterval::operator-() const {
  BigInterval out(prec_);
  mpfr_neg(out.lo_, hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  return out;
}

BigInterval BigInterval::abs() const {
  BigInterval out(prec_);
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  mpfr_set_zero(out.lo_, 1);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  mpfr_max(out.hi_, out.hi_, hi_, MPFR_RNDU);
  return out;
}

BigInterval BigInterval::exp() const {
  BigInterval out(prec_);
  mpfr_exp(out.lo_, lo_, MPFR_RNDD);
  mpfr_exp(out.hi_, hi_, MPFR_RNDU);
  return out;
}

BigInterval BigInterval::log() const {
  if (mpfr_sgn(lo_) <= 0) throw std::domain_error("interval log of non-positive");
  BigInterval out(prec_);
  mpfr_log(out.lo_, lo_, MPFR_RNDD);
  mpfr_log(out.hi_, hi_, MPFR_RNDU);
  return out;
}

bool BigInterval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool BigInterval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool BigInterval::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool BigInterval::is_negative() const { return mpfr_sgn(hi_) < 0; }

bool BigInterval::certainly_less(const BigInterval& o) const {
  return mpfr_cmp(hi_, o.lo_) < 0;
}

double BigInterval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double BigInterval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double BigInterval::mid_double() const {
  return 0.5 * (lo_double() + hi_double());
}

double BigInterval::width() const {
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_sub(t, hi_, lo_, MPFR_RNDU);
  double w = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return w;
}

double BigInterval::relative_width() const {
  double scale = std::max({1.0, std::abs(lo_double()), std::abs(hi_double())});
  return width() / scale;
}

namespace {
std::string format_endpoint(const mpfr_t x, int digits, mpfr_rnd_t rnd) {
  std::string fmt = "%." + std::to_string(digits) +
                    (rnd == MPFR_RNDD ? "RDe" : "RUe");
  char buf[512];
  mpfr_snprintf(buf, sizeof buf, fmt.c_str(), x);
  return buf;
}
}  // namespace

std::string BigInterval::lo_string(int digits) const {
  return format_endpoint(lo_, digits, MPFR_RNDD);
}

std::string BigInterval::hi_string(int digits) const {
  return format_endpoint(hi_, digits, MPFR_RNDU);
}

}  // namespace padecert
