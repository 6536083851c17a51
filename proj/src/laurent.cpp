#include "padecert/laurent.hpp"

namespace padecert {

const Rational& LaurentSeries::coeff(size_t k) const {
  if (k >= c_.size())
    throw truncation_error("coefficient index " + std::to_string(k) +
                           " beyond truncation " + std::to_string(c_.size()));
  return c_[k];
}

void LaurentSeries::set_coeff(size_t k, const Rational& v) {
  if (k >= c_.size())
    throw truncation_error("coefficient index " + std::to_string(k) +
                           " beyond truncation " + std::to_string(c_.size()));
  c_[k] = v;
}

LaurentSeries::OrdInf LaurentSeries::ord_at_infinity() const {
  for (size_t k = 0; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) return {true, static_cast<long>(k) + 1};
  return {false, static_cast<long>(c_.size()) + 1};
}

LaurentSeries LaurentSeries::truncated(size_t new_T) const {
  if (new_T > c_.size())
    throw truncation_error("cannot extend truncation " +
                           std::to_string(c_.size()) + " to " +
                           std::to_string(new_T));
  return LaurentSeries(std::vector<Rational>(c_.begin(), c_.begin() + new_T));
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  size_t T = std::min(a.c_.size(), b.c_.size());
  std::vector<Rational> c(T);
  for (size_t k = 0; k < T; ++k) c[k] = a.c_[k] + b.c_[k];
  return LaurentSeries(std::move(c));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  size_t T = std::min(a.c_.size(), b.c_.size());
  std::vector<Rational> c(T);
  for (size_t k = 0; k < T; ++k) c[k] = a.c_[k] - b.c_[k];
  return LaurentSeries(std::move(c));
}

LaurentSeries operator*(const Rational& c, const LaurentSeries& f) {
  std::vector<Rational> out(f.c_.size());
  for (size_t k = 0; k < out.size(); ++k) out[k] = c * f.c_[k];
  return LaurentSeries(std::move(out));
}

LaurentSeries::PolyProduct LaurentSeries::mul_by_poly(const Poly& p) const {
  // p(z) sum_k c_k z^{-k-1} = sum_{e>=0} (sum_{i>e} p_i c_{i-1-e}) z^e
  //                         + sum_{e>=0} (sum_i p_i c_{e+i}) z^{-e-1}.
  size_t T = c_.size();
  if (p.is_zero()) return {Poly(), LaurentSeries(T)};
  size_t d = static_cast<size_t>(p.degree());
  if (d >= T)
    throw truncation_error("polynomial degree " + std::to_string(d) +
                           " too large for truncation " + std::to_string(T));
  std::vector<Rational> head(d, Rational(0));
  for (size_t e = 0; e < d; ++e)
    for (size_t i = e + 1; i <= d; ++i) head[e] += p.coeff(i) * c_[i - 1 - e];
  std::vector<Rational> tail(T - d, Rational(0));
  for (size_t e = 0; e + d < T; ++e)
    for (size_t i = 0; i <= d; ++i) tail[e] += p.coeff(i) * c_[e + i];
  return {Poly(std::move(head)), LaurentSeries(std::move(tail))};
}

LaurentSeries LaurentSeries::derivative() const {
  std::vector<Rational> out(c_.size() + 1, Rational(0));
  for (size_t k = 0; k < c_.size(); ++k)
    out[k + 1] = Rational(-(static_cast<long>(k) + 1)) * c_[k];
  return LaurentSeries(std::move(out));
}

}  // namespace padecert
