#pragma once

#include <optional>
#include <vector>

#include "padecert/poly.hpp"
#include "padecert/rational.hpp"

namespace padecert {

template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  T& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

 private:
  size_t rows_, cols_;
  std::vector<T> data_;
};

template <typename T>
struct RingOps;

template <>
struct RingOps<Rational> {
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational divexact(const Rational& a, const Rational& b) {
    return a / b;
  }
};

template <>
struct RingOps<Poly> {
  static bool is_zero(const Poly& x) { return x.is_zero(); }
  static Poly divexact(const Poly& a, const Poly& b) {
    return Poly::divexact(a, b);
  }
};

// Fraction-free Bareiss elimination with row pivoting.  Every interior
// division is exact in the coefficient domain (Sylvester's identity), which
// RingOps<T>::divexact enforces.
template <typename T>
T det_bareiss(Matrix<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square");
  size_t n = m.rows();
  if (n == 0) return T(1);
  int sign = 1;
  T prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t pivot = k;
    while (pivot < n && RingOps<T>::is_zero(m.at(pivot, k))) ++pivot;
    if (pivot == n) return T(0);
    if (pivot != k) {
      for (size_t j = k; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m.at(i, j) = RingOps<T>::divexact(
            m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
      m.at(i, k) = T(0);
    }
    prev = m.at(k, k);
  }
  T det = m.at(n - 1, n - 1);
  return sign < 0 ? T(0) - det : det;
}

// One nonzero kernel vector of an underdetermined system m * x = 0, chosen
// deterministically: reduced row echelon form, first free variable set to 1,
// remaining free variables 0.  Empty result if the kernel is trivial.
inline std::optional<std::vector<Rational>> kernel_vector(Matrix<Rational> m) {
  size_t rows = m.rows(), cols = m.cols();
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && sgn(m.at(p, c)) == 0) ++p;
    if (p == rows) continue;
    for (size_t j = c; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = 1 / m.at(r, c);
    for (size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m.at(i, c)) == 0) continue;
      Rational f = m.at(i, c);
      for (size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  size_t free_col = cols;
  for (size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  if (free_col == cols) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  x[free_col] = 1;
  for (size_t i = 0; i < pivot_col.size(); ++i)
    x[pivot_col[i]] = -m.at(i, free_col);
  return x;
}

}  // namespace padecert
