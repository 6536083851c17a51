#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padecert/diffop.hpp"
#include "padecert/poly.hpp"

namespace padecert {

// All rational roots of p with multiplicity; empty remainder means p split.
struct RootSplit {
  std::vector<Rational> roots;
  Poly nonsplit;  // constant when p splits over Q
};
RootSplit rational_roots(const Poly& p);

struct HypothesisFlags {
  bool distinct_roots = false;     // alpha_i pairwise distinct
  bool exponents_ok = false;       // every s_i rational, not in Z_{<=-1}
  bool top_coeff_ok = false;       // b_top not in Z_{<-1}
  bool coprimality_ok = false;     // s_i never a negative integer (= resultant
                                   // condition on a and n a' + b)
  bool leading_nonzero = false;    // k m + n + m + b_top never 0

  bool solvable() const {
    return distinct_roots && exponents_ok && top_coeff_ok;
  }
};

// Defining data of the operator -a(z) d/dz + b(z): a monic of degree m >= 2
// splitting over Q, deg b <= m - 1, with the local exponents s_i = b(alpha_i)
// / a'(alpha_i) attached to the roots of a.
class Instance {
 public:
  unsigned m = 0;
  unsigned w = 0;  // m - 2; the family has w + 1 members
  Poly a, b;
  std::vector<Rational> alpha;
  // s[i] is empty only at a repeated root, where the exponent is undefined.
  std::vector<std::optional<Rational>> s;
  Rational b_top;  // coefficient of z^{m-1} in b (0 when deg b < m - 1)
  HypothesisFlags flags;

  static Instance from_roots(std::vector<Rational> alpha,
                             std::vector<Rational> s);
  // Recovers roots and exponents; throws hypothesis_error when a does not
  // split over Q or is not monic of degree >= 2.
  static Instance from_polys(const Poly& a, const Poly& b);

  DiffOp1 operator_L() const { return DiffOp1::minus_a_d_plus_b(a, b); }

  // Requires every exponent defined.
  Rational exponent(size_t i) const;

  std::string canonical_string() const;

 private:
  void finish();
};

}  // namespace padecert
