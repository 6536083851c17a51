#pragma once

#include "padecert/linalg.hpp"
#include "padecert/pade.hpp"

namespace padecert {

// One named hypothesis check; informational entries never gate the verdict.
struct HypothesisReport {
  struct Entry {
    std::string name;
    bool pass = false;
    bool informational = false;
    std::string witness;
  };
  std::vector<Entry> entries;
  bool all_pass = false;

  const Entry* find(const std::string& name) const;
};

// Checks the instance hypotheses: pairwise distinct roots, exponents outside
// Z_{<=-1}, top coefficient outside Z_{<-1}, coprimality of a with n a' + b
// both per-n (n <= n_max) and symbolically for all n via the resultant in n,
// and the non-vanishing of the leading recurrence coefficient.  The textual
// variant "n a' + b coprime with b" is computed as an informational entry.
HypothesisReport check_hypotheses(const Instance& inst, unsigned n_max);

// Resultant in n of a(z) and n a'(z) + b(z), by Bareiss elimination on the
// Sylvester matrix over Q[n].
Poly coprimality_resultant(const Instance& inst);

// Positive integer roots of p, via divisor enumeration on the integer
// normalization.
std::vector<long> positive_integer_roots(const Poly& p);

// M_n = (phi_j(t^k a^n))_{0 <= j,k <= w}.  Requires T > w + n m.
Matrix<Rational> build_Mn(const SolutionFamily& fam, unsigned n);

// Determinant data for one weight n.
struct DeterminantReport {
  unsigned n = 0;
  Rational det_Mn;
  bool delta_constant = false;
  Rational delta;  // valid when delta_constant
  bool nonzero = false;
  // Delta_n == (-1)^{n(w+1)} lc(P_{n,w+1}) det M_n, an exact scalar bridge
  // between the polynomial and numeric certificates.
  bool scalar_relation_ok = false;
};

// Delta_n as the m x m polynomial determinant with row 0 = (P_{n,l})_l and
// row j+1 = (Q_{n,j,l})_l, evaluated fraction-free over Q[z].
DeterminantReport build_Delta(const SolutionFamily& fam,
                              const PadeSystem& sys);

}  // namespace padecert
