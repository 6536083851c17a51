#pragma once

#include <vector>

#include "padecert/exec.hpp"
#include "padecert/instance.hpp"
#include "padecert/laurent.hpp"

namespace padecert {

enum class Route { Recurrence, ClosedForm };

// The w + 1 normalized solutions f_0, ..., f_w of the tail equations of
// L f = (polynomial), truncated at T terms.  Normalization: f_{j,k} = 0 for
// k < j, f_{j,j} = 1.
struct SolutionFamily {
  Instance inst;
  size_t T = 0;
  std::vector<LaurentSeries> f;
  std::vector<Route> provenance;
};

// Canonical seed row for f_j: delta at j, hypergeometric closed-form values
// for j < k <= w.
std::vector<Rational> canonical_seeds(const Instance& inst, unsigned j);

// Linear recurrence route.  seeds[j] must hold w + 1 values.
SolutionFamily build_by_recurrence(
    const Instance& inst, const std::vector<std::vector<Rational>>& seeds,
    size_t T);

// Hypergeometric closed-form route, cell-parallel over coefficient index.
LaurentSeries closed_form_series(const Instance& inst, unsigned j, size_t T,
                                 Exec mode = Exec::Parallel);

SolutionFamily build_family(const Instance& inst, size_t T,
                            Route route = Route::Recurrence,
                            Exec mode = Exec::Parallel);

// Single closed-form coefficient f_{j, j+k} via the convolution form of the
// defining double series.
Rational lauricella_coeff(const Instance& inst, unsigned j, unsigned long k);
// Same value by literal enumeration of m-part compositions; exponential in
// m, used as an independent cross-check at small k.
Rational lauricella_coeff_enumerated(const Instance& inst, unsigned j,
                                     unsigned long k);

// L f split into polynomial head (deg <= w for family members) and tail.
LaurentSeries::PolyProduct apply_operator(const Instance& inst,
                                          const LaurentSeries& f);

// phi_f(p) = sum_k p_k f_k; requires deg p < T.
Rational phi(const LaurentSeries& f, const Poly& p);

// phi_f applied to (P(z) - P(t)) / (z - t) in t, a polynomial in z of
// degree <= deg P - 1.  Requires deg P <= T.
Poly phi_bivariate(const LaurentSeries& f, const Poly& P);

// (d/dz)^{m-1} (a d/dz - b), both by operator composition and by the
// binomial expansion with coefficients C(m,i) a^(i) and C(m-1,j) (a'+b)^(j).
struct JpExpansion {
  DiffOpN composed;
  DiffOpN expanded;
  bool equal = false;
};
JpExpansion jp_expand(const Instance& inst);

struct FamilyCheck {
  bool orders_ok = false;      // ord f_j = j + 1 exactly
  bool heads_ok = false;       // L f_j = (b_top + j + 1) z^{m-j-2}, tail 0
  bool seed_matrix_ok = false; // (f_{j,k})_{j,k<=w} unit upper triangular
  bool all_ok() const { return orders_ok && heads_ok && seed_matrix_ok; }
};
FamilyCheck verify_family(const SolutionFamily& fam);

}  // namespace padecert
