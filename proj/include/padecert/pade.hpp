#pragma once

#include "padecert/series.hpp"

namespace padecert {

// P_{n,l} built by n applications of the first-order factors
// a d/dz + (k+1) a' + b, k = n-1 down to 0, then division by n!.
// Polynomial-only arithmetic; degree l + n(m-1) with nonzero leading
// coefficient under the instance hypotheses.
Poly rodrigues_poly(const Instance& inst, unsigned n, unsigned l);

// Same operator as the literal n-th power (d/dz + b/a)^n applied to
// a^n z^l, carried out in rational-function arithmetic.  The denominator
// must cancel completely; a failure to cancel throws.  Reference route for
// cross-checking rodrigues_poly.
Poly rodrigues_poly_power_form(const Instance& inst, unsigned n, unsigned l);

// Closed-form expansion of P_{n,l} as a double composition sum over root
// indices; independent of both Rodrigues routes.
Poly leibniz_poly(const Instance& inst, unsigned n, unsigned l);

// Weight-n approximant table: for each l < m the polynomial P[l], and for
// each family member j the pairing polynomial Q[j][l] with remainder tail
// R[j][l] = P[l] f_j - Q[j][l] of order >= n + 1 at infinity.
struct PadeSystem {
  unsigned n = 0;
  unsigned m = 0;
  std::vector<Poly> P;
  std::vector<std::vector<Poly>> Q;
  std::vector<std::vector<LaurentSeries>> R;
  bool verified = false;
};

PadeSystem build_system(const SolutionFamily& fam, unsigned n,
                        Exec mode = Exec::Parallel);

// Systems for n = 0..n_max with one flat cell grid over (n, j, l).
std::vector<PadeSystem> build_systems(const SolutionFamily& fam,
                                      unsigned n_max,
                                      Exec mode = Exec::Parallel);

// Remainder coefficients r_k = (-1)^n C(k, n) phi_j(t^{k+l-n} a(t)^n) for
// n <= k < n + K (and r_k = 0 for k < n), as a series of length n + K.
LaurentSeries remainder_closed_form(const SolutionFamily& fam, unsigned n,
                                    unsigned j, unsigned l, size_t K);

// phi_j(q) == 0 per family member.
std::vector<bool> kernel_membership(const SolutionFamily& fam, const Poly& q);

// Generic weighted Pade-type system: finds a nonzero P of degree <= M with
// ord(P f_j - Q_j) >= weights[j] + 1 for all j, by exact elimination on the
// coefficient equations sum_i p_i f_{j,k+i} = 0.  Requires sum weights <= M.
struct PadeSolve {
  Poly P;
  std::vector<Poly> Q;
};
PadeSolve solve_pade_linear_system(const SolutionFamily& fam,
                                   const std::vector<unsigned>& weights,
                                   unsigned M);

}  // namespace padecert
