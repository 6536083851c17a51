#pragma once

#include "padecert/exec.hpp"
#include "padecert/heights.hpp"
#include "padecert/padic.hpp"
#include "padecert/pade.hpp"

namespace padecert {

// Geometric majorant certificate: |f_k| <= scale * rho^k for every k, proved
// by induction on the recurrence once the coefficient ratio test closes.
struct GeometricMajorant {
  Rational rho;    // max|alpha_i| < rho
  Rational scale;  // the M in |f_k| <= M rho^k
  unsigned long base_index = 0;  // induction certified from here on

  // Exact bound for |sum_{k >= from} f_k / beta^{k+1}|; requires |beta| > rho.
  Rational tail_bound(const Rational& beta_abs, unsigned long from) const;
};

// Builds the majorant for f_j with rho chosen inside (max|alpha_i|, |beta|).
GeometricMajorant certify_majorant(const SolutionFamily& fam, unsigned j,
                                   const Rational& beta);

// Interval enclosure of f_j(beta) = sum f_{j,k} beta^{-k-1}; requires
// |beta| > max|alpha_i|.
BigInterval eval_arch(const SolutionFamily& fam, unsigned j,
                      const Rational& beta, mpfr_prec_t prec = 256);

// Same evaluation for a bare series with a caller-supplied majorant.
BigInterval eval_arch_series(const LaurentSeries& f,
                             const GeometricMajorant& cert,
                             const Rational& beta, mpfr_prec_t prec = 256);

// Margin of the p-adic convergence condition
// |beta|_p > prod mu_p(s_i)^{-1} H_p(alpha): returns v_p(1/beta) minus the
// critical slope; convergence iff positive.
Rational padic_margin(const Instance& inst, const Rational& beta,
                      unsigned long p);

// p-adic sum of the series for f_j at beta, to N digits past the leading
// valuation.  Requires padic_margin > 0.
PadicValue eval_padic(const SolutionFamily& fam, unsigned j,
                      const Rational& beta, unsigned long p, unsigned long N);

// Enclosure of the remainder value R_{n,j,l}(beta) summed from its own
// coefficients with a certified geometric tail; cross-checks P f - Q.
BigInterval remainder_enclosure(const SolutionFamily& fam,
                                const PadeSystem& sys, unsigned j, unsigned l,
                                const Rational& beta, mpfr_prec_t prec = 256);

struct EstimateRow {
  unsigned n = 0;
  double log_r = 0;        // log |R_{n,0,0}(beta)|_v
  double log_pq = 0;       // log max_{j,l} (|P_{n,l}(beta)|_v, |Q_{n,j,l}|_v)
  bool r_exact = true;     // false when only an upper bound survived
};

struct EstimateReport {
  Place v;
  Rational beta;
  std::vector<EstimateRow> rows;
  // Least-squares slopes of the two row columns against n.
  double slope_r = 0;
  double slope_pq = 0;
  // Linear rates the slopes are measured against.
  double decay_rate = 0;       // A_v(beta); remainder slope should be <= -A
  double growth_rate_u = 0;    // U_v(beta)
  double growth_rate_f = 0;    // (1/n) F_v(n): U plus the m log 4 budget
};

// Exact values of P, Q, R at beta for each supplied system, with regression
// slopes against the decay/growth rates.
EstimateReport check_estimates(const SolutionFamily& fam,
                               const std::vector<PadeSystem>& systems,
                               const Rational& beta, const Place& v,
                               mpfr_prec_t prec = 2048);

struct ScanRow {
  std::vector<long> lambda;
  std::string form_lo, form_hi;  // |form|_{v0} enclosure endpoints
  std::string bound_hi;
  double log_margin = 0;   // log(form lo) - log(bound hi)
  bool violation = false;  // certainly below the bound
  bool undecided = false;  // interval too wide even after escalation
};

struct ScanReport {
  MeasureReport meas;
  unsigned long h_max = 0;
  unsigned long cells = 0;
  double min_log_margin = 0;  // min over cells of log(form lo) - log(bound hi)
  std::vector<ScanRow> flagged;
  std::vector<ScanRow> rows;  // every cell in scan order; filled on request
  unsigned long h0_proxy = 0;  // largest H(lambda) among flagged cells
};

// Exhaustive check of |lambda_0 + sum_j lambda_{j+1} f_j(beta)|_{v0} against
// C H_{v0}(lambda) H(lambda)^{-mu} over 0 < max|lambda_i| <= h_max.
ScanReport linear_form_scan(const SolutionFamily& fam, const Rational& beta,
                            const Place& v0, const Rational& epsilon,
                            unsigned long h_max, mpfr_prec_t prec = 256,
                            Exec mode = Exec::Parallel,
                            bool keep_rows = false);

struct PerronReport {
  unsigned lo = 0, hi = 0;
  double sup_root = 0;       // sup over the window of |f_n|^{1/n}
  double alpha_max = 0;      // largest |root| of a
  double margin = 0;         // alpha_max - sup_root
};

// Checks |f_n|^{1/n} against max|alpha_i| over a window of indices; the
// recurrence's characteristic roots are the alpha_i, so the sup should not
// exceed the largest modulus by more than a vanishing margin.
PerronReport perron_check_series(const LaurentSeries& f,
                                 const Rational& alpha_max_abs, unsigned lo,
                                 unsigned hi);
PerronReport perron_check(const SolutionFamily& fam, unsigned lo = 900,
                          unsigned hi = 1000);

}  // namespace padecert
