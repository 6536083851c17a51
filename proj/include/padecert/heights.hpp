#pragma once

#include "padecert/instance.hpp"
#include "padecert/loglinear.hpp"

namespace padecert {

// A place of Q: the real absolute value or a p-adic one, |p|_p = 1/p.
struct Place {
  bool arch = true;
  unsigned long p = 0;

  static Place infinity() { return Place{true, 0}; }
  static Place finite(unsigned long prime) { return Place{false, prime}; }
  std::string to_string() const {
    return arch ? "inf" : std::to_string(p);
  }
  friend bool operator==(const Place& a, const Place& b) {
    return a.arch == b.arch && (a.arch || a.p == b.p);
  }
};

// Least n > 0 with n x_i integral for all i: the lcm of reduced denominators.
Int denominator_lcm(const std::vector<Rational>& xs);

// Primes dividing some numerator or denominator in the tuple.
std::vector<unsigned long> prime_support(const std::vector<Rational>& xs);

// log|x|_v for x != 0, as an exact log-linear value.
LogLinear log_abs_v(const Rational& x, const Place& v);

// Local height log max(1, |x_1|_v, ..., |x_r|_v) of a tuple.
LogLinear height_v(const std::vector<Rational>& xs, const Place& v);

// Global height: the sum of local heights over all places (finite support).
LogLinear height_global(const std::vector<Rational>& xs);

// log mu(s) with mu(s) = den(s) prod_{q | den(s)} q^{1/(q-1)}.
LogLinear mu_log(const Rational& s);

// mu_n(s) = den(s)^n prod_{q | den(s)} q^{floor(n/(q-1))}; clears the
// denominators of (s)_k / k! for k <= n.
Int mu_n(const Rational& s, unsigned long n);

// d_n(b) = den(1/(b+1), ..., 1/(b+n+1)); requires b outside Z_{<=-1}.
Int d_n(const Rational& b, unsigned long n);

// log mu_v(s): zero at the real place and when |s|_v <= 1, else
// log(|den(s)|_v |p|_v^{1/(p-1)}) <= 0.
LogLinear mu_v_log(const Rational& s, const Place& v);

// The convergence margin V_{v0}(beta); positivity is what the measure needs.
LogLinear V_value(const Instance& inst, const Rational& beta, const Place& v0);

// Remainder decay rate A_{v0}(beta), by its two-branch definition.
LogLinear A_value(const Instance& inst, const Rational& beta, const Place& v0);

// Approximant growth rate U_{v0}(beta).
LogLinear U_value(const Instance& inst, const Rational& beta, const Place& v0);

// Per-place growth budget F_v(n) for the approximant coefficients at beta.
LogLinear F_value(const Instance& inst, const Rational& beta, const Place& v,
                  unsigned long n);

struct MeasureReport {
  Place v0;
  Rational beta;
  Rational epsilon;
  LogLinear V, A, U;
  BigInterval v_iv, a_iv, u_iv;
  bool applicable = false;  // 0 < epsilon < V
  BigInterval mu_iv, c_iv;  // valid when applicable
  mpfr_prec_t prec = 0;
};

// mu = (A + U) / (V - eps) and C = exp(-((log 2)/(V - eps) + 1)(A + U)),
// with every real carried as an outward-rounded interval.
MeasureReport measure(const Instance& inst, const Rational& beta,
                      const Place& v0, const Rational& epsilon,
                      mpfr_prec_t prec = 256);

}  // namespace padecert
