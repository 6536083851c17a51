#pragma once

#include <gmpxx.h>

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace padecert {

using Int = mpz_class;
using Rational = mpq_class;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct hypothesis_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct truncation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "p/q" or "p" (base 10). Rejects zero denominators and any
// non-canonical garbage; the result is always reduced with q > 0.
Rational rat_from_string(const std::string& text);

// Canonical "p/q" form, plain "p" when the denominator is 1.
std::string rat_to_string(const Rational& x);

bool is_integer(const Rational& x);

// True when x is an integer and x <= bound.
bool is_integer_leq(const Rational& x, long bound);

Int factorial(unsigned long n);
Int binomial_uint(unsigned long n, unsigned long k);

// Rising factorial a(a+1)...(a+k-1); empty product for k = 0.
Rational pochhammer(const Rational& a, unsigned long k);

Rational pow_rational(const Rational& x, unsigned long e);

// v_p(x) for x != 0; +infinity is represented by kValInfinity for x = 0.
inline constexpr long kValInfinity = std::numeric_limits<long>::max();
long padic_valuation(const Rational& x, unsigned long p);
long padic_valuation(const Int& x, unsigned long p);

// |x|_p as an exact rational (p^-v). Requires x != 0 handling by caller
// for the zero case (|0|_p = 0).
Rational padic_abs(const Rational& x, unsigned long p);

// Trial-division factorization; at desk scale inputs are small.  Pairs are
// (prime, exponent) in increasing prime order.  Requires n > 0.
std::vector<std::pair<Int, unsigned long>> factorize(const Int& n);

Int euler_phi(const Int& n);

// floor(log_p(x)) for x >= 1.
unsigned long floor_log(const Int& x, unsigned long p);

// Calls cb once per ordered tuple of `parts` nonnegative integers summing to
// `total`.
void for_compositions(
    unsigned parts, unsigned long total,
    const std::function<void(const std::vector<unsigned long>&)>& cb);

}  // namespace padecert
