#pragma once

#include "padecert/rational.hpp"

namespace padecert {

// x mod p^N for a rational with v_p(x) >= 0, via a modular inverse of the
// denominator.  Result lies in [0, p^N).
Int rational_mod_pn(const Rational& x, unsigned long p, unsigned long N);

// p^e as an Int.
Int pow_p(unsigned long p, unsigned long e);

// A p-adic number known modulo p^abs_prec, stored as p^val * unit with the
// unit carried modulo p^(abs_prec - val).  "Zero to precision" means the
// value is congruent to 0 mod p^abs_prec; its true valuation is unknown.
class PadicValue {
 public:
  static PadicValue from_rational(const Rational& x, unsigned long p,
                                  long abs_prec);
  static PadicValue zero(unsigned long p, long abs_prec);

  unsigned long prime() const { return p_; }
  long abs_prec() const { return abs_prec_; }
  bool is_zero_to_precision() const { return zero_; }
  // Requires a nonzero representative.
  long valuation() const;
  const Int& unit() const;

  // Value mod p^N; requires val >= 0 and N <= abs_prec.
  Int residue(unsigned long N) const;

  friend PadicValue operator+(const PadicValue& a, const PadicValue& b);
  friend PadicValue operator-(const PadicValue& a, const PadicValue& b);
  friend PadicValue operator*(const PadicValue& a, const PadicValue& b);

  std::string to_string() const;

 private:
  PadicValue(unsigned long p, long abs_prec)
      : p_(p), abs_prec_(abs_prec) {}
  static PadicValue make(unsigned long p, long abs_prec, long val,
                         const Int& unit);
  static PadicValue add_sub(const PadicValue& a, const PadicValue& b,
                            bool negate_b);
  void normalize();  // strips p-powers out of unit_, clamps to precision

  unsigned long p_ = 0;
  long abs_prec_ = 0;
  bool zero_ = true;
  long val_ = 0;
  Int unit_ = 0;
};

}  // namespace padecert
