#include "padecert/padic.hpp"

#include <algorithm>
#include <sstream>

namespace padecert {

Int pow_p(unsigned long p, unsigned long e) {
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, e);
  return out;
}

Int rational_mod_pn(const Rational& x, unsigned long p, unsigned long N) {
  if (sgn(x) != 0 && padic_valuation(x, p) < 0)
    throw std::domain_error("residue of a rational with negative valuation");
  const Int mod = pow_p(p, N);
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(),
                 mod.get_mpz_t()) == 0)
    throw std::domain_error("denominator not invertible mod p^N");
  Int r = Int(x.get_num()) * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return r;
}

void PadicValue::normalize() {
  const long m = abs_prec_ - val_;
  if (m <= 0) {
    zero_ = true;
    val_ = 0;
    unit_ = 0;
    return;
  }
  const Int mod = pow_p(p_, static_cast<unsigned long>(m));
  mpz_mod(unit_.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t());
  if (unit_ == 0) {
    zero_ = true;
    val_ = 0;
    return;
  }
  zero_ = false;
  const long e = padic_valuation(unit_, p_);
  if (e > 0) {
    Int q = pow_p(p_, static_cast<unsigned long>(e));
    mpz_divexact(unit_.get_mpz_t(), unit_.get_mpz_t(), q.get_mpz_t());
    val_ += e;
  }
}

PadicValue PadicValue::zero(unsigned long p, long abs_prec) {
  PadicValue z(p, abs_prec);
  z.zero_ = true;
  return z;
}

PadicValue PadicValue::make(unsigned long p, long abs_prec, long val,
                            const Int& unit) {
  PadicValue out(p, abs_prec);
  out.zero_ = false;
  out.val_ = val;
  out.unit_ = unit;
  out.normalize();
  return out;
}

PadicValue PadicValue::from_rational(const Rational& x, unsigned long p,
                                     long abs_prec) {
  if (sgn(x) == 0) return zero(p, abs_prec);
  const long v = padic_valuation(x, p);
  if (v >= abs_prec) return zero(p, abs_prec);
  // Peel p^v off the reduced fraction, then take the unit residue.
  Int num(x.get_num()), den(x.get_den());
  if (v > 0) {
    Int q = pow_p(p, static_cast<unsigned long>(v));
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
  } else if (v < 0) {
    Int q = pow_p(p, static_cast<unsigned long>(-v));
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), q.get_mpz_t());
  }
  Rational y(num, den);
  y.canonicalize();
  return make(p, abs_prec, v,
              rational_mod_pn(y, p, static_cast<unsigned long>(abs_prec - v)));
}

long PadicValue::valuation() const {
  if (zero_)
    throw std::logic_error("valuation of a value that is zero to precision");
  return val_;
}

const Int& PadicValue::unit() const {
  if (zero_)
    throw std::logic_error("unit of a value that is zero to precision");
  return unit_;
}

Int PadicValue::residue(unsigned long N) const {
  if (static_cast<long>(N) > abs_prec_)
    throw std::logic_error("residue request beyond stored precision");
  if (zero_) return 0;
  if (val_ < 0)
    throw std::domain_error("residue of a negative-valuation value");
  const Int mod = pow_p(p_, N);
  Int r = unit_ * pow_p(p_, static_cast<unsigned long>(val_));
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return r;
}

PadicValue PadicValue::add_sub(const PadicValue& a, const PadicValue& b,
                               bool negate_b) {
  if (a.p_ != b.p_)
    throw std::invalid_argument("p-adic arithmetic across different primes");
  const unsigned long p = a.p_;
  const long abs = std::min(a.abs_prec_, b.abs_prec_);
  if (a.zero_ && b.zero_) return zero(p, abs);
  if (a.zero_ || b.zero_) {
    // Only the surviving summand shows; precision drops to the common one.
    const PadicValue& x = a.zero_ ? b : a;
    Int u = (a.zero_ && negate_b) ? Int(-x.unit_) : x.unit_;
    return make(p, abs, x.val_, u);
  }
  const long v = std::min(a.val_, b.val_);
  if (abs - v <= 0) return zero(p, abs);
  Int acc = a.unit_ * pow_p(p, static_cast<unsigned long>(a.val_ - v));
  Int bterm = b.unit_ * pow_p(p, static_cast<unsigned long>(b.val_ - v));
  if (negate_b)
    acc -= bterm;
  else
    acc += bterm;
  return make(p, abs, v, acc);
}

PadicValue operator+(const PadicValue& a, const PadicValue& b) {
  return PadicValue::add_sub(a, b, false);
}

PadicValue operator-(const PadicValue& a, const PadicValue& b) {
  return PadicValue::add_sub(a, b, true);
}

PadicValue operator*(const PadicValue& a, const PadicValue& b) {
  if (a.p_ != b.p_)
    throw std::invalid_argument("p-adic arithmetic across different primes");
  const unsigned long p = a.p_;
  if (a.zero_ || b.zero_) {
    // v(xy) >= abs(zero side) + val(other side): the zero certificate
    // propagates with the partner's valuation added on.
    long bound;
    if (a.zero_ && b.zero_)
      bound = a.abs_prec_ + b.abs_prec_;
    else if (a.zero_)
      bound = a.abs_prec_ + b.val_;
    else
      bound = b.abs_prec_ + a.val_;
    return PadicValue::zero(p, bound);
  }
  const long n = std::min(a.abs_prec_ - a.val_, b.abs_prec_ - b.val_);
  const long val = a.val_ + b.val_;
  return PadicValue::make(p, val + n, val, Int(a.unit_ * b.unit_));
}

std::string PadicValue::to_string() const {
  std::ostringstream os;
  if (zero_) {
    os << "O(" << p_ << "^" << abs_prec_ << ")";
    return os.str();
  }
  os << unit_.get_str() << "*" << p_ << "^" << val_ << " + O(" << p_ << "^"
     << abs_prec_ << ")";
  return os.str();
}

}  // namespace padecert
