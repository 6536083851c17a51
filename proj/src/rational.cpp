#include "padecert/rational.hpp"

namespace padecert {

Rational rat_from_string(const std::string& text) {
  if (text.empty()) throw parse_error("empty rational literal");
  auto check_digits = [&](size_t from, size_t to) {
    if (from >= to) return false;
    size_t i = from;
    if (text[i] == '-' || text[i] == '+') ++i;
    if (i >= to) return false;
    for (; i < to; ++i)
      if (text[i] < '0' || text[i] > '9') return false;
    return true;
  };
  size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!check_digits(0, text.size()))
      throw parse_error("malformed rational literal '" + text + "'");
  } else {
    if (!check_digits(0, slash) || !check_digits(slash + 1, text.size()))
      throw parse_error("malformed rational literal '" + text + "'");
    if (text.find('/', slash + 1) != std::string::npos)
      throw parse_error("malformed rational literal '" + text + "'");
  }
  Rational out;
  if (out.set_str(text, 10) != 0)
    throw parse_error("malformed rational literal '" + text + "'");
  if (sgn(out.get_den()) == 0)
    throw parse_error("zero denominator in rational literal '" + text + "'");
  out.canonicalize();
  return out;
}

std::string rat_to_string(const Rational& x) {
  return x.get_str(10);
}

// Representation-independent: a raw two-argument mpq_class is not
// canonicalized, so test divisibility instead of den == 1.
bool is_integer(const Rational& x) {
  return mpz_divisible_p(mpq_numref(x.get_mpq_t()),
                         mpq_denref(x.get_mpq_t())) != 0;
}

bool is_integer_leq(const Rational& x, long bound) {
  if (!is_integer(x)) return false;
  Rational y = x;
  y.canonicalize();
  return y.get_num() <= bound;
}

Int factorial(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Int binomial_uint(unsigned long n, unsigned long k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational pochhammer(const Rational& a, unsigned long k) {
  Rational out = 1;
  Rational term = a;
  for (unsigned long i = 0; i < k; ++i) {
    out *= term;
    term += 1;
  }
  return out;
}

Rational pow_rational(const Rational& x, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num().get_mpz_t(), x.get_num().get_mpz_t(), e);
  mpz_pow_ui(out.get_den().get_mpz_t(), x.get_den().get_mpz_t(), e);
  out.canonicalize();
  return out;
}

long padic_valuation(const Int& x, unsigned long p) {
  if (sgn(x) == 0) return kValInfinity;
  Int pz(p);
  mpz_class tmp;
  return static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

long padic_valuation(const Rational& x, unsigned long p) {
  if (sgn(x) == 0) return kValInfinity;
  return padic_valuation(Int(x.get_num()), p) -
         padic_valuation(Int(x.get_den()), p);
}

Rational padic_abs(const Rational& x, unsigned long p) {
  if (sgn(x) == 0) return 0;
  long v = padic_valuation(x, p);
  Rational out;
  Int pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), p, static_cast<unsigned long>(v < 0 ? -v : v));
  if (v >= 0)
    out = Rational(1, pw);
  else
    out = Rational(pw, 1);
  out.canonicalize();
  return out;
}

std::vector<std::pair<Int, unsigned long>> factorize(const Int& n_in) {
  if (sgn(n_in) <= 0) throw std::invalid_argument("factorize: n must be > 0");
  std::vector<std::pair<Int, unsigned long>> out;
  Int n = n_in;
  auto strip = [&](const Int& p) {
    unsigned long e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  strip(Int(2));
  Int p = 3;
  while (p * p <= n) {
    strip(p);
    p += 2;
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Int euler_phi(const Int& n) {
  Int out = 1;
  for (const auto& [p, e] : factorize(n)) {
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), e - 1);
    out *= pw * (p - 1);
  }
  return out;
}

unsigned long floor_log(const Int& x, unsigned long p) {
  if (x < 1) throw std::invalid_argument("floor_log: x must be >= 1");
  unsigned long e = 0;
  Int acc = p;
  while (acc <= x) {
    acc *= static_cast<unsigned long>(p);
    ++e;
  }
  return e;
}

namespace {
void compositions_rec(
    unsigned parts, unsigned long total, std::vector<unsigned long>& cur,
    const std::function<void(const std::vector<unsigned long>&)>& cb) {
  if (parts == 1) {
    cur.push_back(total);
    cb(cur);
    cur.pop_back();
    return;
  }
  for (unsigned long first = 0; first <= total; ++first) {
    cur.push_back(first);
    compositions_rec(parts - 1, total - first, cur, cb);
    cur.pop_back();
  }
}
}  // namespace

void for_compositions(
    unsigned parts, unsigned long total,
    const std::function<void(const std::vector<unsigned long>&)>& cb) {
  if (parts == 0) throw std::invalid_argument("for_compositions: parts == 0");
  std::vector<unsigned long> cur;
  compositions_rec(parts, total, cur, cb);
}

}  // namespace padecert
