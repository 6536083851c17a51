#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "padecert/interval.hpp"
#include "padecert/linalg.hpp"
#include "padecert/loglinear.hpp"
#include "padecert/poly.hpp"
#include "padecert/rational.hpp"
#include "padecert/toml_lite.hpp"

using namespace padecert;

namespace {

Rational rnd_rational(std::mt19937& gen, long num_bound, long den_bound) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  Rational q(num(gen), den(gen));
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("rational parsing round trips and rejects garbage") {
  CHECK(rat_from_string("3/4") == Rational(3, 4));
  CHECK(rat_from_string("-6/8") == Rational(-3, 4));
  CHECK(rat_from_string("0") == 0);
  CHECK(rat_to_string(Rational(-3, 4)) == "-3/4");
  CHECK(rat_to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(rat_from_string("1/0"), parse_error);
  CHECK_THROWS_AS(rat_from_string(""), parse_error);
  CHECK_THROWS_AS(rat_from_string("2x"), parse_error);
  CHECK_THROWS_AS(rat_from_string("1/ 2"), parse_error);

  std::mt19937 gen(7);
  for (int i = 0; i < 100; ++i) {
    Rational q = rnd_rational(gen, 1000, 1000);
    CHECK(rat_from_string(rat_to_string(q)) == q);
  }
}

TEST_CASE("integer predicates and combinatorial helpers") {
  CHECK(is_integer(Rational(4, 2)));
  CHECK(!is_integer(Rational(1, 2)));
  CHECK(is_integer_leq(Rational(-3), -1));
  CHECK(!is_integer_leq(Rational(-3), -4));
  CHECK(!is_integer_leq(Rational(-7, 2), 0));

  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(binomial_uint(10, 3) == 120);
  CHECK(binomial_uint(3, 10) == 0);
  // Pascal identity on a grid.
  for (unsigned long n = 1; n < 12; ++n)
    for (unsigned long k = 1; k <= n; ++k)
      CHECK(binomial_uint(n, k) ==
            binomial_uint(n - 1, k) + binomial_uint(n - 1, k - 1));

  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer(Rational(-2), 5) == 0);
  CHECK(pochhammer(Rational(3), 0) == 1);
  // (a)_{k+1} = (a)_k (a + k)
  std::mt19937 gen(11);
  for (int i = 0; i < 50; ++i) {
    Rational a = rnd_rational(gen, 20, 6);
    unsigned long k = static_cast<unsigned long>(i % 7);
    CHECK(pochhammer(a, k + 1) == pochhammer(a, k) * (a + Rational(k)));
  }

  CHECK(pow_rational(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(pow_rational(Rational(5), 0) == 1);
}

TEST_CASE("p-adic valuation, factorization, totient") {
  CHECK(padic_valuation(Rational(12), 2) == 2);
  CHECK(padic_valuation(Rational(5, 8), 2) == -3);
  CHECK(padic_valuation(Rational(0), 2) == kValInfinity);
  CHECK(padic_abs(Rational(5, 8), 2) == 8);
  CHECK(padic_abs(Rational(12), 2) == Rational(1, 4));

  auto f = factorize(Int(360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::make_pair(Int(2), 3UL));
  CHECK(f[1] == std::make_pair(Int(3), 2UL));
  CHECK(f[2] == std::make_pair(Int(5), 1UL));

  CHECK(euler_phi(Int(1)) == 1);
  CHECK(euler_phi(Int(60)) == 16);
  CHECK(euler_phi(Int(97)) == 96);

  CHECK(floor_log(Int(1), 2) == 0);
  CHECK(floor_log(Int(8), 2) == 3);
  CHECK(floor_log(Int(80), 3) == 3);
}

TEST_CASE("compositions enumerate the full simplex") {
  unsigned long count = 0;
  unsigned long weight = 0;
  for_compositions(3, 5, [&](const std::vector<unsigned long>& ks) {
    REQUIRE(ks.size() == 3);
    unsigned long sum = 0;
    for (auto k : ks) sum += k;
    CHECK(sum == 5);
    ++count;
    weight += ks[0];
  });
  CHECK(count == 21);  // C(5 + 2, 2)
  CHECK(weight == 35);  // sum of first coordinates over the simplex
}

TEST_CASE("polynomial arithmetic, division, gcd") {
  const Poly z = Poly::variable();
  const Poly p = z * z - z;  // z^2 - z
  CHECK(p.degree() == 2);
  CHECK(p.coeff(1) == -1);
  CHECK(p.eval(Rational(3)) == 6);
  CHECK(p.to_string() == "z^2 - z");
  CHECK(Poly().degree() == -1);
  CHECK((p - p).is_zero());

  Poly q, r;
  Poly::divmod(z * z * z + Poly(1), z + Poly(1), q, r);
  CHECK(q == z * z - z + Poly(1));
  CHECK(r.is_zero());

  std::mt19937 gen(13);
  for (int i = 0; i < 40; ++i) {
    std::vector<Rational> ac, bc;
    for (int k = 0; k < 5; ++k) ac.push_back(rnd_rational(gen, 9, 4));
    for (int k = 0; k < 3; ++k) bc.push_back(rnd_rational(gen, 9, 4));
    Poly a(ac), b(bc);
    if (b.is_zero()) continue;
    Poly::divmod(a, b, q, r);
    CHECK(a == b * q + r);
    CHECK(r.degree() < b.degree());
    CHECK(Poly::divexact(a * b, b) == a);
  }

  const Poly g = Poly::gcd(p, z);  // gcd(z^2 - z, z) = z
  CHECK(g == z);
  CHECK(Poly::gcd(z + Poly(1), z).degree() == 0);
  // gcd is monic regardless of input scaling
  CHECK(Poly::gcd(Rational(3) * p, Rational(7, 2) * z) == z);

  CHECK(p.derivative() == Rational(2) * z - Poly(1));
  CHECK(p.shifted(2) == z * z * z * z - z * z * z);
  CHECK((z + Poly(1)).pow(2) == z * z + Rational(2) * z + Poly(1));
  CHECK((Rational(4) * z + Poly(2)).monic() == z + Poly(Rational(1, 2)));
}

TEST_CASE("Bareiss determinant agrees with expansion and stays in the ring") {
  Matrix<Rational> m2(2, 2);
  m2.at(0, 0) = Rational(1, 2);
  m2.at(0, 1) = 3;
  m2.at(1, 0) = -2;
  m2.at(1, 1) = Rational(5, 7);
  CHECK(det_bareiss(m2) == Rational(1, 2) * Rational(5, 7) - Rational(-6));

  // Vandermonde 4x4 against the closed product.
  std::vector<Rational> xs = {Rational(1, 2), 2, -3, Rational(7, 5)};
  Matrix<Rational> v(4, 4);
  for (size_t i = 0; i < 4; ++i) {
    Rational pw = 1;
    for (size_t j = 0; j < 4; ++j) {
      v.at(i, j) = pw;
      pw *= xs[i];
    }
  }
  Rational expect = 1;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j) expect *= xs[j] - xs[i];
  CHECK(det_bareiss(v) == expect);

  // Polynomial entries: det [[z, 1], [1, z]] = z^2 - 1.
  const Poly z = Poly::variable();
  Matrix<Poly> mp(2, 2);
  mp.at(0, 0) = z;
  mp.at(0, 1) = Poly(1);
  mp.at(1, 0) = Poly(1);
  mp.at(1, 1) = z;
  CHECK(det_bareiss(mp) == z * z - Poly(1));

  // Singular matrix.
  Matrix<Rational> s(3, 3, Rational(1));
  CHECK(det_bareiss(s) == 0);
  auto kv = kernel_vector(s);
  REQUIRE(kv.has_value());
  Rational dot = 0;
  for (const auto& x : *kv) dot += x;
  CHECK(dot == 0);  // every row of the all-ones matrix pairs to the same sum
}

TEST_CASE("interval arithmetic always encloses the exact value") {
  std::mt19937 gen(17);
  for (int i = 0; i < 120; ++i) {
    Rational a = rnd_rational(gen, 1000, 50);
    Rational b = rnd_rational(gen, 1000, 50);
    BigInterval ia = BigInterval::from_rational(a, 64);
    BigInterval ib = BigInterval::from_rational(b, 64);
    CHECK((ia + ib).contains(a + b));
    CHECK((ia - ib).contains(a - b));
    CHECK((ia * ib).contains(a * b));
    if (sgn(b) != 0 && !ib.contains_zero()) {
      Rational q = a / b;
      CHECK((ia / ib).contains(q));
    }
    CHECK(ia.abs().contains(abs(a)));
  }

  BigInterval four = BigInterval::from_long(4, 128);
  CHECK(four.log().contains_zero() == false);
  CHECK(BigInterval::log_rational(Rational(1), 128).contains(Rational(0)));

  // exp(log x) recovers x within the outward rounding.
  BigInterval x = BigInterval::from_rational(Rational(17, 3), 192);
  BigInterval back = x.log().exp();
  CHECK(back.contains(Rational(17, 3)));
  CHECK(back.relative_width() < 1e-40);

  BigInterval lo = BigInterval::from_long(1, 64);
  BigInterval hi = BigInterval::from_long(2, 64);
  CHECK(lo.certainly_less(hi));
  CHECK(!hi.certainly_less(lo));
  CHECK(!lo.certainly_less(lo));
}

TEST_CASE("interval endpoint strings are outward and deterministic") {
  BigInterval x = BigInterval::from_rational(Rational(1, 3), 128);
  CHECK(x.lo_string() == x.lo_string());
  CHECK(x.lo_string().substr(0, 6) == "3.3333");
  CHECK(x.hi_string().substr(0, 6) == "3.3333");
  CHECK(x.lo_string() <= x.hi_string());
}

TEST_CASE("log-linear values cancel algebraically") {
  LogLinear l4 = LogLinear::from_log(Rational(4));
  CHECK(l4 == LogLinear::log_term(Rational(2), Rational(2)));
  LogLinear half = LogLinear::from_log(Rational(1, 2));
  CHECK((l4 + half + half).is_zero());

  // log 12 = 2 log 2 + log 3 and mixed-base sums stay exact.
  LogLinear twelve = LogLinear::from_log(Rational(12));
  LogLinear expect = LogLinear::log_term(Rational(2), Rational(2)) +
                     LogLinear::log_term(Rational(1), Rational(3));
  CHECK(twelve == expect);

  LogLinear c = LogLinear::from_rational(Rational(5, 3));
  CHECK(c.constant() == Rational(5, 3));
  CHECK((Rational(3) * c).constant() == 5);

  // Enclosure of log 8 - 3 log 2 collapses to the exact zero.
  LogLinear zero = LogLinear::from_log(Rational(8)) -
                   LogLinear::log_term(Rational(3), Rational(2));
  CHECK(zero.is_zero());
  CHECK(zero.enclose(64).contains(Rational(0)));

  BigInterval e = (LogLinear::from_rational(Rational(1)) +
                   LogLinear::from_log(Rational(3, 2)))
                      .enclose(128);
  // 1 + log(3/2) = 1.405465...
  CHECK(e.lo_double() > 1.40546);
  CHECK(e.hi_double() < 1.40547);
}

TEST_CASE("toml subset: values, arrays, comments, diagnostics") {
  const std::string text =
      "# instance file\n"
      "alpha = [\"0\", \"1\"]\n"
      "s = [\"1/2\", \"1/2\"]  # exponents\n"
      "n_max = 12\n"
      "beta = \"100000\"\n"
      "exact = true\n"
      "window = [3, -4, 5]\n";
  toml::Table t = toml::parse(text);
  REQUIRE(t.entries.size() == 6);
  REQUIRE(t.has("alpha"));
  CHECK(t.find("alpha")->items.size() == 2);
  CHECK(t.find("alpha")->items[1].str == "1");
  CHECK(t.find("n_max")->integer == 12);
  CHECK(t.find("beta")->str == "100000");
  CHECK(t.find("exact")->boolean == true);
  REQUIRE(t.find("window")->items.size() == 3);
  CHECK(t.find("window")->items[1].integer == -4);
  CHECK(t.find("s")->line == 3);
  CHECK(!t.has("absent"));

  auto line_of = [](const std::string& bad) {
    try {
      toml::parse(bad);
    } catch (const parse_error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(line_of("x 3\n") == "line 1: expected '=' after key 'x'");
  CHECK(line_of("a = 1\na = 2\n").find("line 2") == 0);
  CHECK(line_of("k = [1, \"two\"\n").find("unterminated array") !=
        std::string::npos);
  CHECK(line_of("k = \"abc\n").find("unterminated string") !=
        std::string::npos);
  CHECK(line_of("k = 1 2\n").find("trailing characters") !=
        std::string::npos);
  CHECK(toml::parse("k = [1, 2,]\n").find("k")->items.size() == 2);
  CHECK(toml::parse("").entries.empty());
}
