#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "padecert/series.hpp"

using namespace padecert;

namespace {

Instance sqrt_pair() {
  return Instance::from_roots({Rational(0), Rational(1)},
                              {Rational(1, 2), Rational(1, 2)});
}

Instance cubic_triple() {
  return Instance::from_roots(
      {Rational(0), Rational(1), Rational(-1)},
      {Rational(1, 3), Rational(1, 4), Rational(1, 5)});
}

}  // namespace

TEST_CASE("instance construction: both styles produce the same data") {
  const Instance i1 = sqrt_pair();
  CHECK(i1.m == 2);
  CHECK(i1.w == 0);
  CHECK(i1.a.to_string() == "z^2 - z");
  CHECK(i1.b.to_string() == "z - 1/2");
  CHECK(i1.b_top == 1);
  CHECK(i1.flags.solvable());

  const Instance again = Instance::from_polys(i1.a, i1.b);
  CHECK(again.canonical_string() == i1.canonical_string());
  CHECK(again.exponent(0) == Rational(1, 2));
  CHECK(again.exponent(1) == Rational(1, 2));

  const Instance i2 = cubic_triple();
  CHECK(i2.m == 3);
  CHECK(i2.w == 1);
  CHECK(i2.a.to_string() == "z^3 - z");
  CHECK(i2.b_top == Rational(47, 60));
  // b(z) = a(z) sum_i s_i / (z - alpha_i) recovered through the local data;
  // roots come back sorted, so -1, 0, 1 carry 1/5, 1/3, 1/4.
  const Instance i2p = Instance::from_polys(i2.a, i2.b);
  CHECK(i2p.alpha == std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
  CHECK(i2p.exponent(0) == Rational(1, 5));
  CHECK(i2p.exponent(1) == Rational(1, 3));
  CHECK(i2p.exponent(2) == Rational(1, 4));

  CHECK_THROWS_AS(Instance::from_polys(Poly::variable(), Poly(1)),
                  hypothesis_error);
  const Poly z = Poly::variable();
  CHECK_THROWS_AS(Instance::from_polys(z * z + Poly(1), Poly(1)),
                  hypothesis_error);  // irreducible over Q
  CHECK_THROWS_AS(Instance::from_polys(Rational(2) * (z * z), Poly(1)),
                  hypothesis_error);  // not monic
}

TEST_CASE("repeated roots are flagged but not fatal") {
  const Poly z = Poly::variable();
  const Instance rep = Instance::from_polys(z * z, z);
  CHECK(!rep.flags.distinct_roots);
  CHECK(!rep.s[0].has_value());
  CHECK_THROWS_AS(rep.exponent(0), hypothesis_error);
}

TEST_CASE("canonical seeds start the family unit upper triangular") {
  const Instance i2 = cubic_triple();
  for (unsigned j = 0; j <= i2.w; ++j) {
    const auto seeds = canonical_seeds(i2, j);
    REQUIRE(seeds.size() == i2.w + 1);
    for (unsigned k = 0; k <= i2.w; ++k) {
      if (k < j) CHECK(seeds[k] == 0);
      if (k == j) CHECK(seeds[k] == 1);
    }
  }
}

TEST_CASE("first coefficients of the square-root pair") {
  const SolutionFamily fam = build_family(sqrt_pair(), 16);
  // Annihilation forces f_{0,k+1} = (k + 1/2)/(k + 2) f_{0,k} style descent;
  // the first values are pinned from the defining equations.
  CHECK(fam.f[0].coeff(0) == 1);
  CHECK(fam.f[0].coeff(1) == Rational(1, 2));
  CHECK(fam.f[0].coeff(2) == Rational(5, 16));
  const FamilyCheck chk = verify_family(fam);
  CHECK(chk.orders_ok);
  CHECK(chk.heads_ok);
  CHECK(chk.seed_matrix_ok);
}

TEST_CASE("recurrence and closed form agree on both instances") {
  for (const Instance& inst : {sqrt_pair(), cubic_triple()}) {
    const size_t T = 60;
    const SolutionFamily rec = build_family(inst, T, Route::Recurrence);
    const SolutionFamily cf = build_family(inst, T, Route::ClosedForm);
    REQUIRE(rec.f.size() == cf.f.size());
    for (size_t j = 0; j < rec.f.size(); ++j) CHECK(rec.f[j] == cf.f[j]);
    CHECK(rec.provenance[0] == Route::Recurrence);
    CHECK(cf.provenance[0] == Route::ClosedForm);
  }
}

TEST_CASE("convolution closed form matches literal enumeration") {
  for (const Instance& inst : {sqrt_pair(), cubic_triple()}) {
    for (unsigned j = 0; j <= inst.w; ++j)
      for (unsigned long k = 0; k <= 6; ++k)
        CHECK(lauricella_coeff(inst, j, k) ==
              lauricella_coeff_enumerated(inst, j, k));
  }
}

TEST_CASE("applying the operator leaves the expected polynomial head") {
  for (const Instance& inst : {sqrt_pair(), cubic_triple()}) {
    const SolutionFamily fam = build_family(inst, 40);
    for (unsigned j = 0; j <= inst.w; ++j) {
      const auto split = apply_operator(inst, fam.f[j]);
      const Poly expect = Poly::monomial(inst.b_top + Rational(j) + 1,
                                         inst.m - j - 2);
      CHECK(split.polynomial == expect);
      // Tail must vanish through its full valid length.
      bool tail_zero = true;
      for (size_t k = 0; k < split.tail.truncation(); ++k)
        tail_zero = tail_zero && sgn(split.tail.coeff(k)) == 0;
      CHECK(tail_zero);
    }
  }
}

TEST_CASE("pairing basics") {
  const SolutionFamily fam = build_family(sqrt_pair(), 24);
  const LaurentSeries& f0 = fam.f[0];
  // phi against t^k just reads off a coefficient.
  for (size_t k = 0; k < 5; ++k)
    CHECK(phi(f0, Poly::monomial(Rational(1), k)) == f0.coeff(k));
  // Linearity.
  const Poly z = Poly::variable();
  CHECK(phi(f0, Rational(3) * (z * z) - z) ==
        Rational(3) * f0.coeff(2) - f0.coeff(1));
  CHECK_THROWS_AS(phi(f0, z.pow(24)), truncation_error);

  // (P(z) - P(t))/(z - t) for P = z reduces to the constant f_0 coefficient.
  CHECK(phi_bivariate(f0, z) == Poly(f0.coeff(0)));
  // For P = z^2 the quotient is z + t, pairing to f_{0,0} z + f_{0,1}.
  CHECK(phi_bivariate(f0, z * z) ==
        f0.coeff(0) * z + Poly(f0.coeff(1)));
}

TEST_CASE("pairing annihilates the adjoint image") {
  for (const Instance& inst : {sqrt_pair(), cubic_triple()}) {
    const SolutionFamily fam = build_family(inst, 64);
    const DiffOp1 lt = inst.operator_L().adjoint();
    const Poly t = Poly::variable();
    for (unsigned j = 0; j <= inst.w; ++j) {
      for (size_t d = 0; d <= 8; ++d) {
        // phi_j((L^t p)) = 0: the tail of L f_j vanishes identically.
        const Poly p = (t + Poly(1)).pow(d);
        CHECK(phi(fam.f[j], lt.apply(p)) == 0);
      }
    }
  }
}

TEST_CASE("series surgery: orders, truncation, derivative") {
  LaurentSeries f(std::vector<Rational>{0, 0, Rational(3), Rational(-1)});
  auto ord = f.ord_at_infinity();
  CHECK(ord.exact);
  CHECK(ord.value == 3);

  LaurentSeries zero(4);
  auto zord = zero.ord_at_infinity();
  CHECK(!zord.exact);
  CHECK(zord.value == 5);

  CHECK(f.truncated(2).truncation() == 2);
  CHECK_THROWS_AS(f.coeff(7), truncation_error);
  CHECK_THROWS_AS(f.truncated(9), truncation_error);

  // d/dz sum c_k z^{-k-1} = sum -(k+1) c_k z^{-k-2}
  LaurentSeries df = f.derivative();
  CHECK(df.coeff(0) == 0);
  CHECK(df.coeff(3) == Rational(-9));
  CHECK(df.coeff(4) == Rational(4));

  // mul_by_poly splits z * (3 z^{-3} - z^{-4}) with no polynomial part.
  auto prod = f.mul_by_poly(Poly::variable());
  CHECK(prod.polynomial.is_zero());
  CHECK(prod.tail.coeff(1) == 3);
  CHECK(prod.tail.coeff(2) == -1);

  // A poly part appears when the order drops below 1.
  LaurentSeries g(std::vector<Rational>{Rational(2), Rational(5)});
  auto split = g.mul_by_poly(Poly::variable());
  CHECK(split.polynomial == Poly(Rational(2)));
  CHECK(split.tail.coeff(0) == 5);
}

TEST_CASE("composed and binomial operator expansions coincide") {
  for (const Instance& inst : {sqrt_pair(), cubic_triple()}) {
    const JpExpansion jp = jp_expand(inst);
    CHECK(jp.equal);
    CHECK(jp.composed == jp.expanded);
    CHECK(jp.composed.order() == static_cast<int>(inst.m));
  }
}
