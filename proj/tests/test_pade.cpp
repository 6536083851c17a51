#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "padecert/pade.hpp"

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

Poly from_coeffs(std::initializer_list<Rational> lowest_first) {
  return Poly(std::vector<Rational>(lowest_first));
}

}  // namespace

TEST_CASE("first Rodrigues polynomials of the square-root pair") {
  const Instance i1 = sqrt_pair();
  CHECK(rodrigues_poly(i1, 0, 0) == Poly(1));
  CHECK(rodrigues_poly(i1, 1, 0) ==
        from_coeffs({Rational(-3, 2), Rational(3)}));
  CHECK(rodrigues_poly(i1, 2, 0) ==
        from_coeffs({Rational(15, 8), Rational(-10), Rational(10)}));
}

TEST_CASE("all three construction routes agree") {
  for (const Instance& inst : {sqrt_pair(), cubic_triple()}) {
    for (unsigned n = 0; n <= 6; ++n) {
      for (unsigned l = 0; l < inst.m; ++l) {
        const Poly p = rodrigues_poly(inst, n, l);
        CHECK(p == rodrigues_poly_power_form(inst, n, l));
        CHECK(p == leibniz_poly(inst, n, l));
        CHECK(p.degree() == static_cast<int>(l + n * (inst.m - 1)));
      }
    }
  }
}

TEST_CASE("adjoint of the defining operator") {
  const Instance i1 = sqrt_pair();
  const DiffOp1 lt = i1.operator_L().adjoint();
  CHECK(lt.d1 == i1.a);
  CHECK(lt.d0 == from_coeffs({Rational(-3, 2), Rational(3)}));
  // First order case of the general pattern: the adjoint constant term is
  // the n = 1 approximant a' + b.
  CHECK(lt.d0 == rodrigues_poly(i1, 1, 0));
}

TEST_CASE("systems satisfy the order conditions") {
  for (const Instance& inst : {sqrt_pair(), cubic_triple()}) {
    const SolutionFamily fam = build_family(inst, 64);
    const auto systems = build_systems(fam, 8);
    REQUIRE(systems.size() == 9);
    for (const PadeSystem& sys : systems) {
      CHECK(sys.verified);
      for (unsigned j = 0; j <= inst.w; ++j) {
        for (unsigned l = 0; l < inst.m; ++l) {
          // Q is exactly the polynomial part of P f_j, R the tail.
          auto split = fam.f[j].mul_by_poly(sys.P[l]);
          CHECK(sys.Q[j][l] == split.polynomial);
          CHECK(sys.R[j][l] == split.tail);
          auto ord = sys.R[j][l].ord_at_infinity();
          if (ord.exact) CHECK(ord.value >= static_cast<long>(sys.n) + 1);
          CHECK(sys.Q[j][l].degree() < sys.P[l].degree());
        }
      }
    }
  }
}

TEST_CASE("remainder tail matches its closed form termwise") {
  for (const Instance& inst : {sqrt_pair(), cubic_triple()}) {
    const SolutionFamily fam = build_family(inst, 80);
    for (unsigned n : {1u, 3u, 4u}) {
      const PadeSystem sys = build_system(fam, n);
      for (unsigned j = 0; j <= inst.w; ++j) {
        for (unsigned l = 0; l < inst.m; ++l) {
          const size_t K = 12;
          const LaurentSeries cf = remainder_closed_form(fam, n, j, l, K);
          for (size_t k = 0; k < n; ++k) CHECK(cf.coeff(k) == 0);
          for (size_t k = n; k < n + K; ++k)
            CHECK(cf.coeff(k) == sys.R[j][l].coeff(k));
        }
      }
    }
  }
}

TEST_CASE("truncation shortfalls are reported, not absorbed") {
  const SolutionFamily fam = build_family(sqrt_pair(), 12);
  CHECK_THROWS_AS(build_systems(fam, 20), truncation_error);
  CHECK_THROWS_AS(remainder_closed_form(fam, 3, 0, 0, 40), truncation_error);
}

TEST_CASE("adjoint images lie in every pairing kernel") {
  for (const Instance& inst : {sqrt_pair(), cubic_triple()}) {
    const SolutionFamily fam = build_family(inst, 64);
    const DiffOp1 lt = inst.operator_L().adjoint();
    const Poly t = Poly::variable();
    for (size_t d = 0; d <= 10; ++d) {
      const auto member = kernel_membership(fam, lt.apply(t.pow(d)));
      for (bool ok : member) CHECK(ok);
    }
    // A generic polynomial is not in the kernel.
    const auto member = kernel_membership(fam, Poly(1));
    CHECK(!member[0]);
  }
}

TEST_CASE("elimination route is proportional to the Rodrigues route") {
  for (const Instance& inst : {sqrt_pair(), cubic_triple()}) {
    const SolutionFamily fam = build_family(inst, 64);
    for (unsigned n : {2u, 5u}) {
      const std::vector<unsigned> weights(inst.w + 1, n);
      const unsigned M = n * (inst.m - 1);
      const PadeSolve sol = solve_pade_linear_system(fam, weights, M);
      REQUIRE(!sol.P.is_zero());
      const Poly rod = rodrigues_poly(inst, n, 0);
      // Same kernel line: cross-scaled polynomials coincide.
      CHECK(rod.leading() * sol.P == sol.P.leading() * rod);
      for (unsigned j = 0; j <= inst.w; ++j) {
        auto split = fam.f[j].mul_by_poly(sol.P);
        CHECK(sol.Q[j] == split.polynomial);
        // Order conditions transferred to the solved system.
        for (unsigned k = 0; k < n; ++k) CHECK(split.tail.coeff(k) == 0);
      }
    }
  }
}

TEST_CASE("weighted systems with unbalanced weights still solve") {
  const Instance i2 = cubic_triple();
  const SolutionFamily fam = build_family(i2, 64);
  const PadeSolve sol = solve_pade_linear_system(fam, {3u, 1u}, 5);
  REQUIRE(!sol.P.is_zero());
  CHECK(sol.P.degree() <= 5);
  auto t0 = fam.f[0].mul_by_poly(sol.P).tail;
  auto t1 = fam.f[1].mul_by_poly(sol.P).tail;
  for (unsigned k = 0; k < 3; ++k) CHECK(t0.coeff(k) == 0);
  CHECK(t1.coeff(0) == 0);
  CHECK_THROWS_AS(solve_pade_linear_system(fam, {3u, 3u}, 5),
                  std::invalid_argument);
}
