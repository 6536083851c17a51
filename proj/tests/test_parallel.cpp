#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "padecert/evaluate.hpp"

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

TEST_CASE("dispatch covers every cell exactly once in both modes") {
  for (Exec mode : {Exec::Serial, Exec::Parallel}) {
    std::vector<int> hits(257, 0);
    par_for(mode, 257, [&](long i) { hits[i] += 1; });
    CHECK(std::accumulate(hits.begin(), hits.end(), 0) == 257);
    for (int h : hits) CHECK(h == 1);
    // Empty ranges are fine.
    par_for(mode, 0, [&](long) { CHECK(false); });
  }
}

TEST_CASE("closed-form series is schedule independent") {
  for (const Instance& inst : {sqrt_pair(), cubic_triple()}) {
    for (unsigned j = 0; j <= inst.w; ++j) {
      const LaurentSeries serial = closed_form_series(inst, j, 120, Exec::Serial);
      const LaurentSeries parallel =
          closed_form_series(inst, j, 120, Exec::Parallel);
      CHECK(serial == parallel);
    }
  }
}

TEST_CASE("family construction is schedule independent") {
  const Instance i2 = cubic_triple();
  const SolutionFamily a = build_family(i2, 80, Route::ClosedForm, Exec::Serial);
  const SolutionFamily b =
      build_family(i2, 80, Route::ClosedForm, Exec::Parallel);
  REQUIRE(a.f.size() == b.f.size());
  for (size_t j = 0; j < a.f.size(); ++j) CHECK(a.f[j] == b.f[j]);
}

TEST_CASE("approximant tables are schedule independent") {
  for (const Instance& inst : {sqrt_pair(), cubic_triple()}) {
    const SolutionFamily fam = build_family(inst, 64);
    const auto serial = build_systems(fam, 7, Exec::Serial);
    const auto parallel = build_systems(fam, 7, Exec::Parallel);
    REQUIRE(serial.size() == parallel.size());
    for (size_t t = 0; t < serial.size(); ++t) {
      CHECK(serial[t].P == parallel[t].P);
      CHECK(serial[t].Q == parallel[t].Q);
      REQUIRE(serial[t].R.size() == parallel[t].R.size());
      for (size_t j = 0; j < serial[t].R.size(); ++j) {
        REQUIRE(serial[t].R[j].size() == parallel[t].R[j].size());
        for (size_t l = 0; l < serial[t].R[j].size(); ++l)
          CHECK(serial[t].R[j][l] == parallel[t].R[j][l]);
      }
      CHECK(serial[t].verified == parallel[t].verified);
    }
  }
}

TEST_CASE("linear form scan is schedule independent") {
  const SolutionFamily fam = build_family(sqrt_pair(), 64);
  const ScanReport s =
      linear_form_scan(fam, Rational(100000), Place::infinity(), Rational(1),
                       3, 256, Exec::Serial, true);
  const ScanReport p =
      linear_form_scan(fam, Rational(100000), Place::infinity(), Rational(1),
                       3, 256, Exec::Parallel, true);
  CHECK(s.cells == p.cells);
  CHECK(s.min_log_margin == p.min_log_margin);
  CHECK(s.flagged.size() == p.flagged.size());
  REQUIRE(s.rows.size() == p.rows.size());
  for (size_t i = 0; i < s.rows.size(); ++i) {
    CHECK(s.rows[i].lambda == p.rows[i].lambda);
    CHECK(s.rows[i].form_lo == p.rows[i].form_lo);
    CHECK(s.rows[i].form_hi == p.rows[i].form_hi);
    CHECK(s.rows[i].bound_hi == p.rows[i].bound_hi);
    CHECK(s.rows[i].log_margin == p.rows[i].log_margin);
    CHECK(s.rows[i].violation == p.rows[i].violation);
    CHECK(s.rows[i].undecided == p.rows[i].undecided);
  }
}
