#include <chrono>
#include <cstdio>
#include <string>

#include "padecert/determinant.hpp"
#include "padecert/evaluate.hpp"

using namespace padecert;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void report(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-24s %10.3fs %10.3fs %7.2fx   %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0,
              equal ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  size_t T = 800;
  unsigned n_max = 12;
  unsigned long h_max = 8;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string key = argv[i];
    const long val = std::stol(argv[i + 1]);
    if (key == "--truncation")
      T = static_cast<size_t>(val);
    else if (key == "--n-max")
      n_max = static_cast<unsigned>(val);
    else if (key == "--h-max")
      h_max = static_cast<unsigned long>(val);
  }

  const Instance inst = Instance::from_roots(
      {Rational(0), Rational(1), Rational(-1)},
      {Rational(1, 3), Rational(1, 4), Rational(1, 5)});
  std::printf("instance: a = %s, b = %s\n", inst.a.to_string().c_str(),
              inst.b.to_string().c_str());
  std::printf("%-24s %11s %11s %8s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    auto t0 = std::chrono::steady_clock::now();
    const LaurentSeries s = closed_form_series(inst, 0, T, Exec::Serial);
    const double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const LaurentSeries p = closed_form_series(inst, 0, T, Exec::Parallel);
    const double tp = seconds_since(t0);
    report("closed-form series", ts, tp, s == p);
  }

  const SolutionFamily fam = build_family(inst, 8 * inst.m * (n_max + 1));
  {
    auto t0 = std::chrono::steady_clock::now();
    const auto s = build_systems(fam, n_max, Exec::Serial);
    const double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const auto p = build_systems(fam, n_max, Exec::Parallel);
    const double tp = seconds_since(t0);
    bool equal = s.size() == p.size();
    for (size_t i = 0; equal && i < s.size(); ++i)
      equal = s[i].P == p[i].P && s[i].Q == p[i].Q;
    report("approximant tables", ts, tp, equal);
  }

  {
    // The scan wants a positive convergence margin, which the square-root
    // instance has at beta = 10^5.
    const Instance inst2 = Instance::from_roots(
        {Rational(0), Rational(1)}, {Rational(1, 2), Rational(1, 2)});
    const SolutionFamily fam2 = build_family(inst2, 400);
    const Rational beta(100000);
    const Rational eps(1, 2);
    auto t0 = std::chrono::steady_clock::now();
    const ScanReport s = linear_form_scan(fam2, beta, Place::infinity(), eps,
                                          h_max, 256, Exec::Serial);
    const double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const ScanReport p = linear_form_scan(fam2, beta, Place::infinity(), eps,
                                          h_max, 256, Exec::Parallel);
    const double tp = seconds_since(t0);
    const bool equal = s.cells == p.cells &&
                       s.flagged.size() == p.flagged.size() &&
                       s.min_log_margin == p.min_log_margin;
    report("linear-form scan", ts, tp, equal);
  }
  return 0;
}
