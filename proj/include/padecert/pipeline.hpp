#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "padecert/report.hpp"
#include "padecert/toml_lite.hpp"

namespace padecert {

// Parsed instance file: exactly one of the (alpha, s) / (a_coeffs, b_coeffs)
// styles, plus optional run parameters.
struct InstanceFile {
  std::optional<std::vector<Rational>> alpha, s;
  std::optional<std::vector<Rational>> a_coeffs, b_coeffs;
  std::optional<Rational> beta, epsilon;
  std::optional<Place> place;
  std::optional<unsigned long> n_max, truncation, h_max;
  std::optional<long> precision;
};

InstanceFile instance_file_from_table(const toml::Table& table);
InstanceFile read_instance_file(const std::string& path);
Instance make_instance(const InstanceFile& file);

// Command-line overrides; a set field wins over the file.
struct Overrides {
  std::optional<Rational> beta, epsilon;
  std::optional<Place> place;
  std::optional<unsigned long> n_max, truncation, h_max;
  std::optional<long> precision;
  std::string out_dir;  // empty: no artifact files, stream output only
};

struct RunConfig {
  Instance inst;
  std::optional<Rational> beta, epsilon;
  Place place = Place::infinity();
  unsigned long n_max = 10;
  unsigned long truncation = 0;  // 0: derived as 8 m (n_max + 1)
  unsigned long h_max = 10;
  long precision = 256;

  unsigned long effective_truncation() const;
};
RunConfig merge_config(const InstanceFile& file, const Overrides& over);

// Subcommand drivers.  JSON (CSV for scan) goes to `out`; with a non-empty
// out_dir the same artifacts are also written as files.  Exit codes:
// 0 success, 1 failed certification or domain error, 2 parse/usage error.
int cmd_validate(const std::string& path, const Overrides& over,
                 std::ostream& out);
int cmd_build(const std::string& path, const Overrides& over,
              std::ostream& out);
int cmd_measure(const std::string& path, const Overrides& over,
                std::ostream& out);
int cmd_scan(const std::string& path, const Overrides& over,
             std::ostream& out);
int cmd_eval(const std::string& path, const Overrides& over,
             std::ostream& out);

}  // namespace padecert
