#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "padecert/pipeline.hpp"

namespace {

struct TextOptions {
  std::string beta, epsilon, place;
};

void add_common(CLI::App* cmd, std::string& file, padecert::Overrides& over,
                TextOptions& text) {
  cmd->add_option("file", file, "instance file (TOML)")->required();
  cmd->add_option("--beta", text.beta, "evaluation point, rational p/q")
      ->envname("PADECERT_BETA");
  cmd->add_option("--place", text.place, "inf or a prime")
      ->envname("PADECERT_PLACE");
  cmd->add_option("--epsilon", text.epsilon, "measure slack, rational p/q")
      ->envname("PADECERT_EPSILON");
  cmd->add_option("--n-max", over.n_max, "largest approximant weight")
      ->envname("PADECERT_N_MAX");
  cmd->add_option("--truncation", over.truncation,
                  "series truncation length")
      ->envname("PADECERT_TRUNCATION");
  cmd->add_option("--h-max", over.h_max, "coefficient box radius for scan")
      ->envname("PADECERT_H_MAX");
  cmd->add_option("--precision", over.precision,
                  "working precision in bits (p-adic digits for eval)")
      ->envname("PADECERT_PRECISION");
  cmd->add_option("--out-dir", over.out_dir, "artifact output directory")
      ->envname("PADECERT_OUT_DIR");
}

// --beta/--place/--epsilon arrive as text; turn them into typed overrides.
int apply_text_options(const TextOptions& text, padecert::Overrides& over) {
  using namespace padecert;
  try {
    if (!text.beta.empty()) over.beta = rat_from_string(text.beta);
    if (!text.epsilon.empty()) over.epsilon = rat_from_string(text.epsilon);
    if (!text.place.empty()) {
      if (text.place == "inf" || text.place == "infinity") {
        over.place = Place::infinity();
      } else {
        const Rational p = rat_from_string(text.place);
        Int num = p.get_num();
        if (p.get_den() != 1 || num < 2 ||
            mpz_probab_prime_p(num.get_mpz_t(), 30) == 0)
          throw parse_error("place must be \"inf\" or a prime");
        over.place = Place::finite(mpz_get_ui(num.get_mpz_t()));
      }
    }
  } catch (const parse_error& e) {
    std::cerr << "option error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Simultaneous rational approximants with exact certificates: "
      "validate instances, build approximant tables, compute independence "
      "measures, scan linear forms, evaluate the series family."};
  app.require_subcommand(1);

  std::string file;
  padecert::Overrides over;
  TextOptions text;

  CLI::App* validate =
      app.add_subcommand("validate", "check the instance hypotheses");
  CLI::App* build = app.add_subcommand(
      "build", "build approximant systems and determinant certificates");
  CLI::App* measure =
      app.add_subcommand("measure", "compute the independence measure");
  CLI::App* scan = app.add_subcommand(
      "scan", "scan integer linear forms against the measure bound (CSV)");
  CLI::App* eval =
      app.add_subcommand("eval", "evaluate the family at beta");
  for (CLI::App* cmd : {validate, build, measure, scan, eval})
    add_common(cmd, file, over, text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (int code = apply_text_options(text, over)) return code;

  if (validate->parsed())
    return padecert::cmd_validate(file, over, std::cout);
  if (build->parsed()) return padecert::cmd_build(file, over, std::cout);
  if (measure->parsed()) return padecert::cmd_measure(file, over, std::cout);
  if (scan->parsed()) return padecert::cmd_scan(file, over, std::cout);
  return padecert::cmd_eval(file, over, std::cout);
}
