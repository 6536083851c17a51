#include "padecert/pipeline.hpp"

#include <filesystem>
#include <ostream>

#include "padecert/series.hpp"

namespace padecert {

namespace {

Rational rational_value(const toml::Value& v, const std::string& key) {
  try {
    if (v.kind == toml::Value::Kind::String) return rat_from_string(v.str);
    if (v.kind == toml::Value::Kind::Integer)
      return Rational(static_cast<long>(v.integer));
  } catch (const parse_error& e) {
    throw parse_error("line " + std::to_string(v.line) + ", key '" + key +
                      "': " + e.what());
  }
  throw parse_error("line " + std::to_string(v.line) + ", key '" + key +
                    "': expected a rational");
}

std::vector<Rational> rational_array(const toml::Value& v,
                                     const std::string& key) {
  if (v.kind != toml::Value::Kind::Array)
    throw parse_error("line " + std::to_string(v.line) + ", key '" + key +
                      "': expected an array");
  std::vector<Rational> out;
  for (const auto& item : v.items) out.push_back(rational_value(item, key));
  return out;
}

unsigned long count_value(const toml::Value& v, const std::string& key) {
  if (v.kind != toml::Value::Kind::Integer || v.integer < 0)
    throw parse_error("line " + std::to_string(v.line) + ", key '" + key +
                      "': expected a nonnegative integer");
  return static_cast<unsigned long>(v.integer);
}

Place place_value(const toml::Value& v) {
  if (v.kind == toml::Value::Kind::String) {
    if (v.str == "inf" || v.str == "infinity") return Place::infinity();
    throw parse_error("line " + std::to_string(v.line) +
                      ": place must be \"inf\" or a prime");
  }
  if (v.kind == toml::Value::Kind::Integer && v.integer >= 2) {
    Int p(static_cast<long>(v.integer));
    if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
      throw parse_error("line " + std::to_string(v.line) + ": place " +
                        std::to_string(v.integer) + " is not prime");
    return Place::finite(static_cast<unsigned long>(v.integer));
  }
  throw parse_error("line " + std::to_string(v.line) +
                    ": place must be \"inf\" or a prime");
}

}  // namespace

InstanceFile instance_file_from_table(const toml::Table& table) {
  InstanceFile f;
  for (const auto& [key, value] : table.entries) {
    if (key == "alpha")
      f.alpha = rational_array(value, key);
    else if (key == "s")
      f.s = rational_array(value, key);
    else if (key == "a_coeffs")
      f.a_coeffs = rational_array(value, key);
    else if (key == "b_coeffs")
      f.b_coeffs = rational_array(value, key);
    else if (key == "beta")
      f.beta = rational_value(value, key);
    else if (key == "epsilon")
      f.epsilon = rational_value(value, key);
    else if (key == "place")
      f.place = place_value(value);
    else if (key == "n_max")
      f.n_max = count_value(value, key);
    else if (key == "T" || key == "truncation")
      f.truncation = count_value(value, key);
    else if (key == "H_max" || key == "h_max")
      f.h_max = count_value(value, key);
    else if (key == "precision")
      f.precision = static_cast<long>(count_value(value, key));
    else
      throw parse_error("line " + std::to_string(value.line) +
                        ": unknown key '" + key + "'");
  }

  const bool roots_style = f.alpha || f.s;
  const bool poly_style = f.a_coeffs || f.b_coeffs;
  if (roots_style == poly_style)
    throw parse_error(
        "exactly one of the (alpha, s) / (a_coeffs, b_coeffs) styles must "
        "be given");
  if (roots_style && (!f.alpha || !f.s))
    throw parse_error("alpha and s must be given together");
  if (poly_style && (!f.a_coeffs || !f.b_coeffs))
    throw parse_error("a_coeffs and b_coeffs must be given together");
  return f;
}

InstanceFile read_instance_file(const std::string& path) {
  return instance_file_from_table(toml::parse_file(path));
}

Instance make_instance(const InstanceFile& file) {
  if (file.alpha) return Instance::from_roots(*file.alpha, *file.s);
  return Instance::from_polys(Poly(*file.a_coeffs), Poly(*file.b_coeffs));
}

unsigned long RunConfig::effective_truncation() const {
  if (truncation) return truncation;
  return 8UL * inst.m * (n_max + 1);
}

RunConfig merge_config(const InstanceFile& file, const Overrides& over) {
  RunConfig cfg;
  cfg.inst = make_instance(file);
  cfg.beta = over.beta ? over.beta : file.beta;
  cfg.epsilon = over.epsilon ? over.epsilon : file.epsilon;
  if (file.place) cfg.place = *file.place;
  if (over.place) cfg.place = *over.place;
  if (file.n_max) cfg.n_max = *file.n_max;
  if (over.n_max) cfg.n_max = *over.n_max;
  if (file.truncation) cfg.truncation = *file.truncation;
  if (over.truncation) cfg.truncation = *over.truncation;
  if (file.h_max) cfg.h_max = *file.h_max;
  if (over.h_max) cfg.h_max = *over.h_max;
  if (file.precision) cfg.precision = *file.precision;
  if (over.precision) cfg.precision = *over.precision;
  return cfg;
}

namespace {

void write_artifact(const std::string& out_dir, const std::string& name,
                    const std::string& text) {
  if (out_dir.empty()) return;
  std::filesystem::create_directories(out_dir);
  write_text_file(out_dir + "/" + name, text);
}

std::string first_failure(const HypothesisReport& hyp) {
  for (const auto& e : hyp.entries)
    if (!e.informational && !e.pass) return e.name;
  return "";
}

// Default epsilon: half the certified lower bound of V, zero when V is not
// certainly positive (the measure then reports itself inapplicable).
Rational default_epsilon(const RunConfig& cfg) {
  const LogLinear V = V_value(cfg.inst, *cfg.beta, cfg.place);
  const BigInterval v_iv =
      V.enclose(static_cast<mpfr_prec_t>(cfg.precision));
  if (!v_iv.is_positive()) return Rational(0);
  return Rational(v_iv.lo_double()) / 2;
}

int emit_error(std::ostream& out, const std::string& kind,
               const std::string& what, bool as_csv, int code) {
  if (as_csv) {
    out << "# error (" << kind << "): " << what << "\n";
  } else {
    Json doc;
    doc["error"] = kind;
    doc["detail"] = what;
    out << dump_json(doc);
  }
  return code;
}

template <typename Body>
int guarded(std::ostream& out, bool as_csv, Body&& body) {
  try {
    return body();
  } catch (const parse_error& e) {
    return emit_error(out, "parse", e.what(), as_csv, 2);
  } catch (const std::exception& e) {
    return emit_error(out, "domain", e.what(), as_csv, 1);
  }
}

}  // namespace

int cmd_validate(const std::string& path, const Overrides& over,
                 std::ostream& out) {
  return guarded(out, false, [&] {
    const RunConfig cfg = merge_config(read_instance_file(path), over);
    const HypothesisReport hyp =
        check_hypotheses(cfg.inst, static_cast<unsigned>(cfg.n_max));
    Json doc;
    doc["instance"] = instance_json(cfg.inst);
    doc["hypotheses"] = hypothesis_json(hyp);
    doc["first_failure"] = first_failure(hyp);
    const std::string text = dump_json(doc);
    out << text;
    write_artifact(over.out_dir, "validate.json", text);
    return hyp.all_pass ? 0 : 1;
  });
}

int cmd_build(const std::string& path, const Overrides& over,
              std::ostream& out) {
  return guarded(out, false, [&] {
    const RunConfig cfg = merge_config(read_instance_file(path), over);
    const HypothesisReport hyp =
        check_hypotheses(cfg.inst, static_cast<unsigned>(cfg.n_max));
    Json doc;
    doc["instance"] = instance_json(cfg.inst);
    doc["hypotheses"] = hypothesis_json(hyp);
    if (!hyp.all_pass) {
      doc["first_failure"] = first_failure(hyp);
      const std::string text = dump_json(doc);
      out << text;
      write_artifact(over.out_dir, "build.json", text);
      return 1;
    }
    const SolutionFamily fam =
        build_family(cfg.inst, cfg.effective_truncation());
    doc["family"] = family_json(fam);
    const auto systems =
        build_systems(fam, static_cast<unsigned>(cfg.n_max));
    Json sys_list = Json::array();
    Json det_list = Json::array();
    bool all_nonzero = true;
    for (const auto& sys : systems) {
      sys_list.push_back(system_json(sys));
      const DeterminantReport det = build_Delta(fam, sys);
      all_nonzero = all_nonzero && det.nonzero && det.scalar_relation_ok;
      det_list.push_back(determinant_json(det));
    }
    doc["systems"] = sys_list;
    doc["determinants"] = det_list;
    doc["all_nonzero"] = all_nonzero;
    const std::string text = dump_json(doc);
    out << text;
    write_artifact(over.out_dir, "build.json", text);
    return all_nonzero ? 0 : 1;
  });
}

int cmd_measure(const std::string& path, const Overrides& over,
                std::ostream& out) {
  return guarded(out, false, [&] {
    const RunConfig cfg = merge_config(read_instance_file(path), over);
    if (!cfg.beta) throw parse_error("beta is required for measure");
    const Rational eps = cfg.epsilon ? *cfg.epsilon : default_epsilon(cfg);
    const MeasureReport meas =
        measure(cfg.inst, *cfg.beta, cfg.place, eps,
                static_cast<mpfr_prec_t>(cfg.precision));
    Json doc;
    doc["instance"] = instance_json(cfg.inst);
    doc["measure"] = measure_json(meas);
    const std::string text = dump_json(doc);
    out << text;
    write_artifact(over.out_dir, "measure.json", text);
    return meas.applicable ? 0 : 1;
  });
}

int cmd_scan(const std::string& path, const Overrides& over,
             std::ostream& out) {
  return guarded(out, true, [&] {
    const RunConfig cfg = merge_config(read_instance_file(path), over);
    if (!cfg.beta) throw parse_error("beta is required for scan");
    const Rational eps = cfg.epsilon ? *cfg.epsilon : default_epsilon(cfg);
    const SolutionFamily fam =
        build_family(cfg.inst, cfg.effective_truncation());
    const ScanReport rep = linear_form_scan(
        fam, *cfg.beta, cfg.place, eps, cfg.h_max,
        static_cast<mpfr_prec_t>(cfg.precision), Exec::Parallel, true);
    const std::string csv = scan_csv(rep);
    out << csv;
    write_artifact(over.out_dir, "scan.csv", csv);
    write_artifact(over.out_dir, "scan.json", dump_json(scan_json(rep)));
    bool violated = false;
    for (const auto& row : rep.flagged) violated = violated || row.violation;
    return violated ? 1 : 0;
  });
}

int cmd_eval(const std::string& path, const Overrides& over,
             std::ostream& out) {
  return guarded(out, false, [&] {
    const RunConfig cfg = merge_config(read_instance_file(path), over);
    if (!cfg.beta) throw parse_error("beta is required for eval");
    const SolutionFamily fam =
        build_family(cfg.inst, cfg.effective_truncation());
    Json doc;
    doc["instance"] = instance_json(cfg.inst);
    doc["place"] = cfg.place.to_string();
    doc["beta"] = rat_to_string(*cfg.beta);
    doc["truncation"] = fam.T;
    Json values = Json::array();
    for (unsigned j = 0; j <= cfg.inst.w; ++j) {
      Json v;
      v["j"] = j;
      if (cfg.place.arch) {
        const GeometricMajorant cert = certify_majorant(fam, j, *cfg.beta);
        const BigInterval iv = eval_arch(
            fam, j, *cfg.beta, static_cast<mpfr_prec_t>(cfg.precision));
        v["enclosure"] = interval_json(iv);
        Json c;
        c["rho"] = rat_to_string(cert.rho);
        c["scale"] = rat_to_string(cert.scale);
        c["base_index"] = cert.base_index;
        v["majorant"] = c;
      } else {
        // precision is read as the number of certified p-adic digits here.
        const unsigned long digits =
            cfg.precision > 0 ? static_cast<unsigned long>(cfg.precision) : 64;
        const PadicValue pv =
            eval_padic(fam, j, *cfg.beta, cfg.place.p, digits);
        v["value"] = pv.to_string();
        if (pv.is_zero_to_precision())
          v["valuation"] = nullptr;
        else
          v["valuation"] = pv.valuation();
      }
      values.push_back(v);
    }
    doc["values"] = values;
    const std::string text = dump_json(doc);
    out << text;
    write_artifact(over.out_dir, "eval.json", text);
    return 0;
  });
}

}  // namespace padecert
