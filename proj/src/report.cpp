#include "padecert/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace padecert {

namespace {

Json poly_coeffs(const Poly& p) {
  Json out = Json::array();
  if (p.degree() < 0) {
    out.push_back("0");
    return out;
  }
  for (int k = 0; k <= p.degree(); ++k)
    out.push_back(rat_to_string(p.coeff(static_cast<size_t>(k))));
  return out;
}

Json rational_list(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(rat_to_string(x));
  return out;
}

const char* route_name(Route r) {
  return r == Route::Recurrence ? "recurrence" : "closed-form";
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

}  // namespace

std::string instance_fingerprint(const Instance& inst) {
  const std::string text = inst.canonical_string();
  unsigned long long hash = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", hash);
  return buf;
}

Json instance_json(const Instance& inst) {
  Json j;
  j["fingerprint"] = instance_fingerprint(inst);
  j["m"] = inst.m;
  j["w"] = inst.w;
  j["a"] = poly_coeffs(inst.a);
  j["b"] = poly_coeffs(inst.b);
  j["a_text"] = inst.a.to_string();
  j["b_text"] = inst.b.to_string();
  j["alpha"] = rational_list(inst.alpha);
  Json s = Json::array();
  for (const auto& si : inst.s) {
    if (si)
      s.push_back(rat_to_string(*si));
    else
      s.push_back(nullptr);
  }
  j["s"] = s;
  j["b_top"] = rat_to_string(inst.b_top);
  return j;
}

Json loglinear_json(const LogLinear& x) {
  Json j;
  j["constant"] = rat_to_string(x.constant());
  Json terms = Json::array();
  for (const auto& [base, coeff] : x.terms()) {
    Json t;
    t["coeff"] = rat_to_string(coeff);
    t["base"] = rat_to_string(base);
    terms.push_back(t);
  }
  j["log_terms"] = terms;
  return j;
}

Json interval_json(const BigInterval& x) {
  return Json::array({x.lo_string(), x.hi_string()});
}

Json family_json(const SolutionFamily& fam) {
  Json j;
  j["fingerprint"] = instance_fingerprint(fam.inst);
  j["truncation"] = fam.T;
  j["members"] = fam.f.size();
  Json routes = Json::array();
  for (Route r : fam.provenance) routes.push_back(route_name(r));
  j["routes"] = routes;
  Json seeds = Json::array();
  for (unsigned jj = 0; jj <= fam.inst.w; ++jj) {
    Json row = Json::array();
    for (unsigned k = 0; k <= fam.inst.w; ++k)
      row.push_back(rat_to_string(fam.f[jj].coeff(k)));
    seeds.push_back(row);
  }
  j["seeds"] = seeds;
  const FamilyCheck chk = verify_family(fam);
  Json c;
  c["orders"] = chk.orders_ok;
  c["heads"] = chk.heads_ok;
  c["seed_matrix"] = chk.seed_matrix_ok;
  c["all"] = chk.all_ok();
  j["checks"] = c;
  return j;
}

Json system_json(const PadeSystem& sys) {
  Json j;
  j["n"] = sys.n;
  j["m"] = sys.m;
  j["verified"] = sys.verified;
  Json ps = Json::array();
  for (const auto& p : sys.P) ps.push_back(poly_coeffs(p));
  j["P"] = ps;
  Json qs = Json::array();
  for (const auto& qrow : sys.Q) {
    Json row = Json::array();
    for (const auto& q : qrow) row.push_back(poly_coeffs(q));
    qs.push_back(row);
  }
  j["Q"] = qs;
  Json ords = Json::array();
  for (const auto& rrow : sys.R) {
    Json row = Json::array();
    for (const auto& r : rrow) {
      const auto ord = r.ord_at_infinity();
      if (ord.exact)
        row.push_back(ord.value);
      else
        row.push_back(nullptr);
    }
    ords.push_back(row);
  }
  j["remainder_orders"] = ords;
  return j;
}

Json hypothesis_json(const HypothesisReport& rep) {
  Json j;
  j["all_pass"] = rep.all_pass;
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json je;
    je["name"] = e.name;
    je["pass"] = e.pass;
    je["informational"] = e.informational;
    je["witness"] = e.witness;
    entries.push_back(je);
  }
  j["entries"] = entries;
  return j;
}

Json determinant_json(const DeterminantReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["det_Mn"] = rat_to_string(rep.det_Mn);
  j["delta_constant"] = rep.delta_constant;
  if (rep.delta_constant)
    j["delta"] = rat_to_string(rep.delta);
  else
    j["delta"] = nullptr;
  j["nonzero"] = rep.nonzero;
  j["scalar_relation_ok"] = rep.scalar_relation_ok;
  return j;
}

Json measure_json(const MeasureReport& rep) {
  Json j;
  j["place"] = rep.v0.to_string();
  j["beta"] = rat_to_string(rep.beta);
  j["epsilon"] = rat_to_string(rep.epsilon);
  j["precision"] = static_cast<long>(rep.prec);
  Json v;
  v["exact"] = loglinear_json(rep.V);
  v["enclosure"] = interval_json(rep.v_iv);
  j["V"] = v;
  Json a;
  a["exact"] = loglinear_json(rep.A);
  a["enclosure"] = interval_json(rep.a_iv);
  j["A"] = a;
  Json u;
  u["exact"] = loglinear_json(rep.U);
  u["enclosure"] = interval_json(rep.u_iv);
  j["U"] = u;
  j["applicable"] = rep.applicable;
  if (rep.applicable) {
    j["mu"] = interval_json(rep.mu_iv);
    j["C"] = interval_json(rep.c_iv);
  } else {
    j["mu"] = nullptr;
    j["C"] = nullptr;
  }
  return j;
}

Json estimate_json(const EstimateReport& rep) {
  Json j;
  j["place"] = rep.v.to_string();
  j["beta"] = rat_to_string(rep.beta);
  j["slope_r"] = rep.slope_r;
  j["slope_pq"] = rep.slope_pq;
  j["decay_rate"] = rep.decay_rate;
  j["growth_rate_u"] = rep.growth_rate_u;
  j["growth_rate_f"] = rep.growth_rate_f;
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json jr;
    jr["n"] = row.n;
    jr["log_r"] = row.log_r;
    jr["log_pq"] = row.log_pq;
    jr["r_exact"] = row.r_exact;
    rows.push_back(jr);
  }
  j["rows"] = rows;
  return j;
}

namespace {

Json scan_row_json(const ScanRow& row) {
  Json j;
  j["lambda"] = row.lambda;
  j["form_lo"] = row.form_lo;
  j["form_hi"] = row.form_hi;
  j["bound_hi"] = row.bound_hi;
  j["log_margin"] = row.log_margin;
  j["violation"] = row.violation;
  j["undecided"] = row.undecided;
  return j;
}

}  // namespace

Json scan_json(const ScanReport& rep) {
  Json j;
  j["measure"] = measure_json(rep.meas);
  j["h_max"] = rep.h_max;
  j["cells"] = rep.cells;
  j["min_log_margin"] = rep.min_log_margin;
  unsigned long violations = 0, undecided = 0;
  for (const auto& row : rep.flagged) {
    if (row.violation) ++violations;
    if (row.undecided) ++undecided;
  }
  j["violations"] = violations;
  j["undecided"] = undecided;
  j["h0_proxy"] = rep.h0_proxy;
  Json flagged = Json::array();
  for (const auto& row : rep.flagged) flagged.push_back(scan_row_json(row));
  j["flagged"] = flagged;
  return j;
}

Json perron_json(const PerronReport& rep) {
  Json j;
  j["window"] = Json::array({rep.lo, rep.hi});
  j["sup_root"] = rep.sup_root;
  j["alpha_max"] = rep.alpha_max;
  j["margin"] = rep.margin;
  return j;
}

std::string scan_csv(const ScanReport& rep) {
  const auto& src = rep.rows.empty() ? rep.flagged : rep.rows;
  std::string out =
      "lambda,form_lo,form_hi,bound_hi,log_margin,violation,undecided\n";
  for (const auto& row : src) {
    std::string l;
    for (size_t i = 0; i < row.lambda.size(); ++i) {
      if (i) l += ' ';
      l += std::to_string(row.lambda[i]);
    }
    out += l;
    out += ',';
    out += row.form_lo;
    out += ',';
    out += row.form_hi;
    out += ',';
    out += row.bound_hi;
    out += ',';
    out += format_double(row.log_margin);
    out += ',';
    out += row.violation ? '1' : '0';
    out += ',';
    out += row.undecided ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("short write to " + path);
}

}  // namespace padecert
