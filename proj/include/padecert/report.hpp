#pragma once

#include <string>

#include "json.hpp"
#include "padecert/determinant.hpp"
#include "padecert/evaluate.hpp"
#include "padecert/heights.hpp"

namespace padecert {

// All reports use insertion-ordered JSON so identical inputs serialize to
// byte-identical documents.
using Json = nlohmann::ordered_json;

// 16-hex-digit FNV-1a fingerprint of the canonical instance string; stable
// across runs and platforms.
std::string instance_fingerprint(const Instance& inst);

Json instance_json(const Instance& inst);
Json loglinear_json(const LogLinear& x);
Json interval_json(const BigInterval& x);
Json family_json(const SolutionFamily& fam);
Json system_json(const PadeSystem& sys);
Json hypothesis_json(const HypothesisReport& rep);
Json determinant_json(const DeterminantReport& rep);
Json measure_json(const MeasureReport& rep);
Json estimate_json(const EstimateReport& rep);
Json scan_json(const ScanReport& rep);
Json perron_json(const PerronReport& rep);

// One line per retained cell: lambda, enclosure endpoints, bound, margin.
std::string scan_csv(const ScanReport& rep);

// Serializes with two-space indentation and a trailing newline.
std::string dump_json(const Json& j);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace padecert
