#pragma once

#include "json.hpp"

#include <string>
#include <vector>

#include "addspec/exponents.hpp"
#include "addspec/gram.hpp"
#include "addspec/measures.hpp"
#include "addspec/ortho_solver.hpp"

namespace addspec::io {

using nlohmann::json;

// Point sets: [["p/q", "r/s"], ...]. Duplicates are rejected on read.
json point_set_to_json(const ExponentSet& set);
ExponentSet point_set_from_json(const json& j);
ExponentSet read_point_set(const std::string& path);

// Measures: [{"left": "p/q", "right": "p/q", "weight": w}, ...]. The weight may
// be a number or a rational string.
json measure_to_json(const IntervalUnionMeasure& m);
IntervalUnionMeasure measure_from_json(const json& j);
IntervalUnionMeasure read_measure(const std::string& path);

json pair_to_json(const ExponentPair& p);
json zigzag_to_json(const ZigzagPath& z);
json combination_to_json(const FiniteCombination& c);
json certificate_to_json(const SectionCertificate& c);
json family_to_json(const OrthSolutionFamily& f);
json scan_to_json(const ScanResult& s);
json candidate_report_to_json(const CandidateReport& r);

/// "size,lambda_min,lambda_max" rows.
std::string certificate_to_csv(const SectionCertificate& c);
/// "lambda1,lambda2,residual" rows over the scan's local minima and roots.
std::string scan_to_csv(const ScanResult& s);

}  // namespace addspec::io
