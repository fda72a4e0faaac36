#include "addspec/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "addspec/error.hpp"

namespace addspec::io {
namespace {

Rational rational_field(const json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw Error(ErrorCode::MalformedInput,
              std::string(what) + " must be a \"p/q\" string or an integer");
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, path + ": " + e.what());
  }
}

json number(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
}

json complex_to_json(std::complex<double> z) {
  return json::array({number(z.real()), number(z.imag())});
}

std::string csv_double(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

}  // namespace

json point_set_to_json(const ExponentSet& set) {
  json out = json::array();
  for (const auto& p : set.points()) out.push_back(pair_to_json(p));
  return out;
}

ExponentSet point_set_from_json(const json& j) {
  if (!j.is_array()) {
    throw Error(ErrorCode::MalformedInput, "point set must be a JSON array");
  }
  ExponentSet out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2) {
      throw Error(ErrorCode::MalformedInput, "each point must be a [x, y] pair");
    }
    out.insert({rational_field(item[0], "x"), rational_field(item[1], "y")});
  }
  return out;
}

ExponentSet read_point_set(const std::string& path) {
  return point_set_from_json(parse_file(path));
}

json measure_to_json(const IntervalUnionMeasure& m) {
  json out = json::array();
  for (const auto& p : m.pieces()) {
    out.push_back({{"left", to_string(p.left)},
                   {"right", to_string(p.right)},
                   {"weight", p.weight}});
  }
  return out;
}

IntervalUnionMeasure measure_from_json(const json& j) {
  if (!j.is_array()) {
    throw Error(ErrorCode::MalformedInput, "measure must be a JSON array");
  }
  std::vector<IntervalPiece> pieces;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("left") || !item.contains("right") ||
        !item.contains("weight")) {
      throw Error(ErrorCode::MalformedInput,
                  "each piece needs \"left\", \"right\" and \"weight\"");
    }
    const auto& w = item["weight"];
    double weight = 0.0;
    if (w.is_number()) {
      weight = w.get<double>();
    } else if (w.is_string()) {
      weight = to_double(parse_rational(w.get<std::string>()));
    } else {
      throw Error(ErrorCode::MalformedInput, "weight must be a number or \"p/q\"");
    }
    pieces.push_back({rational_field(item["left"], "left"),
                      rational_field(item["right"], "right"), weight});
  }
  try {
    return IntervalUnionMeasure(std::move(pieces));
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
}

IntervalUnionMeasure read_measure(const std::string& path) {
  return measure_from_json(parse_file(path));
}

json pair_to_json(const ExponentPair& p) {
  return json::array({to_string(p.a), to_string(p.b)});
}

json zigzag_to_json(const ZigzagPath& z) {
  json vertices = json::array();
  for (const auto& p : z.vertices()) vertices.push_back(pair_to_json(p));
  return {{"vertices", vertices},
          {"length", z.length()},
          {"starts_with", z.starts_with_zag() ? "zag" : "zig"},
          {"is_loop", z.is_loop()}};
}

json combination_to_json(const FiniteCombination& c) {
  json out = json::array();
  for (const auto& t : c.terms()) {
    out.push_back({{"pair", pair_to_json(t.pair)}, {"coeff", complex_to_json(t.coeff)}});
  }
  return out;
}

json certificate_to_json(const SectionCertificate& c) {
  json lo = json::array();
  json hi = json::array();
  for (double v : c.lambda_min) lo.push_back(number(v));
  for (double v : c.lambda_max) hi.push_back(number(v));
  json out = {{"sizes", c.sizes},
              {"lambda_min", lo},
              {"lambda_max", hi},
              {"verdict", verdict_name(c.verdict)},
              {"floor", number(c.floor)}};
  if (c.null_combination) {
    out["null_combination"] = combination_to_json(*c.null_combination);
    out["null_quadratic_form"] = number(c.null_quadratic_form);
  }
  return out;
}

json family_to_json(const OrthSolutionFamily& f) {
  return {{"kind", family_kind_name(f.kind)},
          {"offset", to_string(f.offset)},
          {"step", to_string(f.step)},
          {"antidiagonal", f.antidiagonal}};
}

json scan_to_json(const ScanResult& s) {
  json roots = json::array();
  for (const auto& r : s.roots) {
    roots.push_back({{"lambda1", r.l1},
                     {"lambda2", r.l2},
                     {"residual", r.residual},
                     {"in_family", r.in_family}});
  }
  std::size_t outside = 0;
  for (const auto& r : s.roots) outside += r.in_family ? 0 : 1;
  return {{"box", {s.box.lo1, s.box.hi1, s.box.lo2, s.box.hi2}},
          {"grid", s.grid},
          {"min_residual", number(s.min_residual)},
          {"argmin", {s.argmin.first, s.argmin.second}},
          {"grid_roots_outside", s.grid_roots_outside},
          {"roots", roots},
          {"roots_outside_families", outside},
          {"local_minima", s.local_minima.size()}};
}

json candidate_report_to_json(const CandidateReport& r) {
  json out = {{"t", to_string(r.t)},
              {"a", r.a},
              {"non_integer_family", family_to_json(r.non_integer_family)},
              {"verdict", candidate_verdict_name(r.verdict)},
              {"reason", r.reason}};
  if (r.candidate_step) {
    out["candidate_step"] = to_string(*r.candidate_step);
    out["projection_size"] = r.projection.size();
    out["window"] = r.window;
    out["density_estimate"] = r.density_estimate;
    out["density_exact"] = r.density_exact;
    out["orthonormality_deviation"] = r.orthonormality_deviation;
  }
  return out;
}

std::string certificate_to_csv(const SectionCertificate& c) {
  std::string out = "size,lambda_min,lambda_max\n";
  for (std::size_t i = 0; i < c.sizes.size(); ++i) {
    out += std::to_string(c.sizes[i]) + "," + csv_double(c.lambda_min[i]) + "," +
           csv_double(c.lambda_max[i]) + "\n";
  }
  return out;
}

std::string scan_to_csv(const ScanResult& s) {
  std::string out = "lambda1,lambda2,residual\n";
  for (const auto& m : s.local_minima) {
    out += csv_double(m.l1) + "," + csv_double(m.l2) + "," + csv_double(m.residual) +
           "\n";
  }
  for (const auto& r : s.roots) {
    out += csv_double(r.l1) + "," + csv_double(r.l2) + "," + csv_double(r.residual) +
           "\n";
  }
  return out;
}

}  // namespace addspec::io
