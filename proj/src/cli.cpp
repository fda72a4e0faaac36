#include "addspec/cli.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "addspec/constructions.hpp"
#include "addspec/error.hpp"
#include "addspec/io.hpp"

namespace addspec::cli {
namespace {

using io::json;

constexpr const char* kVersion = "0.1.0";

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput:
    case ErrorCode::DuplicatePoint:
      return kExitMalformedInput;
    case ErrorCode::OverlappingSupport:
      return kExitOverlappingSupport;
    default:
      return kExitDomain;
  }
}

void write_error(std::ostream& err, std::string_view code, const std::string& message) {
  err << json{{"error", {{"code", code}, {"message", message}}}}.dump() << "\n";
}

AdditiveSpace space_of(const RunConfig& c) {
  if (c.measure) return AdditiveSpace::symmetric(io::read_measure(*c.measure));
  return AdditiveSpace::from_preset(c.space);
}

ExponentSet points_of(const RunConfig& c) {
  if (c.points && *c.points != "-") return io::read_point_set(*c.points);
  try {
    return io::point_set_from_json(json::parse(std::cin));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("stdin: ") + e.what());
  }
}

std::vector<std::complex<double>> parse_coefficients(const std::string& text) {
  std::vector<std::complex<double>> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.emplace_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::MalformedInput, "bad coefficient \"" + item + "\"");
    }
  }
  if (out.empty()) throw Error(ErrorCode::MalformedInput, "empty coefficient list");
  return out;
}

std::pair<double, double> hull(const IntervalUnionMeasure& m) {
  return {to_double(m.pieces().front().left), to_double(m.pieces().back().right)};
}

// "random", or "f=c0,c1,...;g=d0,d1,..." with polynomial coefficients by degree.
TestFunction parse_test_function(const std::string& text, const AdditiveSpace& s,
                                 std::uint64_t seed) {
  if (text == "random") {
    std::mt19937_64 rng(seed);
    const auto [fl, fh] = hull(s.mu());
    const auto [gl, gh] = hull(s.nu());
    auto f = PiecewisePolynomial::random_piecewise_linear(fl, fh, 8, rng);
    auto g = PiecewisePolynomial::random_piecewise_linear(gl, gh, 8, rng);
    return {std::move(f), std::move(g)};
  }
  TestFunction F{PiecewisePolynomial::constant(0.0), PiecewisePolynomial::constant(0.0)};
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) {
    if (part.size() < 3 || part[1] != '=' || (part[0] != 'f' && part[0] != 'g')) {
      throw Error(ErrorCode::MalformedInput,
                  "test function parts look like f=c0,c1 or g=c0,c1");
    }
    auto p = PiecewisePolynomial::polynomial(parse_coefficients(part.substr(2)));
    (part[0] == 'f' ? F.f : F.g) = std::move(p);
  }
  return F;
}

json zigzag_length_json(const ZigzagLength& z) {
  json out = {{"unbounded_by_loop", z.unbounded_by_loop}, {"length", z.length}};
  out["witness"] = z.witness ? io::zigzag_to_json(*z.witness) : json(nullptr);
  return out;
}

json density_json(std::span<const Rational> proj, double window, int anchors) {
  const std::vector<double> windows{window / 4.0, window / 2.0, window};
  json sweep = json::array();
  for (const auto& d : beurling_density_sweep(proj, windows, anchors)) {
    sweep.push_back({{"window", d.window}, {"density", d.density}});
  }
  return sweep;
}

struct Report {
  json body;
  std::string csv;  // used for --format csv when non-empty
  int status = kExitOk;
  bool plain = false;  // emit the body without the body/meta wrapper
};

Report analyze(const RunConfig& c) {
  const auto set = points_of(c);
  const auto mult = multiplicity(set);
  const auto loop = find_zigzag_loop(set);
  const auto px = project(set, Axis::X);
  const auto py = project(set, Axis::Y);
  Report r;
  r.body = {{"command", "analyze"},
            {"size", set.size()},
            {"multiplicity", mult.max_mult},
            {"loop", loop ? io::zigzag_to_json(*loop) : json(nullptr)},
            {"max_zigzag", zigzag_length_json(max_zigzag_length(set))},
            {"density",
             {{"x", density_json(px, c.window, c.anchors)},
              {"y", density_json(py, c.window, c.anchors)}}}};
  return r;
}

std::vector<std::size_t> default_sizes(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k : {n / 8, n / 4, n / 2, n}) {
    if (k > 0 && (out.empty() || k > out.back())) out.push_back(k);
  }
  return out;
}

Report gram(const RunConfig& c) {
  const auto space = space_of(c);
  const auto set = points_of(c);
  const auto& pairs = set.points();
  if (pairs.empty()) throw Error(ErrorCode::EmptyMatrix, "the point set is empty");
  const auto g = assemble(space, pairs);
  const auto ev = extremal_eigenvalues(g);
  const auto sizes = c.sizes.empty() ? default_sizes(pairs.size()) : c.sizes;
  const auto cert = riesz_section_certificate(space, pairs, sizes);
  Report r;
  r.body = {{"command", "gram"},
            {"space", space.name()},
            {"size", pairs.size()},
            {"lambda_min", ev.min},
            {"lambda_max", ev.max},
            {"identity_deviation", g.identity_deviation()},
            {"certificate", io::certificate_to_json(cert)}};
  r.csv = io::certificate_to_csv(cert);
  if (c.test_fn) {
    const auto F = parse_test_function(*c.test_fn, space, c.seed);
    r.body["parseval_residual"] = parseval_residual(space, pairs, F);
  }
  if (c.check) {
    if (*c.check != "identity") {
      throw Error(ErrorCode::InvalidArgument, "unknown check \"" + *c.check + "\"");
    }
    const bool passed = g.identity_deviation() < 1e-12;
    r.body["check"] = {{"name", "identity"}, {"tolerance", 1e-12}, {"passed", passed}};
    if (!passed) r.status = kExitCheckFailed;
  }
  return r;
}

Report construct(const RunConfig& c) {
  Report r;
  r.plain = true;
  if (c.kind == "nonoverlap") {
    if (!c.measure) throw Error(ErrorCode::InvalidArgument, "nonoverlap needs --measure");
    const auto m = io::read_measure(*c.measure);
    const auto base = centered_lattice(parse_rational(c.base_step), c.N);
    r.body = io::point_set_to_json(nonoverlap_riesz_spectrum(m, base).pairs);
  } else if (c.kind == "l-onb") {
    r.body = io::point_set_to_json(l_space_onb(c.N));
  } else if (c.kind == "mirror") {
    r.body = io::point_set_to_json(mirror_spectrum(c.k, c.N));
  } else if (c.kind == "lev") {
    r.body = io::point_set_to_json(lev_style_set(c.q, c.depth));
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown construction \"" + c.kind + "\"");
  }
  return r;
}

std::pair<Rational, Rational> offsets_of(const RunConfig& c) {
  if (c.t || c.t_prime) {
    const Rational t = parse_rational(c.t.value_or("0"));
    return {t, c.t_prime ? parse_rational(*c.t_prime) : t};
  }
  const auto s = AdditiveSpace::from_preset(c.space);
  const auto t = s.mu().unit_interval_offset();
  const auto tp = s.nu().unit_interval_offset();
  if (!t || !tp) {
    throw Error(ErrorCode::InvalidArgument, "components must be unit intervals");
  }
  return {*t, *tp};
}

Report solve_oe(const RunConfig& c) {
  const auto [t, tp] = offsets_of(c);
  const auto outcome = solve_families(t, tp, c.grid);
  json families = json::array();
  for (const auto& f : outcome.families) {
    json members = json::array();
    for (const auto& [l1, l2] : f.members(6)) {
      members.push_back({to_string(l1), to_string(l2)});
    }
    auto fj = io::family_to_json(f);
    fj["first_members"] = members;
    families.push_back(fj);
  }
  Report r;
  r.body = {{"command", "solve-oe"},
            {"t", to_string(t)},
            {"t_prime", to_string(tp)},
            {"case", solved_case_name(outcome.kind)},
            {"a", outcome.a},
            {"families", families}};
  std::optional<ScanResult> scan = outcome.scan;
  if (c.scan && !scan) {
    ScanBox box{-4.0, 4.0, -4.0, 4.0};
    if (c.box) {
      if (c.box->size() != 4) {
        throw Error(ErrorCode::InvalidArgument, "--box takes lo1 hi1 lo2 hi2");
      }
      box = {(*c.box)[0], (*c.box)[1], (*c.box)[2], (*c.box)[3]};
    }
    scan = scan_residual(t, tp, box, c.grid, outcome.families);
  }
  if (scan) {
    r.body["scan"] = io::scan_to_json(*scan);
    r.csv = io::scan_to_csv(*scan);
  }
  if (c.classify) {
    if (t != tp) {
      throw Error(ErrorCode::UnsolvedCase, "classification needs a symmetric space");
    }
    r.body["classification"] =
        io::candidate_report_to_json(classify_spectrum_candidates(t, c.window));
  }
  return r;
}

Report demo_collinear(const RunConfig& c) {
  const Rational a = parse_rational(c.slope);
  PiecewisePolynomial g;
  if (c.g == "const") {
    g = PiecewisePolynomial::constant(1.0);
  } else if (c.g == "random") {
    std::mt19937_64 rng(c.seed);
    g = PiecewisePolynomial::random_piecewise_linear(-0.5, 0.5, 8, rng);
  } else {
    throw Error(ErrorCode::InvalidArgument, "--g is const or random");
  }
  const auto rep = collinear_failure_demo(a, c.N, g);
  Report r;
  r.body = {{"command", "demo-collinear"},
            {"slope", to_string(rep.slope)},
            {"count", rep.count},
            {"energy", rep.energy},
            {"norm_sq", rep.norm_sq},
            {"ratio", rep.ratio}};
  return r;
}

Report dispatch(const RunConfig& c) {
  if (c.command == "analyze") return analyze(c);
  if (c.command == "gram") return gram(c);
  if (c.command == "construct") return construct(c);
  if (c.command == "solve-oe") return solve_oe(c);
  return demo_collinear(c);
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  static const std::set<std::string> commands{"analyze", "gram", "construct",
                                              "solve-oe", "demo-collinear"};
  if (commands.count(config.command) == 0) {
    write_error(err, "usage", "unknown command \"" + config.command + "\"");
    return kExitUsage;
  }
  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    report = dispatch(config);
  } catch (const Error& e) {
    write_error(err, code_name(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    write_error(err, "internal", e.what());
    return kExitInternal;
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();

  std::string text;
  if (config.format == Format::Csv && !report.csv.empty()) {
    text = report.csv;
  } else if (report.plain || !config.with_meta) {
    text = report.body.dump(2) + "\n";
  } else {
    json doc = {{"body", report.body},
                {"meta", {{"tool", "addspec"}, {"version", kVersion}, {"elapsed_ms", elapsed}}}};
    text = doc.dump(2) + "\n";
  }
  if (config.out) {
    std::ofstream file(*config.out, std::ios::binary);
    if (!file) {
      write_error(err, "io", "cannot write " + *config.out);
      return kExitInternal;
    }
    file << text;
  } else {
    out << text;
  }
  return report.status;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Spectral constructions and certificates for additive measures", "addspec"};
  app.require_subcommand(1);
  std::string format = "json";

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--space", c.space, "L, Plus, T or Symmetric:t=p/q");
    sub->add_option("--measure", c.measure, "measure JSON used on both axes");
    sub->add_option("--points", c.points, "point-set JSON ('-' for stdin)");
    sub->add_option("--N", c.N);
    sub->add_option("--q", c.q);
    sub->add_option("--depth", c.depth);
    sub->add_option("--grid", c.grid);
    sub->add_option("--window", c.window);
    sub->add_option("--anchors", c.anchors);
    sub->add_option("--seed", c.seed);
    sub->add_option("--out", c.out);
    sub->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("!--no-meta", c.with_meta, "omit the meta block");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "multiplicity, loops, zigzags, density");
  common(analyze_cmd);

  auto* gram_cmd = app.add_subcommand("gram", "section certificates and Parseval residuals");
  common(gram_cmd);
  gram_cmd->add_option("--sizes", c.sizes, "nested section sizes");
  gram_cmd->add_option("--check", c.check, "identity");
  gram_cmd->add_option("--test-fn", c.test_fn, "random or f=c0,c1;g=d0,d1");

  auto* construct_cmd = app.add_subcommand("construct", "explicit spectra");
  common(construct_cmd);
  construct_cmd->add_option("kind", c.kind, "nonoverlap | l-onb | mirror | lev")
      ->required()
      ->check(CLI::IsMember({"nonoverlap", "l-onb", "mirror", "lev"}));
  construct_cmd->add_option("--k", c.k);
  construct_cmd->add_option("--base-step", c.base_step);

  auto* solve_cmd = app.add_subcommand("solve-oe", "orthogonality equation");
  common(solve_cmd);
  solve_cmd->add_option("--t", c.t);
  solve_cmd->add_option("--t-prime", c.t_prime);
  solve_cmd->add_flag("--scan", c.scan);
  solve_cmd->add_flag("--classify", c.classify);
  solve_cmd->add_option("--box", c.box, "lo1 hi1 lo2 hi2")->expected(4);

  auto* demo_cmd = app.add_subcommand("demo-collinear", "collinear Plus-space failure");
  common(demo_cmd);
  demo_cmd->add_option("--a", c.slope, "slope in (0, 1]");
  demo_cmd->add_option("--g", c.g, "const or random");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.what());
    return kExitUsage;
  }
  c.command = app.get_subcommands().front()->get_name();
  c.format = format == "csv" ? Format::Csv : Format::Json;
  return run(c, out, err);
}

}  // namespace addspec::cli
