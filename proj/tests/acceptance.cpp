// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "addspec/constructions.hpp"
#include "addspec/gram.hpp"
#include "addspec/ortho_solver.hpp"
#include "oracles.hpp"

using namespace addspec;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Gate {
  int failures = 0;

  void report(int id, bool ok, const std::string& what, const std::string& detail) {
    std::printf("%s  %2d  %-44s %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }

  void run(int id, const std::string& what,
           const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    report(id, ok, what, detail);
  }
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

ExponentSet random_set(std::mt19937_64& rng, std::size_t max_size, int range) {
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::uniform_int_distribution<int> coord(0, range);
  const std::size_t n = size(rng);
  ExponentSet out;
  for (std::size_t tries = 0; out.size() < n && tries < 10 * n; ++tries) {
    const ExponentPair p{Rational(coord(rng), 2), Rational(coord(rng), 3)};
    if (!out.contains(p)) out.insert(p);
  }
  return out;
}

bool criterion_1(std::string& d) {
  const auto start = Clock::now();
  const auto onb = l_space_onb(64);
  const double dev = assemble(AdditiveSpace::l_space(), onb.points()).identity_deviation();
  const double t = seconds_since(start);
  d = fmt("n=%zu max|G-I|=%.3e time=%.2fs", onb.size(), dev, t);
  return onb.size() == 129 && dev < 1e-12 && t < 5.0;
}

bool criterion_2(std::string& d) {
  const auto start = Clock::now();
  const auto L = solve_families(Rational(0), Rational(0));
  const bool families_ok = L.kind == SolvedCase::LSpace && L.families.size() == 2 &&
                           L.families[0].kind == FamilyKind::IntegerLattice &&
                           L.families[1].kind == FamilyKind::AntidiagonalHalfInteger &&
                           L.families[1].offset == Rational(1, 2) &&
                           L.families[1].step == Rational(1);
  const auto s =
      scan_residual(Rational(0), Rational(0), {-4.0, 4.0, -4.0, 4.0}, 4000, L.families);
  std::size_t outside = 0;
  for (const auto& r : s.roots) outside += r.in_family ? 0 : 1;
  // union of the families equals the refined roots, away from the box edge
  const auto interior = [](double a, double b) {
    return std::abs(a) < 3.99 && std::abs(b) < 3.99;
  };
  std::size_t members = 0, found = 0;
  for (const auto& f : L.families) {
    for (const auto& [a, b] : f.members(400)) {
      if (interior(to_double(a), to_double(b))) ++members;
    }
  }
  for (const auto& r : s.roots) found += interior(r.l1, r.l2) ? 1 : 0;
  const double t = seconds_since(start);
  d = fmt("families=%zu grid-roots-outside=%zu roots-outside=%zu roots=%zu/%zu "
          "min-off-family=%.3e time=%.1fs",
          L.families.size(), s.grid_roots_outside, outside, found, members,
          s.min_residual, t);
  return families_ok && s.grid_roots_outside == 0 && outside == 0 && found == members &&
         s.min_residual >= 1e-6 && t < 60.0;
}

bool criterion_3(std::string& d) {
  const auto space = AdditiveSpace::symmetric(Rational(1));
  const auto spec = nonoverlap_riesz_spectrum(space.mu(), centered_lattice(Rational(1), 64));
  std::vector<std::size_t> sizes;
  for (int N : {8, 16, 32, 64}) sizes.push_back(2 * (2 * N + 1));
  const auto cert = riesz_section_certificate(space, spec.pairs.points(), sizes);
  double max_hi = 0.0;
  for (double v : cert.lambda_max) max_hi = std::max(max_hi, v);

  const double lower = 2.0 * (1.0 - std::cos(std::numbers::pi / 4.0));
  bool inside = true;
  for (int k = 0; k < 1000; ++k) {
    const double x = 1.0 + (k + 0.5) / 1000.0;
    const auto [lo, hi] = m_tau_eigenvalues(spec.tau, x);
    inside = inside && lo > lower && hi < 4.0;
  }
  d = fmt("tau=%s eps=%s lambda_min=[%.4f %.4f %.4f %.4f] floor=%.4f max=%.4f %s m_tau=%s",
          to_string(spec.tau).c_str(), to_string(spec.epsilon).c_str(), cert.lambda_min[0],
          cert.lambda_min[1], cert.lambda_min[2], cert.lambda_min[3], cert.floor, max_hi,
          std::string(verdict_name(cert.verdict)).c_str(), inside ? "inside" : "outside");
  return spec.tau == Rational(1, 4) && cert.verdict == Verdict::RieszConsistent &&
         cert.floor > 0.05 && max_hi < 4.0 && inside;
}

bool criterion_4(std::string& d) {
  std::vector<ExponentPair> rect{{Rational(1), Rational(1)}, {Rational(1), Rational(3)},
                                 {Rational(3), Rational(3)}, {Rational(3), Rational(1)}};
  auto closed = rect;
  closed.push_back(rect.front());
  const ZigzagPath loop(closed);
  double worst_form = 0.0, worst_norm = 0.0;
  bool degenerate = true;
  for (const auto& s : {AdditiveSpace::l_space(), AdditiveSpace::plus_space(),
                        AdditiveSpace::t_space()}) {
    const std::vector<std::size_t> sizes{4};
    const auto cert = riesz_section_certificate(s, rect, sizes);
    degenerate = degenerate && cert.verdict == Verdict::Degenerate && cert.null_combination;
    worst_form = std::max(worst_form, cert.null_quadratic_form);
    worst_norm = std::max(worst_norm, alternating_zigzag_norm(s, loop));
  }
  d = fmt("degenerate=%s null-form=%.3e alternating-norm=%.3e", degenerate ? "yes" : "no",
          worst_form, worst_norm);
  return degenerate && worst_form < 1e-10 && worst_norm < 1e-10;
}

bool criterion_5(std::string& d) {
  const auto L = AdditiveSpace::l_space();
  bool ok = true;
  for (int N : {7, 15, 31}) {
    const auto set = lev_style_set(2, N);
    const auto len = max_zigzag_length(set);
    const double norm = len.witness ? alternating_zigzag_norm(L, *len.witness) : INFINITY;
    const std::vector<std::size_t> all{set.size()};
    const double lmin = riesz_section_certificate(L, set.points(), all).lambda_min.back();
    const bool pass = !len.unbounded_by_loop && len.length >= static_cast<std::size_t>(N) &&
                      norm <= 2.0 && lmin <= 2.0 / (N + 1) + 1e-9;
    d += fmt("N=%d len=%zu norm=%.3f lmin=%.4f<=%.4f; ", N, len.length, norm, lmin,
             2.0 / (N + 1));
    ok = ok && pass;
  }
  return ok;
}

bool criterion_6(std::string& d) {
  bool ok = true;
  for (int a : {2, 3, 4, 5}) {
    const Rational t = (Rational(1, a) - 1) / 2;
    const auto r = classify_spectrum_candidates(t, 100.0);
    bool pass = false;
    if (a % 2 == 0) {
      pass = r.verdict == CandidateVerdict::FailsIntegerOnly &&
             r.non_integer_family.kind == FamilyKind::Empty;
      d += fmt("a=%d %s; ", a, std::string(candidate_verdict_name(r.verdict)).c_str());
    } else {
      const double exact = 2.0 / a;
      pass = r.verdict == CandidateVerdict::FailsLandau && exact < 1.0 &&
             std::abs(r.density_estimate - exact) <= 1.0 / r.window &&
             std::abs(r.density_exact - exact) < 1e-15;
      d += fmt("a=%d %s density=%.4f~%.4f; ", a,
               std::string(candidate_verdict_name(r.verdict)).c_str(), r.density_estimate,
               exact);
    }
    ok = ok && pass;
  }
  return ok;
}

bool criterion_7(std::string& d) {
  const Rational t(-1, 2), tp(-1);
  const auto T = solve_families(t, tp);
  const auto s = scan_residual(t, tp, {0.0, 1.0, 0.0, 1.0}, 2000, T.families);
  d = fmt("min-off-lattice=%.3e at (%.6f, %.6f), threshold 0.05", s.min_residual,
          s.argmin.first, s.argmin.second);
  return s.min_residual >= 0.05;
}

bool criterion_8(std::string& d) {
  bool ok = true;
  for (int k : {1, 2}) {
    const double dev =
        assemble(AdditiveSpace::symmetric(Rational(k)), mirror_spectrum(k, 32).points())
            .identity_deviation();
    // spot check against the quadrature oracle
    const auto m = IntervalUnionMeasure::unit_interval(Rational(k));
    double oracle_dev = 0.0;
    for (int n = 1; n <= 6; ++n) {
      const double l = 0.5 * n;
      const auto v = 0.5 * oracle::fourier_transform(m, l) + 0.5 * oracle::fourier_transform(m, -l);
      oracle_dev = std::max(oracle_dev, std::abs(v));
    }
    d += fmt("k=%d max|G-I|=%.3e oracle=%.3e; ", k, dev, oracle_dev);
    ok = ok && dev < 1e-12 && oracle_dev < 1e-12;
  }
  return ok;
}

bool criterion_9(std::string& d) {
  const auto one = PiecewisePolynomial::constant(1.0);
  std::mt19937_64 rng(0);
  const auto g = PiecewisePolynomial::random_piecewise_linear(-0.5, 0.5, 8, rng);
  const double r1 = collinear_failure_demo(Rational(1), 16, one).ratio;
  const double r2 = collinear_failure_demo(Rational(1, 2), 32, one).ratio;
  const double r3 = collinear_failure_demo(Rational(1), 16, g).ratio;
  d = fmt("ratios %.3e %.3e %.3e", r1, r2, r3);
  return r1 < 1e-10 && r2 < 1e-10 && r3 < 1e-10;
}

bool criterion_10(std::string& d) {
  std::mt19937_64 rng(10);
  std::size_t failures = 0;

  std::uniform_real_distribution<double> lam(-50.0, 50.0);
  const std::vector<IntervalUnionMeasure> measures{
      IntervalUnionMeasure::unit_interval(Rational(0)),
      IntervalUnionMeasure::unit_interval(Rational(-1, 2)),
      IntervalUnionMeasure::unit_interval(Rational(-1)),
      IntervalUnionMeasure::unit_interval(Rational(1)),
      IntervalUnionMeasure::uniform({{Rational(-2), Rational(-1)}, {Rational(1), Rational(2)}})};
  for (int i = 0; i < 10000; ++i) {
    const double l = lam(rng);
    const auto& m = measures[static_cast<std::size_t>(i) % measures.size()];
    if (std::abs(fourier_transform(m, -l) - std::conj(fourier_transform(m, l))) > 1e-15) {
      ++failures;
    }
  }
  const std::size_t conj_failures = failures;

  const std::vector<AdditiveSpace> spaces{AdditiveSpace::l_space(), AdditiveSpace::plus_space(),
                                          AdditiveSpace::t_space(),
                                          AdditiveSpace::symmetric(Rational(-1, 3))};
  for (int i = 0; i < 100; ++i) {
    const auto set = random_set(rng, 20, 8);
    const auto gram = assemble(spaces[static_cast<std::size_t>(i) % spaces.size()], set.points());
    const auto& G = gram.entries();
    if ((G - G.adjoint()).cwiseAbs().maxCoeff() != 0.0) ++failures;
  }
  const std::size_t herm_failures = failures - conj_failures;

  for (int i = 0; i < 1000; ++i) {
    const auto set = random_set(rng, 20, 8);
    const bool mult_one = multiplicity(set).max_mult == 1;
    const auto len = max_zigzag_length(set);
    const bool zero = !len.unbounded_by_loop && len.length == 0;
    if (mult_one != zero) ++failures;
  }
  const std::size_t mult_failures = failures - conj_failures - herm_failures;

  std::size_t with_loops = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto set = random_set(rng, 12, 4);
    const bool found = find_zigzag_loop(set).has_value();
    const bool brute = oracle::has_closed_alternating_walk(set.points(), set.size());
    with_loops += brute ? 1 : 0;
    if (found != brute) ++failures;
  }
  const std::size_t loop_failures =
      failures - conj_failures - herm_failures - mult_failures;
  d = fmt("failures: conj=%zu hermitian=%zu mult/zigzag=%zu loops=%zu (%zu sets with loops)",
          conj_failures, herm_failures, mult_failures, loop_failures, with_loops);
  return failures == 0;
}

}  // namespace

int main() {
  Gate gate;
  gate.run(1, "L-space ONB identity", criterion_1);
  gate.run(2, "L-space uniqueness scan", criterion_2);
  gate.run(3, "non-overlapping Riesz certificate", criterion_3);
  gate.run(4, "zigzag loop degeneracy", criterion_4);
  gate.run(5, "zigzag length bound", criterion_5);
  gate.run(6, "symmetric non-spectral cases", criterion_6);
  gate.run(7, "T-space scan off the integer lattice", criterion_7);
  gate.run(8, "mirror spectrum identity", criterion_8);
  gate.run(9, "collinear Plus-space failure", criterion_9);
  gate.run(10, "property suites", criterion_10);
  std::printf("%d criteria failed\n", gate.failures);
  return gate.failures == 0 ? 0 : 1;
}
