#include "addspec/ortho_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>
#include <tuple>

#include "addspec/additive_space.hpp"
#include "addspec/constructions.hpp"
#include "addspec/error.hpp"
#include "addspec/exponents.hpp"
#include "addspec/gram.hpp"

namespace addspec {
namespace {

constexpr double kLocalMinimumCeiling = 1e-2;
constexpr int kUnsolvedGrid = 400;
constexpr int kRefineIterations = 200;

double sinc(double l) {
  const double z = std::numbers::pi * l;
  if (std::abs(z) < 1e-6) return 1.0 - z * z / 6.0;
  return sin_pi(l) / z;
}

double sinc_derivative(double l) {
  const double z = std::numbers::pi * l;
  if (std::abs(z) < 1e-4) return -std::numbers::pi * z / 3.0;
  return (cos_pi(l) - sinc(l)) / l;
}

// One side of the equation: exp(pi i l c) sinc(l), c = 2t + 1.
std::complex<double> side(double c, double l) {
  const double phase = c * l;
  return std::complex<double>(cos_pi(phase), sin_pi(phase)) * sinc(l);
}

std::complex<double> side_derivative(double c, double l) {
  const double phase = c * l;
  const std::complex<double> e(cos_pi(phase), sin_pi(phase));
  return e * (std::complex<double>(0.0, std::numbers::pi * c) * sinc(l) +
              sinc_derivative(l));
}

double nearest_nonzero_integer_distance(double x) {
  const double r = std::round(x);
  if (r != 0.0) return std::abs(x - r);
  return 1.0 - std::abs(x);
}

double family_distance(std::span<const OrthSolutionFamily> families, double l1,
                       double l2) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& f : families) d = std::min(d, f.distance(l1, l2));
  return d;
}

double axis_point(double lo, double hi, int i, int grid) {
  if (i == grid - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / (grid - 1);
}

struct Candidate {
  double value;
  int i;
  int j;

  friend bool operator<(const Candidate& x, const Candidate& y) {
    return std::tie(x.value, x.i, x.j) < std::tie(y.value, y.i, y.j);
  }
};

struct Partial {
  Candidate best{std::numeric_limits<double>::infinity(), -1, -1};
  std::size_t roots_outside = 0;
  std::vector<std::pair<int, int>> minima;
};

// Levenberg-Marquardt on |A(l1) + B(l2)|^2. Roots of the L and symmetric cases
// can have a rank-one Jacobian, where plain Newton stalls.
std::pair<double, double> refine(double c1, double c2, double l1, double l2) {
  double mu = 1e-3;
  auto value = [&](double x, double y) { return side(c1, x) + side(c2, y); };
  std::complex<double> F = value(l1, l2);
  for (int it = 0; it < kRefineIterations && std::abs(F) > 1e-15; ++it) {
    const auto da = side_derivative(c1, l1);
    const auto db = side_derivative(c2, l2);
    // J = [[Re da, Re db], [Im da, Im db]]; solve (J^T J + mu I) d = -J^T F.
    const double j11 = da.real(), j12 = db.real(), j21 = da.imag(), j22 = db.imag();
    const double a11 = j11 * j11 + j21 * j21 + mu;
    const double a12 = j11 * j12 + j21 * j22;
    const double a22 = j12 * j12 + j22 * j22 + mu;
    const double g1 = -(j11 * F.real() + j21 * F.imag());
    const double g2 = -(j12 * F.real() + j22 * F.imag());
    const double det = a11 * a22 - a12 * a12;
    if (!(det > 0.0)) break;
    const double d1 = (a22 * g1 - a12 * g2) / det;
    const double d2 = (a11 * g2 - a12 * g1) / det;
    const double n1 = l1 + d1;
    const double n2 = l2 + d2;
    if (n1 == 0.0 || n2 == 0.0) break;
    const auto trial = value(n1, n2);
    if (std::abs(trial) < std::abs(F)) {
      l1 = n1;
      l2 = n2;
      F = trial;
      mu = std::max(mu * 0.1, 1e-15);
    } else {
      mu *= 10.0;
      if (mu > 1e10) break;
    }
  }
  return {l1, l2};
}

OrthSolutionFamily integer_lattice() {
  return {FamilyKind::IntegerLattice, Rational(0), Rational(1), false};
}

OrthSolutionFamily antidiagonal(FamilyKind kind, const Rational& offset,
                                const Rational& step) {
  return {kind, offset, step, true};
}

// a with 2t + 1 = 1/a, a >= 1 an integer, or 0.
int reciprocal_index(const Rational& t) {
  const Rational c = 2 * t + 1;
  if (c > 0 && c.numerator() == 1) return static_cast<int>(c.denominator());
  return 0;
}

}  // namespace

double residual(const Rational& t, const Rational& t_prime, double l1, double l2) {
  if (l1 == 0.0 || l2 == 0.0) {
    throw Error(ErrorCode::MultiplicityOneViolation,
                "a zero difference puts two exponents on one line");
  }
  return std::abs(side(to_double(2 * t + 1), l1) +
                  side(to_double(2 * t_prime + 1), l2));
}

std::string_view family_kind_name(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::IntegerLattice:
      return "integer-lattice";
    case FamilyKind::AntidiagonalHalfInteger:
      return "antidiagonal-half-integer";
    case FamilyKind::AntidiagonalOddMultipleAHalf:
      return "antidiagonal-odd-multiple-a-half";
    case FamilyKind::Empty:
      return "empty";
  }
  return "empty";
}

std::vector<std::pair<Rational, Rational>> OrthSolutionFamily::members(
    std::size_t count) const {
  std::vector<std::pair<Rational, Rational>> out;
  if (kind == FamilyKind::Empty) return out;
  out.reserve(count);
  if (kind == FamilyKind::IntegerLattice) {
    for (std::int64_t r = 1; out.size() < count; ++r) {
      for (std::int64_t m = -r; m <= r && out.size() < count; ++m) {
        for (std::int64_t n = -r; n <= r && out.size() < count; ++n) {
          if (m == 0 || n == 0) continue;
          if (std::max(m < 0 ? -m : m, n < 0 ? -n : n) != r) continue;
          out.emplace_back(Rational(m), Rational(n));
        }
      }
    }
    return out;
  }
  // offset + n step, ordered by |l1| and then by value.
  for (std::int64_t k = 0; out.size() < count; ++k) {
    const Rational lo = offset - step * (k + 1);
    const Rational hi = offset + step * k;
    std::vector<Rational> shell{lo, hi};
    std::sort(shell.begin(), shell.end(), [](const Rational& x, const Rational& y) {
      return abs(x) < abs(y) || (abs(x) == abs(y) && x < y);
    });
    for (const auto& l : shell) {
      if (out.size() < count) out.emplace_back(l, -l);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return abs(x.first) < abs(y.first) ||
           (abs(x.first) == abs(y.first) && x.first < y.first);
  });
  return out;
}

double OrthSolutionFamily::distance(double l1, double l2) const {
  switch (kind) {
    case FamilyKind::Empty:
      return std::numeric_limits<double>::infinity();
    case FamilyKind::IntegerLattice:
      return std::max(nearest_nonzero_integer_distance(l1),
                      nearest_nonzero_integer_distance(l2));
    default:
      break;
  }
  const double o = to_double(offset);
  const double s = to_double(step);
  const double k = std::floor(((l1 - l2) / 2.0 - o) / s);
  double best = std::numeric_limits<double>::infinity();
  for (double kk : {k - 1.0, k, k + 1.0, k + 2.0}) {
    const double m = o + kk * s;
    best = std::min(best, std::max(std::abs(l1 - m), std::abs(l2 + m)));
  }
  return best;
}

std::string_view solved_case_name(SolvedCase c) noexcept {
  switch (c) {
    case SolvedCase::LSpace:
      return "L";
    case SolvedCase::SymmetricEven:
      return "symmetric-even";
    case SolvedCase::SymmetricOdd:
      return "symmetric-odd";
    case SolvedCase::TSpace:
      return "T";
    case SolvedCase::Unsolved:
      return "unsolved";
  }
  return "unsolved";
}

ScanResult scan_residual(const Rational& t, const Rational& t_prime,
                         const ScanBox& box, int grid,
                         std::span<const OrthSolutionFamily> exclude,
                         const ScanOptions& options) {
  if (grid < 2) throw Error(ErrorCode::InvalidArgument, "grid must be >= 2");
  if (!(box.hi1 > box.lo1) || !(box.hi2 > box.lo2)) {
    throw Error(ErrorCode::InvalidArgument, "empty scan box");
  }
  const double c1 = to_double(2 * t + 1);
  const double c2 = to_double(2 * t_prime + 1);
  const auto n = static_cast<std::size_t>(grid);
  std::vector<double> x1(n), x2(n);
  std::vector<std::complex<double>> A(n), B(n);
  for (int i = 0; i < grid; ++i) {
    x1[i] = axis_point(box.lo1, box.hi1, i, grid);
    x2[i] = axis_point(box.lo2, box.hi2, i, grid);
    A[i] = side(c1, x1[i]);
    B[i] = side(c2, x2[i]);
  }
  // Each side is Lipschitz with constant pi |c| + 2, so the grid point next to a
  // root has residual at most this.
  const double h = std::max((box.hi1 - box.lo1), (box.hi2 - box.lo2)) / (grid - 1);
  const double ceiling = std::max(
      kLocalMinimumCeiling,
      (std::numbers::pi * (std::abs(c1) + std::abs(c2)) + 4.0) * 0.5 * h);
  const auto value = [&](int i, int j) {
    if (x1[i] == 0.0 || x2[j] == 0.0) return std::numeric_limits<double>::infinity();
    return std::abs(A[i] + B[j]);
  };

  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(grid));
  std::vector<Partial> partials(threads);
  auto work = [&](unsigned w) {
    Partial& p = partials[w];
    for (int i = static_cast<int>(w); i < grid; i += static_cast<int>(threads)) {
      for (int j = 0; j < grid; ++j) {
        const double r = value(i, j);
        if (!std::isfinite(r)) continue;
        if (r < ceiling) {
          bool minimum = true;
          for (int di = -1; di <= 1 && minimum; ++di) {
            for (int dj = -1; dj <= 1; ++dj) {
              const int ii = i + di, jj = j + dj;
              if ((di == 0 && dj == 0) || ii < 0 || jj < 0 || ii >= grid || jj >= grid) {
                continue;
              }
              if (value(ii, jj) < r) {
                minimum = false;
                break;
              }
            }
          }
          if (minimum) p.minima.emplace_back(i, j);
        }
        if (family_distance(exclude, x1[i], x2[j]) < options.exclusion_radius) continue;
        p.best = std::min(p.best, Candidate{r, i, j});
        if (r < options.root_tolerance) ++p.roots_outside;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& th : pool) th.join();

  ScanResult result;
  result.box = box;
  result.grid = grid;
  Candidate best{std::numeric_limits<double>::infinity(), -1, -1};
  std::vector<std::pair<int, int>> minima;
  for (const auto& p : partials) {
    best = std::min(best, p.best);
    result.grid_roots_outside += p.roots_outside;
    minima.insert(minima.end(), p.minima.begin(), p.minima.end());
  }
  std::sort(minima.begin(), minima.end());
  if (best.i >= 0) {
    result.min_residual = best.value;
    result.argmin = {x1[best.i], x2[best.j]};
  } else {
    result.min_residual = std::numeric_limits<double>::infinity();
  }

  for (const auto& [i, j] : minima) {
    const double r = value(i, j);
    result.local_minima.push_back(
        {x1[i], x2[j], r,
         family_distance(exclude, x1[i], x2[j]) < options.exclusion_radius});
    const auto [l1, l2] = refine(c1, c2, x1[i], x2[j]);
    if (l1 < box.lo1 - h || l1 > box.hi1 + h || l2 < box.lo2 - h || l2 > box.hi2 + h) {
      continue;
    }
    const double rr = std::abs(side(c1, l1) + side(c2, l2));
    if (!(rr < options.root_tolerance)) continue;
    result.roots.push_back(
        {l1, l2, rr, family_distance(exclude, l1, l2) < options.exclusion_radius});
  }
  // Degenerate zeros leave several refined points close to one root; keep the
  // best of each cluster.
  std::sort(result.roots.begin(), result.roots.end(), [](const auto& x, const auto& y) {
    return std::tie(x.residual, x.l1, x.l2) < std::tie(y.residual, y.l1, y.l2);
  });
  const double radius = std::max(1e-4, 2.0 * h);
  std::vector<ScanRoot> unique;
  for (const auto& r : result.roots) {
    const bool dup = std::any_of(unique.begin(), unique.end(), [&](const auto& u) {
      return std::max(std::abs(u.l1 - r.l1), std::abs(u.l2 - r.l2)) < radius;
    });
    if (!dup) unique.push_back(r);
  }
  std::sort(unique.begin(), unique.end(), [](const auto& x, const auto& y) {
    return std::tie(x.l1, x.l2) < std::tie(y.l1, y.l2);
  });
  result.roots = std::move(unique);
  return result;
}

SolveOutcome solve_families(const Rational& t, const Rational& t_prime) {
  return solve_families(t, t_prime, kUnsolvedGrid);
}

SolveOutcome solve_families(const Rational& t, const Rational& t_prime,
                            int unsolved_grid) {
  SolveOutcome out;
  if (t == Rational(-1, 2) && t_prime == -1) {
    out.kind = SolvedCase::TSpace;
    out.families = {integer_lattice()};
    return out;
  }
  const int a = t == t_prime ? reciprocal_index(t) : 0;
  if (a == 1) {
    out.kind = SolvedCase::LSpace;
    out.a = 1;
    out.families = {integer_lattice(),
                    antidiagonal(FamilyKind::AntidiagonalHalfInteger, Rational(1, 2),
                                 Rational(1))};
    return out;
  }
  if (a >= 2) {
    out.a = a;
    out.families = {integer_lattice()};
    if (a % 2 == 0) {
      out.kind = SolvedCase::SymmetricEven;
    } else {
      out.kind = SolvedCase::SymmetricOdd;
      out.families.push_back(antidiagonal(FamilyKind::AntidiagonalOddMultipleAHalf,
                                          Rational(a, 2), Rational(a)));
    }
    return out;
  }
  out.kind = SolvedCase::Unsolved;
  out.scan = scan_residual(t, t_prime, {-4.0, 4.0, -4.0, 4.0}, unsolved_grid, {});
  return out;
}

std::string_view candidate_verdict_name(CandidateVerdict v) noexcept {
  switch (v) {
    case CandidateVerdict::ValidOnb:
      return "valid-onb";
    case CandidateVerdict::FailsLandau:
      return "fails-landau";
    case CandidateVerdict::FailsIntegerOnly:
      return "fails-integer-only";
  }
  return "fails-integer-only";
}

CandidateReport classify_spectrum_candidates(const Rational& t, double window) {
  if (!(window > 0.0)) throw Error(ErrorCode::InvalidArgument, "window must be > 0");
  const int a = reciprocal_index(t);
  if (a < 1) {
    throw Error(ErrorCode::UnsolvedCase,
                "t = " + to_string(t) + " is not of the form 2t + 1 = 1/a");
  }
  const auto solved = solve_families(t, t);
  CandidateReport report;
  report.t = t;
  report.a = a;
  report.window = window;
  if (solved.families.size() < 2) {
    report.verdict = CandidateVerdict::FailsIntegerOnly;
    report.reason =
        "only integer solutions: every difference lies in Z^2, which contradicts "
        "multiplicity one";
    return report;
  }
  report.non_integer_family = solved.families[1];
  const Rational step = report.non_integer_family.offset;
  report.candidate_step = step;
  report.density_exact = to_double(1 / step);
  // Truncate to about ten windows on each side so the anchors sweep many windows.
  const int N = static_cast<int>(std::ceil(10.0 * window / to_double(step)));
  report.projection = centered_lattice(step, N);
  std::sort(report.projection.begin(), report.projection.end());
  report.density_estimate = lower_beurling_density(report.projection, window, 64);

  std::vector<ExponentPair> pairs;
  for (const auto& l : centered_lattice(step, 32)) pairs.push_back({l, -l});
  report.orthonormality_deviation =
      assemble(AdditiveSpace::symmetric(t), pairs).identity_deviation();

  if (report.density_exact < 1.0) {
    report.verdict = CandidateVerdict::FailsLandau;
    report.reason = "projection " + to_string(step) +
                    "Z has density below 1, so it is not a frame for the component";
  } else {
    report.verdict = CandidateVerdict::ValidOnb;
    report.reason = "orthonormal and the projection has density >= 1";
  }
  return report;
}

}  // namespace addspec
