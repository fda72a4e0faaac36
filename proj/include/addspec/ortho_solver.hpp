#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "addspec/rational.hpp"

namespace addspec {

/// |exp(pi i l1 (2t+1)) sinc(l1) + exp(pi i l2 (2t'+1)) sinc(l2)|, zero exactly
/// when (l1, l2) solves the orthogonality equation for components [t, t+1] and
/// [t', t'+1]. Throws Error(MultiplicityOneViolation) if l1 or l2 is zero.
double residual(const Rational& t, const Rational& t_prime, double l1,
                double l2);

enum class FamilyKind {
  IntegerLattice,
  AntidiagonalHalfInteger,
  AntidiagonalOddMultipleAHalf,
  Empty,
};

std::string_view family_kind_name(FamilyKind kind) noexcept;

/// Closed-form solution family. Integer lattice: l1, l2 nonzero integers.
/// Antidiagonal kinds: l1 = offset + n step, l2 = -l1.
struct OrthSolutionFamily {
  FamilyKind kind = FamilyKind::Empty;
  Rational offset;
  Rational step;
  bool antidiagonal = false;

  /// First `count` members in a deterministic order (by max-norm shell, then
  /// lexicographically).
  std::vector<std::pair<Rational, Rational>> members(std::size_t count) const;

  /// Max-norm distance from (l1, l2) to the nearest member.
  double distance(double l1, double l2) const;
};

enum class SolvedCase { LSpace, SymmetricEven, SymmetricOdd, TSpace, Unsolved };

std::string_view solved_case_name(SolvedCase c) noexcept;

struct ScanBox {
  double lo1 = 0.0;
  double hi1 = 1.0;
  double lo2 = 0.0;
  double hi2 = 1.0;
};

struct ScanRoot {
  double l1;
  double l2;
  double residual;
  bool in_family;
};

struct ScanResult {
  ScanBox box;
  int grid = 0;
  /// Minimum over grid points outside the exclusion neighbourhoods.
  double min_residual = 0.0;
  std::pair<double, double> argmin{0.0, 0.0};
  /// Grid points outside the neighbourhoods with residual < root_tolerance.
  std::size_t grid_roots_outside = 0;
  /// Grid local minima refined by Levenberg-Marquardt to residual <
  /// root_tolerance, kept when they land inside the box (up to one grid step).
  /// Roots closer than two grid steps are merged into the one with the smallest
  /// residual; sorted by (l1, l2).
  std::vector<ScanRoot> roots;
  /// Grid local minima with residual below max(1e-2, (pi (|c1| + |c2|) + 4) h / 2),
  /// c = 2t + 1 and h the grid step; for plotting.
  std::vector<ScanRoot> local_minima;
};

struct ScanOptions {
  double exclusion_radius = 1e-3;
  double root_tolerance = 1e-6;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Grid scan of the residual on `grid` x `grid` equally spaced points including
/// the box corners. Grid points with l1 = 0 or l2 = 0 are skipped. The minimum
/// is reduced deterministically (value, then row, then column).
ScanResult scan_residual(const Rational& t, const Rational& t_prime,
                         const ScanBox& box, int grid,
                         std::span<const OrthSolutionFamily> exclude,
                         const ScanOptions& options = {});

struct SolveOutcome {
  SolvedCase kind = SolvedCase::Unsolved;
  /// a with 2t + 1 = 1/a for the symmetric cases (1 for L), else 0.
  int a = 0;
  std::vector<OrthSolutionFamily> families;
  /// Only set for unsolved cases.
  std::optional<ScanResult> scan;
};

/// Hard-coded families for the solved cases: L (0,0); symmetric 2t+1 = 1/a;
/// T (-1/2,-1). Anything else returns Unsolved with a scan over [-4,4]^2.
SolveOutcome solve_families(const Rational& t, const Rational& t_prime);

/// Same, with the scan of unsolved cases done at the given resolution.
SolveOutcome solve_families(const Rational& t, const Rational& t_prime,
                            int unsolved_grid);

enum class CandidateVerdict { ValidOnb, FailsLandau, FailsIntegerOnly };

std::string_view candidate_verdict_name(CandidateVerdict v) noexcept;

struct CandidateReport {
  Rational t;
  int a = 0;
  /// Family carrying the non-integer differences (Empty for even a).
  OrthSolutionFamily non_integer_family;
  /// Candidate set {(s n, -s n)} with s = candidate_step; absent for even a.
  std::optional<Rational> candidate_step;
  /// Truncated projection of the candidate onto the x-axis.
  std::vector<Rational> projection;
  double window = 0.0;
  double density_estimate = 0.0;
  double density_exact = 0.0;  // 1 / candidate_step
  /// max |G - I| of the truncated candidate in its own space.
  double orthonormality_deviation = 0.0;
  CandidateVerdict verdict = CandidateVerdict::FailsIntegerOnly;
  std::string reason;
};

/// Equivalence-class argument for the symmetric spaces [t, t+1] with
/// 2t + 1 = 1/a: with (0,0) in Lambda every pair has sum 0, so the maximal
/// candidate is {(s n, -s n)} with s = 1/2 for L and a/2 for odd a.
/// Throws Error(UnsolvedCase) for other t.
CandidateReport classify_spectrum_candidates(const Rational& t,
                                             double window = 100.0);

}  // namespace addspec
