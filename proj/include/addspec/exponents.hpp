#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "addspec/additive_space.hpp"
#include "addspec/error.hpp"

namespace addspec {

/// Finite, insertion-ordered set of exponent pairs. Duplicates are rejected.
class ExponentSet {
 public:
  ExponentSet() = default;
  explicit ExponentSet(std::vector<ExponentPair> points);

  /// Throws Error(DuplicatePoint) if `p` is already present.
  void insert(const ExponentPair& p);
  bool contains(const ExponentPair& p) const { return index_.count(p) != 0; }

  const std::vector<ExponentPair>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

 private:
  std::vector<ExponentPair> points_;
  std::unordered_set<ExponentPair, ExponentPairHash> index_;
};

/// A zigzag: consecutive points are distinct and share exactly one coordinate,
/// and the shared coordinate alternates. A "zag" is a vertical move (shared x),
/// a "zig" a horizontal one (shared y).
class ZigzagPath {
 public:
  /// Validates the alternation; throws Error(InvalidArgument) otherwise.
  explicit ZigzagPath(std::vector<ExponentPair> vertices);

  const std::vector<ExponentPair>& vertices() const noexcept { return vertices_; }
  /// Number of points minus one.
  std::size_t length() const noexcept { return vertices_.size() - 1; }
  bool starts_with_zag() const noexcept { return starts_with_zag_; }
  /// Positive even length with identical first and last point.
  bool is_loop() const noexcept;

 private:
  std::vector<ExponentPair> vertices_;
  bool starts_with_zag_ = false;
};

class LoopError : public Error {
 public:
  LoopError(const std::string& message, ZigzagPath loop)
      : Error(ErrorCode::LoopDetected, message), loop_(std::move(loop)) {}
  const ZigzagPath& loop() const noexcept { return loop_; }

 private:
  ZigzagPath loop_;
};

/// Distinct coordinates along `axis`, ascending.
std::vector<Rational> project(const ExponentSet& set, Axis axis);

struct Multiplicity {
  int max_mult = 0;
  std::map<Rational, int> vertical;    // x -> points on the line x = const
  std::map<Rational, int> horizontal;  // y -> points on the line y = const
};

Multiplicity multiplicity(const ExponentSet& set);

/// A zigzag loop if the set has one. Loops are exactly the cycles of the
/// bipartite line-incidence graph (vertices: distinct x-lines and y-lines,
/// edges: points).
std::optional<ZigzagPath> find_zigzag_loop(const ExponentSet& set);

struct ZigzagLength {
  bool unbounded_by_loop = false;
  std::size_t length = 0;
  /// The loop when unbounded, otherwise a longest zigzag (empty for an empty set).
  std::optional<ZigzagPath> witness;
};

/// Longest zigzag. Loop-free sets have a forest as line-incidence graph, where
/// zigzags are simple paths, so this is a per-tree diameter computation.
ZigzagLength max_zigzag_length(const ExponentSet& set);

/// Zigzag distance f(s_k) from s_1 along an S-sequence `ordering`: every later
/// point shares a line with an earlier one, and f(s_n) = f(s_{v(n)}) + 1 or
/// f(s_{h(n)}) + 1 using the lowest-index predecessor on the shared line.
///
/// Throws Error(NotAnSSequence) if a point has no earlier point on either of its
/// lines, or is not in `set`, and LoopError when a point has earlier points on
/// both lines.
std::vector<std::pair<ExponentPair, int>> zigzag_distance_map(
    const ExponentSet& set, std::span<const ExponentPair> ordering);

/// True iff no point of `set` outside `subset` shares a line with a point of
/// `subset`. Throws Error(NotSubset) if subset is not contained in set.
bool is_zigzag_complete(const ExponentSet& subset, const ExponentSet& set);

/// min over `anchors` evenly spaced windows [a, a + window) inside the hull of
/// `proj` of (points in window) / window. Empty input gives 0.
double lower_beurling_density(std::span<const Rational> proj, double window,
                              int anchors);

struct DensitySample {
  double window;
  double density;
};

std::vector<DensitySample> beurling_density_sweep(
    std::span<const Rational> proj, std::span<const double> windows, int anchors);

}  // namespace addspec
