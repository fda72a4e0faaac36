#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "addspec/rational.hpp"

namespace addspec {

/// One piece of an interval-union measure: mass `weight` spread uniformly over
/// [left, right].
struct IntervalPiece {
  Rational left;
  Rational right;
  double weight = 0.0;

  friend bool operator==(const IntervalPiece&, const IntervalPiece&) = default;
};

/// A probability measure on the line given as a finite union of weighted,
/// uniformly loaded intervals.
///
/// Pieces are sorted by left endpoint on construction. Adjacent pieces may touch
/// at an endpoint (a null set) but may not overlap. Weights must be positive and
/// sum to 1 within 1e-12.
class IntervalUnionMeasure {
 public:
  explicit IntervalUnionMeasure(std::vector<IntervalPiece> pieces);

  /// Lebesgue measure on [left, left + 1].
  static IntervalUnionMeasure unit_interval(const Rational& left);

  /// Normalised Lebesgue measure on a union of intervals (weight proportional to
  /// length).
  static IntervalUnionMeasure uniform(
      const std::vector<std::pair<Rational, Rational>>& intervals);

  const std::vector<IntervalPiece>& pieces() const noexcept { return pieces_; }

  /// Offset t when the measure is Lebesgue measure on a single [t, t + 1].
  std::optional<Rational> unit_interval_offset() const;

  friend bool operator==(const IntervalUnionMeasure&,
                         const IntervalUnionMeasure&) = default;

 private:
  std::vector<IntervalPiece> pieces_;
};

/// Integral of exp(2 pi i lambda x) against the measure, in closed form.
///
/// Each piece contributes weight * exp(2 pi i lambda c) * sinc(lambda L) with
/// midpoint c and length L. sin(z)/z is replaced by its series below
/// |z| < 1e-6, and lambda = 0 returns exactly 1. Non-finite lambda throws.
std::complex<double> fourier_transform(const IntervalUnionMeasure& m,
                                       double lambda);

/// Same transform with the phase and the sinc argument reduced exactly.
std::complex<double> fourier_transform(const IntervalUnionMeasure& m,
                                       const Rational& lambda);

struct SupportBounds {
  Rational inner;    // distance from 0 to the support
  Rational outer;    // max |endpoint|
  Rational min_abs;  // same as inner; 0 when the support contains the origin
};

SupportBounds support_bounds(const IntervalUnionMeasure& m);

}  // namespace addspec
