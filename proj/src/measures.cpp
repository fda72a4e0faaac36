#include "addspec/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "addspec/error.hpp"

namespace addspec {
namespace {

constexpr double kWeightTolerance = 1e-12;
constexpr double kSeriesCutoff = 1e-6;

// sin(z)/z with the removable singularity filled in by its series.
double sinc_from(double z, double sin_z) {
  if (std::abs(z) < kSeriesCutoff) return 1.0 - z * z / 6.0;
  return sin_z / z;
}

}  // namespace

IntervalUnionMeasure::IntervalUnionMeasure(std::vector<IntervalPiece> pieces)
    : pieces_(std::move(pieces)) {
  if (pieces_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "measure needs at least one piece");
  }
  std::sort(pieces_.begin(), pieces_.end(),
            [](const IntervalPiece& x, const IntervalPiece& y) {
              return x.left < y.left;
            });
  double total = 0.0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& p = pieces_[i];
    if (!(p.left < p.right)) {
      throw Error(ErrorCode::InvalidArgument,
                  "empty interval [" + to_string(p.left) + ", " +
                      to_string(p.right) + "]");
    }
    if (!(p.weight > 0.0) || !std::isfinite(p.weight)) {
      throw Error(ErrorCode::InvalidArgument, "weights must be positive");
    }
    if (i > 0 && pieces_[i - 1].right > p.left) {
      throw Error(ErrorCode::InvalidArgument, "intervals overlap");
    }
    total += p.weight;
  }
  if (std::abs(total - 1.0) > kWeightTolerance) {
    throw Error(ErrorCode::InvalidArgument,
                "weights sum to " + std::to_string(total) + ", expected 1");
  }
}

IntervalUnionMeasure IntervalUnionMeasure::unit_interval(const Rational& left) {
  return IntervalUnionMeasure({{left, left + 1, 1.0}});
}

IntervalUnionMeasure IntervalUnionMeasure::uniform(
    const std::vector<std::pair<Rational, Rational>>& intervals) {
  Rational total(0);
  for (const auto& [l, r] : intervals) total += r - l;
  if (total <= 0) {
    throw Error(ErrorCode::InvalidArgument, "total length must be positive");
  }
  std::vector<IntervalPiece> pieces;
  pieces.reserve(intervals.size());
  for (const auto& [l, r] : intervals) {
    pieces.push_back({l, r, to_double((r - l) / total)});
  }
  return IntervalUnionMeasure(std::move(pieces));
}

std::optional<Rational> IntervalUnionMeasure::unit_interval_offset() const {
  if (pieces_.size() == 1 && pieces_[0].right - pieces_[0].left == 1) {
    return pieces_[0].left;
  }
  return std::nullopt;
}

std::complex<double> fourier_transform(const IntervalUnionMeasure& m,
                                       double lambda) {
  if (!std::isfinite(lambda)) {
    throw Error(ErrorCode::InvalidArgument, "non-finite frequency");
  }
  if (lambda == 0.0) return 1.0;
  std::complex<double> sum = 0.0;
  for (const auto& p : m.pieces()) {
    const double length = to_double(p.right - p.left);
    const double mid2 = to_double(p.left + p.right);  // twice the midpoint
    const double arg = lambda * length;
    const double s = sinc_from(std::numbers::pi * arg, sin_pi(arg));
    const double phase = lambda * mid2;
    sum += p.weight * s * std::complex<double>(cos_pi(phase), sin_pi(phase));
  }
  return sum;
}

std::complex<double> fourier_transform(const IntervalUnionMeasure& m,
                                       const Rational& lambda) {
  if (lambda == 0) return 1.0;
  std::complex<double> sum = 0.0;
  for (const auto& p : m.pieces()) {
    const Rational arg = lambda * (p.right - p.left);
    const Rational phase = lambda * (p.left + p.right);
    const double s =
        sinc_from(std::numbers::pi * to_double(arg), sin_pi(arg));
    sum += p.weight * s * std::complex<double>(cos_pi(phase), sin_pi(phase));
  }
  return sum;
}

SupportBounds support_bounds(const IntervalUnionMeasure& m) {
  Rational outer(0);
  std::optional<Rational> inner;
  for (const auto& p : m.pieces()) {
    outer = std::max({outer, abs(p.left), abs(p.right)});
    Rational d;
    if (p.left <= 0 && 0 <= p.right) {
      d = 0;
    } else {
      d = std::min(abs(p.left), abs(p.right));
    }
    if (!inner || d < *inner) inner = d;
  }
  return {*inner, outer, *inner};
}

}  // namespace addspec
