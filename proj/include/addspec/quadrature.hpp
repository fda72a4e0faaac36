#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "addspec/measures.hpp"

namespace addspec {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point rule, computed once per n and cached. Exact for polynomials of
/// degree <= 2n - 1.
const GaussRule& gauss_legendre(int n);

/// Integral of `f` over [lo, hi] with a composite Gauss-Legendre rule.
///
/// The interval is split into panels so that exp(2 pi i frequency x) turns by
/// at most pi per panel; each panel uses `order` nodes.
std::complex<double> integrate_panels(
    const std::function<std::complex<double>(double)>& f, double lo, double hi,
    double frequency, int order);

/// Integral of `f` against an interval-union measure.
std::complex<double> integrate_measure(
    const IntervalUnionMeasure& m,
    const std::function<std::complex<double>(double)>& f, double frequency,
    int order);

}  // namespace addspec
