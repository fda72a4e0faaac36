#pragma once

#include <span>
#include <utility>
#include <vector>

#include "addspec/exponents.hpp"
#include "addspec/measures.hpp"

namespace addspec {

// Constructors list their points in "centred" order (0, s, -s, 2s, -2s, ...),
// so every prefix of odd length is a symmetric truncation and nested sections
// line up with growing N.

/// 0, step, -step, 2 step, -2 step, ..., N step, -N step.
std::vector<Rational> centered_lattice(const Rational& step, int N);

/// Riesz spectrum {(l, l)} u {(l, l + tau)} over a base spectrum of m.
struct NonOverlapSpectrum {
  std::vector<Rational> base;
  Rational tau;
  Rational epsilon;
  ExponentSet pairs;
};

/// tau = 1/(2M), epsilon = min(1/2, m/(2M)) with supp(m) in [-M,-m] u [m,M].
/// Pairs are interleaved: (l0,l0), (l0,l0+tau), (l1,l1), ...
/// Throws Error(OverlappingSupport) when 0 lies in the support.
NonOverlapSpectrum nonoverlap_riesz_spectrum(const IntervalUnionMeasure& m,
                                             std::span<const Rational> base);

/// epsilon <= |tau x| <= 1 - epsilon at every interval endpoint x of supp(m),
/// decided in exact arithmetic.
bool separation_holds(const NonOverlapSpectrum& spectrum,
                      const IntervalUnionMeasure& m);

/// Eigenvalues (2 - 2 cos(pi tau x), 2 + 2 cos(pi tau x)) of M_tau^* M_tau for
/// M_tau = [[1, 1], [1, exp(-2 pi i tau x)]].
std::pair<double, double> m_tau_eigenvalues(const Rational& tau, double x);

/// {(n/2, -n/2) : |n| <= N}.
ExponentSet l_space_onb(int N);

/// {(l, -l) : l in (1/2)Z, |l| <= N/2}, the antidiagonal lift of a spectrum of
/// [-(k+1),-k] u [k,k+1]. Orthonormal for the space with [k, k+1] on both axes.
ExponentSet mirror_spectrum(int k, int N);

/// Tree-shaped point set in which every line opened before the last layer
/// carries at least q points. Coordinates are fresh non-negative integers, so
/// the set is loop-free and its longest zigzag has length >= depth.
ExponentSet lev_style_set(int q, int depth);

}  // namespace addspec
