#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "addspec/measures.hpp"
#include "addspec/rational.hpp"

namespace addspec {

enum class Axis { X, Y };

/// Exponent (a, b) of the planar exponential e_{a,b}(x, y) = exp(2 pi i (ax + by)).
struct ExponentPair {
  Rational a;
  Rational b;

  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
  friend bool operator<(const ExponentPair& p, const ExponentPair& q) {
    return p.a < q.a || (p.a == q.a && p.b < q.b);
  }

  const Rational& coordinate(Axis axis) const { return axis == Axis::X ? a : b; }
};

struct ExponentPairHash {
  std::size_t operator()(const ExponentPair& p) const noexcept;
};

/// L^2 of rho = (mu x delta_0 + delta_0 x nu) / 2: mu lives on the x-axis and
/// nu on the y-axis.
class AdditiveSpace {
 public:
  AdditiveSpace(IntervalUnionMeasure mu, IntervalUnionMeasure nu,
                std::string name = "custom");

  /// [0,1] on both axes.
  static AdditiveSpace l_space();
  /// [-1/2,1/2] on both axes.
  static AdditiveSpace plus_space();
  /// [-1/2,1/2] on x, [-1,0] on y.
  static AdditiveSpace t_space();
  /// [t,t+1] on both axes.
  static AdditiveSpace symmetric(const Rational& t);
  /// The same measure on both axes.
  static AdditiveSpace symmetric(const IntervalUnionMeasure& m);

  /// "L", "Plus", "T" or "Symmetric:t=p/q".
  static AdditiveSpace from_preset(std::string_view name);

  const IntervalUnionMeasure& mu() const noexcept { return mu_; }
  const IntervalUnionMeasure& nu() const noexcept { return nu_; }
  const IntervalUnionMeasure& component(Axis axis) const noexcept {
    return axis == Axis::X ? mu_ : nu_;
  }
  const std::string& name() const noexcept { return name_; }

 private:
  IntervalUnionMeasure mu_;
  IntervalUnionMeasure nu_;
  std::string name_;
};

struct CombinationTerm {
  ExponentPair pair;
  std::complex<double> coeff;
};

/// Finite linear combination sum c_p e_p over distinct exponent pairs.
class FiniteCombination {
 public:
  explicit FiniteCombination(std::vector<CombinationTerm> terms);

  const std::vector<CombinationTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

 private:
  std::vector<CombinationTerm> terms_;
};

/// <e_p, e_q> in L^2(rho) = (mu^(a - u) + nu^(b - v)) / 2.
std::complex<double> exp_inner(const AdditiveSpace& s, const ExponentPair& p,
                               const ExponentPair& q);

/// || sum c_p e_p ||^2 as the full quadratic form sum c_p conj(c_q) <e_p, e_q>.
double combination_norm_sq(const AdditiveSpace& s, const FiniteCombination& c);

/// Column (axis X) or row (axis Y) sums of the coefficient grid. Zero sums are
/// kept.
std::map<Rational, std::complex<double>> projection_coefficients(
    const FiniteCombination& c, Axis axis);

struct PolynomialSegment {
  double lo;
  double hi;
  std::vector<std::complex<double>> coeffs;  // coeffs[k] multiplies x^k
};

/// Piecewise polynomial on the line, zero off its segments. Segments may be
/// unbounded (lo = -inf or hi = +inf) and must not overlap.
class PiecewisePolynomial {
 public:
  PiecewisePolynomial() = default;
  explicit PiecewisePolynomial(std::vector<PolynomialSegment> segments);

  /// A single polynomial on the whole line.
  static PiecewisePolynomial polynomial(std::vector<std::complex<double>> coeffs);
  static PiecewisePolynomial constant(std::complex<double> value);
  static PiecewisePolynomial monomial(int degree);

  /// Continuous piecewise-linear function on [lo, hi] with `pieces` equal pieces
  /// and knot values uniform in [-1, 1].
  static PiecewisePolynomial random_piecewise_linear(double lo, double hi,
                                                     int pieces,
                                                     std::mt19937_64& rng);

  std::complex<double> operator()(double x) const;
  int degree() const noexcept;
  const std::vector<PolynomialSegment>& segments() const noexcept {
    return segments_;
  }

  /// x -> scale * p(x).
  PiecewisePolynomial scaled(std::complex<double> scale) const;
  /// x -> a^{-1} p(x / a), a > 0.
  PiecewisePolynomial dilated(double a) const;
  /// p times the indicator of [lo, hi].
  PiecewisePolynomial restricted(double lo, double hi) const;

 private:
  std::vector<PolynomialSegment> segments_;
};

/// F in L^2(rho) given by its two projections: f = F(., 0) on supp mu and
/// g = F(0, .) on supp nu.
struct TestFunction {
  PiecewisePolynomial f;
  PiecewisePolynomial g;
};

/// <F, e_p> in L^2(rho), by Gauss-Legendre quadrature.
std::complex<double> function_inner_exp(const AdditiveSpace& s,
                                        const TestFunction& F,
                                        const ExponentPair& p);

/// ||F||^2 in L^2(rho).
double function_norm_sq(const AdditiveSpace& s, const TestFunction& F);

}  // namespace addspec
