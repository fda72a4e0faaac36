#include "addspec/additive_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_set>

#include "addspec/error.hpp"
#include "addspec/quadrature.hpp"

namespace addspec {
namespace {

constexpr int kBaseOrder = 20;

std::complex<double> horner(const std::vector<std::complex<double>>& c,
                            double x) {
  std::complex<double> v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

// sum over measure pieces and polynomial segments of
//   (weight / length) * integral of integrand(segment, x) over their overlap.
template <typename Integrand>
std::complex<double> integrate_against(const IntervalUnionMeasure& m,
                                       const PiecewisePolynomial& p,
                                       double frequency, int order,
                                       Integrand integrand) {
  std::complex<double> total = 0.0;
  for (const auto& piece : m.pieces()) {
    const double l = to_double(piece.left);
    const double r = to_double(piece.right);
    const double density = piece.weight / (r - l);
    for (const auto& seg : p.segments()) {
      const double lo = std::max(l, seg.lo);
      const double hi = std::min(r, seg.hi);
      if (!(hi > lo)) continue;
      total += density * integrate_panels(
                             [&](double x) { return integrand(seg, x); }, lo,
                             hi, frequency, order);
    }
  }
  return total;
}

// Integral of f(x) exp(-2 pi i lambda x) dm(x).
std::complex<double> component_inner_exp(const IntervalUnionMeasure& m,
                                          const PiecewisePolynomial& f,
                                          const Rational& lambda) {
  const double lam = to_double(lambda);
  const int order = kBaseOrder + f.degree() / 2;
  return integrate_against(
      m, f, lam, order, [lam](const PolynomialSegment& seg, double x) {
        return horner(seg.coeffs, x) *
               std::polar(1.0, -2.0 * std::numbers::pi * lam * x);
      });
}

double component_norm_sq(const IntervalUnionMeasure& m,
                         const PiecewisePolynomial& f) {
  const int order = kBaseOrder + f.degree();
  return integrate_against(m, f, 0.0, order,
                           [](const PolynomialSegment& seg, double x) {
                             return std::complex<double>(
                                 std::norm(horner(seg.coeffs, x)));
                           })
      .real();
}

}  // namespace

std::size_t ExponentPairHash::operator()(const ExponentPair& p) const noexcept {
  const RationalHash h;
  const std::size_t ha = h(p.a);
  return ha ^ (h(p.b) + 0x9e3779b97f4a7c15ULL + (ha << 6) + (ha >> 2));
}

AdditiveSpace::AdditiveSpace(IntervalUnionMeasure mu, IntervalUnionMeasure nu,
                             std::string name)
    : mu_(std::move(mu)), nu_(std::move(nu)), name_(std::move(name)) {}

AdditiveSpace AdditiveSpace::l_space() {
  return {IntervalUnionMeasure::unit_interval(0),
          IntervalUnionMeasure::unit_interval(0), "L"};
}

AdditiveSpace AdditiveSpace::plus_space() {
  return {IntervalUnionMeasure::unit_interval(Rational(-1, 2)),
          IntervalUnionMeasure::unit_interval(Rational(-1, 2)), "Plus"};
}

AdditiveSpace AdditiveSpace::t_space() {
  return {IntervalUnionMeasure::unit_interval(Rational(-1, 2)),
          IntervalUnionMeasure::unit_interval(-1), "T"};
}

AdditiveSpace AdditiveSpace::symmetric(const Rational& t) {
  return {IntervalUnionMeasure::unit_interval(t),
          IntervalUnionMeasure::unit_interval(t), "Symmetric:t=" + to_string(t)};
}

AdditiveSpace AdditiveSpace::symmetric(const IntervalUnionMeasure& m) {
  return {m, m, "symmetric-custom"};
}

AdditiveSpace AdditiveSpace::from_preset(std::string_view name) {
  if (name == "L") return l_space();
  if (name == "Plus") return plus_space();
  if (name == "T") return t_space();
  constexpr std::string_view prefix = "Symmetric:t=";
  if (name.substr(0, prefix.size()) == prefix) {
    return symmetric(parse_rational(name.substr(prefix.size())));
  }
  throw Error(ErrorCode::MalformedInput,
              "unknown space preset \"" + std::string(name) + "\"");
}

FiniteCombination::FiniteCombination(std::vector<CombinationTerm> terms)
    : terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "combination needs a term");
  }
  std::unordered_set<ExponentPair, ExponentPairHash> seen;
  for (const auto& t : terms_) {
    if (!seen.insert(t.pair).second) {
      throw Error(ErrorCode::DuplicatePoint,
                  "duplicate pair (" + to_string(t.pair.a) + ", " +
                      to_string(t.pair.b) + ") in combination");
    }
  }
}

std::complex<double> exp_inner(const AdditiveSpace& s, const ExponentPair& p,
                               const ExponentPair& q) {
  if (p == q) return 1.0;
  return 0.5 * fourier_transform(s.mu(), p.a - q.a) +
         0.5 * fourier_transform(s.nu(), p.b - q.b);
}

double combination_norm_sq(const AdditiveSpace& s, const FiniteCombination& c) {
  const auto& terms = c.terms();
  double total = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    total += std::norm(terms[i].coeff);
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      const auto g = exp_inner(s, terms[i].pair, terms[j].pair);
      total += 2.0 * (terms[i].coeff * std::conj(terms[j].coeff) * g).real();
    }
  }
  return total;
}

std::map<Rational, std::complex<double>> projection_coefficients(
    const FiniteCombination& c, Axis axis) {
  std::map<Rational, std::complex<double>> sums;
  for (const auto& t : c.terms()) sums[t.pair.coordinate(axis)] += t.coeff;
  return sums;
}

PiecewisePolynomial::PiecewisePolynomial(std::vector<PolynomialSegment> segments)
    : segments_(std::move(segments)) {
  std::sort(segments_.begin(), segments_.end(),
            [](const auto& x, const auto& y) { return x.lo < y.lo; });
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (!(segments_[i].lo < segments_[i].hi)) {
      throw Error(ErrorCode::InvalidArgument, "empty polynomial segment");
    }
    if (i > 0 && segments_[i - 1].hi > segments_[i].lo) {
      throw Error(ErrorCode::InvalidArgument, "polynomial segments overlap");
    }
  }
}

PiecewisePolynomial PiecewisePolynomial::polynomial(
    std::vector<std::complex<double>> coeffs) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return PiecewisePolynomial({{-inf, inf, std::move(coeffs)}});
}

PiecewisePolynomial PiecewisePolynomial::constant(std::complex<double> value) {
  return polynomial({value});
}

PiecewisePolynomial PiecewisePolynomial::monomial(int degree) {
  std::vector<std::complex<double>> c(static_cast<std::size_t>(degree) + 1, 0.0);
  c.back() = 1.0;
  return polynomial(std::move(c));
}

PiecewisePolynomial PiecewisePolynomial::random_piecewise_linear(
    double lo, double hi, int pieces, std::mt19937_64& rng) {
  if (pieces < 1 || !(hi > lo)) {
    throw Error(ErrorCode::InvalidArgument, "bad piecewise-linear layout");
  }
  // Bits to [-1, 1) directly, so the values do not depend on the standard
  // library's distribution implementation.
  auto draw = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  };
  std::vector<double> knots(static_cast<std::size_t>(pieces) + 1);
  for (auto& v : knots) v = draw();
  std::vector<PolynomialSegment> segs;
  const double h = (hi - lo) / pieces;
  for (int i = 0; i < pieces; ++i) {
    const double x0 = lo + i * h;
    const double x1 = i + 1 == pieces ? hi : lo + (i + 1) * h;
    const double slope = (knots[i + 1] - knots[i]) / (x1 - x0);
    segs.push_back({x0, x1, {knots[i] - slope * x0, slope}});
  }
  return PiecewisePolynomial(std::move(segs));
}

std::complex<double> PiecewisePolynomial::operator()(double x) const {
  for (const auto& seg : segments_) {
    if (seg.lo <= x && x <= seg.hi) return horner(seg.coeffs, x);
  }
  return 0.0;
}

int PiecewisePolynomial::degree() const noexcept {
  int d = 0;
  for (const auto& seg : segments_) {
    d = std::max(d, static_cast<int>(seg.coeffs.size()) - 1);
  }
  return d;
}

PiecewisePolynomial PiecewisePolynomial::scaled(std::complex<double> scale) const {
  auto segs = segments_;
  for (auto& seg : segs) {
    for (auto& c : seg.coeffs) c *= scale;
  }
  return PiecewisePolynomial(std::move(segs));
}

PiecewisePolynomial PiecewisePolynomial::dilated(double a) const {
  if (!(a > 0.0)) throw Error(ErrorCode::InvalidArgument, "dilation must be > 0");
  auto segs = segments_;
  for (auto& seg : segs) {
    seg.lo *= a;
    seg.hi *= a;
    double factor = 1.0 / a;
    for (auto& c : seg.coeffs) {
      c *= factor;
      factor /= a;
    }
  }
  return PiecewisePolynomial(std::move(segs));
}

PiecewisePolynomial PiecewisePolynomial::restricted(double lo, double hi) const {
  std::vector<PolynomialSegment> segs;
  for (const auto& seg : segments_) {
    const double l = std::max(lo, seg.lo);
    const double h = std::min(hi, seg.hi);
    if (h > l) segs.push_back({l, h, seg.coeffs});
  }
  return PiecewisePolynomial(std::move(segs));
}

std::complex<double> function_inner_exp(const AdditiveSpace& s,
                                        const TestFunction& F,
                                        const ExponentPair& p) {
  return 0.5 * component_inner_exp(s.mu(), F.f, p.a) +
         0.5 * component_inner_exp(s.nu(), F.g, p.b);
}

double function_norm_sq(const AdditiveSpace& s, const TestFunction& F) {
  return 0.5 * component_norm_sq(s.mu(), F.f) +
         0.5 * component_norm_sq(s.nu(), F.g);
}

}  // namespace addspec
