#include "addspec/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "addspec/error.hpp"

namespace addspec {
namespace {

// Newton iteration on P_n from the Chebyshev-like initial guess.
GaussRule compute_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "rule order must be >= 1");
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

std::complex<double> integrate_panels(
    const std::function<std::complex<double>(double)>& f, double lo, double hi,
    double frequency, int order) {
  if (!(hi > lo)) return 0.0;
  const GaussRule& rule = gauss_legendre(order);
  const double length = hi - lo;
  const int panels =
      1 + static_cast<int>(std::ceil(2.0 * std::abs(frequency) * length));
  const double h = length / panels;
  std::complex<double> total = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double a = lo + k * h;
    const double mid = a + 0.5 * h;
    std::complex<double> panel = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      panel += rule.weights[j] * f(mid + 0.5 * h * rule.nodes[j]);
    }
    total += 0.5 * h * panel;
  }
  return total;
}

std::complex<double> integrate_measure(
    const IntervalUnionMeasure& m,
    const std::function<std::complex<double>(double)>& f, double frequency,
    int order) {
  std::complex<double> total = 0.0;
  for (const auto& p : m.pieces()) {
    const double lo = to_double(p.left);
    const double hi = to_double(p.right);
    total += p.weight / (hi - lo) * integrate_panels(f, lo, hi, frequency, order);
  }
  return total;
}

}  // namespace addspec
