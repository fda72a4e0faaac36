#include "addspec/constructions.hpp"

#include <algorithm>
#include <deque>

#include "addspec/error.hpp"

namespace addspec {

std::vector<Rational> centered_lattice(const Rational& step, int N) {
  if (N < 0) throw Error(ErrorCode::InvalidArgument, "N must be >= 0");
  std::vector<Rational> out{Rational(0)};
  out.reserve(2 * static_cast<std::size_t>(N) + 1);
  for (int n = 1; n <= N; ++n) {
    out.push_back(step * n);
    out.push_back(-step * n);
  }
  return out;
}

NonOverlapSpectrum nonoverlap_riesz_spectrum(const IntervalUnionMeasure& m,
                                             std::span<const Rational> base) {
  const auto bounds = support_bounds(m);
  if (bounds.min_abs == 0) {
    throw Error(ErrorCode::OverlappingSupport,
                "the support touches 0, so the two components overlap at the origin");
  }
  NonOverlapSpectrum s;
  s.base.assign(base.begin(), base.end());
  s.tau = Rational(1) / (2 * bounds.outer);
  s.epsilon = std::min(Rational(1, 2), bounds.min_abs / (2 * bounds.outer));
  for (const auto& l : base) {
    s.pairs.insert({l, l});
    s.pairs.insert({l, l + s.tau});
  }
  return s;
}

bool separation_holds(const NonOverlapSpectrum& spectrum,
                      const IntervalUnionMeasure& m) {
  const auto ok = [&](const Rational& x) {
    const Rational v = abs(spectrum.tau * x);
    return spectrum.epsilon <= v && v <= 1 - spectrum.epsilon;
  };
  return std::all_of(m.pieces().begin(), m.pieces().end(),
                     [&](const auto& p) { return ok(p.left) && ok(p.right); });
}

std::pair<double, double> m_tau_eigenvalues(const Rational& tau, double x) {
  const double c = cos_pi(to_double(tau) * x);
  return {2.0 - 2.0 * c, 2.0 + 2.0 * c};
}

ExponentSet l_space_onb(int N) {
  ExponentSet out;
  for (const auto& l : centered_lattice(Rational(1, 2), N)) out.insert({l, -l});
  return out;
}

ExponentSet mirror_spectrum(int k, int N) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  return l_space_onb(N);
}

ExponentSet lev_style_set(int q, int depth) {
  if (q < 2 || depth < 1) {
    throw Error(ErrorCode::InvalidArgument, "need q >= 2 and depth >= 1");
  }
  ExponentSet out;
  out.insert({Rational(0), Rational(0)});
  struct Line {
    Axis axis;  // X: the vertical line x = value
    Rational value;
  };
  std::deque<Line> open{{Axis::X, Rational(0)}, {Axis::Y, Rational(0)}};
  std::int64_t next_x = 1;
  std::int64_t next_y = 1;
  const int layers = (depth + 1) / 2;
  for (int layer = 0; layer < layers; ++layer) {
    std::deque<Line> opened;
    for (const auto& line : open) {
      for (int i = 1; i < q; ++i) {
        if (line.axis == Axis::X) {
          const Rational y(next_y++);
          out.insert({line.value, y});
          opened.push_back({Axis::Y, y});
        } else {
          const Rational x(next_x++);
          out.insert({x, line.value});
          opened.push_back({Axis::X, x});
        }
      }
    }
    open = std::move(opened);
  }
  return out;
}

}  // namespace addspec
