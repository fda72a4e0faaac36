#include "doctest.h"

#include <random>

#include "addspec/constructions.hpp"
#include "addspec/error.hpp"
#include "addspec/exponents.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace addspec;
using fixture::pt;

namespace {

ExponentSet random_set(std::mt19937_64& rng, std::size_t max_size, int range) {
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::uniform_int_distribution<int> coord(0, range);
  ExponentSet s;
  const std::size_t n = size(rng);
  while (s.size() < n) {
    const ExponentPair p{Rational(coord(rng), 2), Rational(coord(rng), 3)};
    if (!s.contains(p)) s.insert(p);
  }
  return s;
}

ExponentSet transformed(const ExponentSet& s, bool swap, const Rational& dx,
                        const Rational& dy) {
  ExponentSet out;
  for (const auto& p : s.points()) {
    out.insert(swap ? ExponentPair{p.b + dx, p.a + dy} : ExponentPair{p.a + dx, p.b + dy});
  }
  return out;
}

}  // namespace

TEST_CASE("exponent sets reject duplicates") {
  ExponentSet s({pt(0, 0), pt(1, 2)});
  CHECK(s.size() == 2);
  CHECK(s.contains(pt(1, 2)));
  CHECK_THROWS_AS(s.insert(pt(0, 0)), Error);
  CHECK_THROWS_AS(ExponentSet({pt(1, 1), pt(1, 1)}), Error);
  CHECK(ExponentSet({ExponentPair{Rational(2, 4), Rational(0)}})
            .contains({Rational(1, 2), Rational(0)}));
}

TEST_CASE("zigzag path validation") {
  const ZigzagPath z(fixture::staircase());
  CHECK(z.length() == 7);
  CHECK(z.starts_with_zag());
  CHECK_FALSE(z.is_loop());
  auto closed = fixture::rectangle();
  closed.push_back(closed.front());
  const ZigzagPath loop(closed);
  CHECK(loop.is_loop());
  CHECK(loop.length() == 4);
  CHECK(ZigzagPath({pt(0, 0)}).length() == 0);
  CHECK_THROWS_AS(ZigzagPath({}), Error);
  CHECK_THROWS_AS(ZigzagPath({pt(0, 0), pt(1, 1)}), Error);
  CHECK_THROWS_AS(ZigzagPath({pt(0, 0), pt(0, 0)}), Error);
  CHECK_THROWS_AS(ZigzagPath({pt(0, 0), pt(0, 1), pt(0, 2)}), Error);
}

TEST_CASE("projections") {
  const auto onb = l_space_onb(3);
  const auto px = project(onb, Axis::X);
  std::vector<Rational> expected;
  for (int n = -3; n <= 3; ++n) expected.emplace_back(n, 2);
  CHECK(px == expected);
  CHECK(project(ExponentSet({pt(4, 9)}), Axis::Y) == std::vector<Rational>{Rational(9)});
  const auto py = project(lev_style_set(2, 7), Axis::Y);
  for (std::size_t i = 0; i < py.size(); ++i) CHECK(py[i] == Rational(static_cast<int>(i)));
}

TEST_CASE("multiplicity") {
  CHECK(multiplicity(l_space_onb(5)).max_mult == 1);
  CHECK(multiplicity(ExponentSet(fixture::rectangle())).max_mult == 2);
  CHECK(multiplicity(ExponentSet({pt(0, 0)})).max_mult == 1);
  const auto m = multiplicity(ExponentSet({pt(0, 0), pt(0, 1), pt(0, 2), pt(5, 2)}));
  CHECK(m.max_mult == 3);
  CHECK(m.vertical.at(Rational(0)) == 3);
  CHECK(m.horizontal.at(Rational(2)) == 2);
}

TEST_CASE("loop detection examples") {
  const auto loop = find_zigzag_loop(ExponentSet(fixture::rectangle()));
  REQUIRE(loop.has_value());
  CHECK(loop->is_loop());
  CHECK(loop->length() == 4);
  CHECK_FALSE(find_zigzag_loop(ExponentSet(fixture::staircase())).has_value());
  CHECK_FALSE(find_zigzag_loop(ExponentSet({pt(0, 0), pt(0, 1)})).has_value());
  CHECK_FALSE(find_zigzag_loop(ExponentSet()).has_value());
}

TEST_CASE("longest zigzag examples") {
  const auto stair = max_zigzag_length(ExponentSet(fixture::staircase()));
  CHECK_FALSE(stair.unbounded_by_loop);
  CHECK(stair.length == 7);
  REQUIRE(stair.witness.has_value());
  CHECK(stair.witness->length() == 7);
  for (int N : {0, 1, 4, 16}) CHECK(max_zigzag_length(l_space_onb(N)).length == 0);
  const auto rect = max_zigzag_length(ExponentSet(fixture::rectangle()));
  CHECK(rect.unbounded_by_loop);
  CHECK(rect.witness->is_loop());
  CHECK(max_zigzag_length(ExponentSet()).length == 0);
}

TEST_CASE("zigzag distance along an S-sequence") {
  const auto stair = fixture::staircase();
  const ExponentSet set(stair);
  const auto f = zigzag_distance_map(set, stair);
  REQUIRE(f.size() == 8);
  for (int k = 0; k < 8; ++k) {
    CHECK(f[k].first == stair[k]);
    CHECK(f[k].second == k);
  }
  const std::vector<ExponentPair> single{pt(2, 2)};
  const auto g = zigzag_distance_map(set, single);
  CHECK(g.size() == 1);
  CHECK(g[0].second == 0);

  // out-of-path ordering: start in the middle
  const std::vector<ExponentPair> mid{stair[3], stair[4], stair[2], stair[5], stair[1]};
  const auto h = zigzag_distance_map(set, mid);
  CHECK(h[0].second == 0);
  CHECK(h[1].second == 1);
  CHECK(h[2].second == 1);
  CHECK(h[3].second == 2);
  CHECK(h[4].second == 2);
}

TEST_CASE("zigzag distance errors") {
  const auto rect = fixture::rectangle();
  const ExponentSet set(rect);
  // greedy: (1,1), (1,3), (3,1), then (3,3) sees both lines occupied
  const std::vector<ExponentPair> greedy{rect[0], rect[1], rect[3], rect[2]};
  try {
    zigzag_distance_map(set, greedy);
    FAIL("expected a loop error");
  } catch (const LoopError& e) {
    CHECK(e.code() == ErrorCode::LoopDetected);
    CHECK(e.loop().is_loop());
  }
  // brute-force confirmation: two zigzags join the far corners
  CHECK(oracle::count_alternating_paths(rect, 0, 2) == 2);

  const auto stair = fixture::staircase();
  const ExponentSet sset(stair);
  const std::vector<ExponentPair> gap{stair[0], stair[5]};
  try {
    zigzag_distance_map(sset, gap);
    FAIL("expected not-an-S-sequence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnSSequence);
  }
  const std::vector<ExponentPair> foreign{stair[0], pt(1, 9)};
  CHECK_THROWS_AS(zigzag_distance_map(sset, foreign), Error);
  const std::vector<ExponentPair> repeat{stair[0], stair[1], stair[0]};
  CHECK_THROWS_AS(zigzag_distance_map(sset, repeat), Error);
}

TEST_CASE("zigzag completeness") {
  const ExponentSet rect(fixture::rectangle());
  CHECK(is_zigzag_complete(rect, rect));
  const auto stair = fixture::staircase();
  const ExponentSet first4({stair[0], stair[1], stair[2], stair[3]});
  CHECK_FALSE(is_zigzag_complete(first4, ExponentSet(stair)));
  CHECK(is_zigzag_complete(ExponentSet({pt(0, 0)}), ExponentSet({pt(0, 0), pt(5, 7)})));
  CHECK_THROWS_AS(is_zigzag_complete(ExponentSet({pt(9, 9)}), rect), Error);
}

TEST_CASE("lower Beurling density estimates") {
  std::vector<Rational> z;
  for (int n = -50; n <= 50; ++n) z.emplace_back(n);
  CHECK(std::abs(lower_beurling_density(z, 20.0, 64) - 1.0) <= 1.0 / 20.0);

  std::vector<Rational> three_halves;
  for (int n = -60; n <= 60; ++n) three_halves.emplace_back(3 * n, 2);
  CHECK(std::abs(lower_beurling_density(three_halves, 30.0, 64) - 2.0 / 3.0) <= 1.0 / 30.0);

  std::vector<Rational> halves;
  for (int n = -100; n <= 100; ++n) halves.emplace_back(n, 2);
  const double d = lower_beurling_density(halves, 20.0, 64);
  // direct count for the same windows: [a, a + 20) holds 40 or 41 half-integers
  CHECK(d >= 40.0 / 20.0 - 1e-12);
  CHECK(d <= 41.0 / 20.0 + 1e-12);
  CHECK(std::abs(d - 2.0) <= 1.0 / 20.0);

  CHECK(lower_beurling_density({}, 5.0, 4) == 0.0);
  CHECK_THROWS_AS(lower_beurling_density(z, 0.0, 4), Error);
  CHECK_THROWS_AS(lower_beurling_density(z, 1.0, 0), Error);

  const std::vector<double> windows{5.0, 10.0, 20.0};
  const auto sweep = beurling_density_sweep(z, windows, 16);
  REQUIRE(sweep.size() == 3);
  for (const auto& s : sweep) CHECK(std::abs(s.density - 1.0) <= 1.0 / s.window);
}

TEST_CASE("loop detector agrees with brute-force walk enumeration") {
  std::mt19937_64 rng(2024);
  int with_loops = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_set(rng, 12, 4);
    const auto found = find_zigzag_loop(s);
    const bool brute = oracle::has_closed_alternating_walk(s.points(), s.size());
    CHECK(found.has_value() == brute);
    if (found) {
      ++with_loops;
      CHECK(found->is_loop());
      for (const auto& p : found->vertices()) CHECK(s.contains(p));
    }
  }
  CHECK(with_loops > 30);
}

TEST_CASE("longest zigzag agrees with exhaustive search on loop-free sets") {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto s = random_set(rng, 10, 6);
    const auto z = max_zigzag_length(s);
    if (z.unbounded_by_loop) continue;
    ++checked;
    CHECK(z.length == oracle::longest_alternating_path(s.points()));
    if (z.witness) {
      CHECK(z.witness->length() == z.length);
      for (const auto& p : z.witness->vertices()) CHECK(s.contains(p));
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("longest zigzag is invariant under axis swap and translation") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = random_set(rng, 14, 5);
    const auto base = max_zigzag_length(s);
    for (bool swap : {false, true}) {
      const auto t = transformed(s, swap, Rational(7, 5), Rational(-3));
      const auto z = max_zigzag_length(t);
      CHECK(z.unbounded_by_loop == base.unbounded_by_loop);
      if (!base.unbounded_by_loop) CHECK(z.length == base.length);
    }
  }
}

TEST_CASE("multiplicity one iff longest zigzag is zero") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_set(rng, 20, 9);
    const auto z = max_zigzag_length(s);
    CHECK((multiplicity(s).max_mult == 1) == (!z.unbounded_by_loop && z.length == 0));
  }
}

TEST_CASE("zigzags between connected points of a loop-free set are unique") {
  std::mt19937_64 rng(8);
  int pairs = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto s = random_set(rng, 9, 5);
    if (find_zigzag_loop(s)) continue;
    const auto& pts = s.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const auto n = oracle::count_alternating_paths(pts, i, j);
        CHECK(n <= 1);
        pairs += n == 1 ? 1 : 0;
      }
    }
  }
  CHECK(pairs > 50);
}
