#include "addspec/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <unordered_map>

namespace addspec {
namespace {

std::string describe(const ExponentPair& p) {
  return "(" + to_string(p.a) + ", " + to_string(p.b) + ")";
}

// Bipartite line-incidence graph. Nodes [0, nx) are vertical lines x = const,
// nodes [nx, nx + ny) horizontal lines y = const; point i joins its two lines.
struct LineGraph {
  struct Arc {
    int to;
    int edge;
  };

  explicit LineGraph(const std::vector<ExponentPair>& points) {
    std::map<Rational, int> xs;
    std::map<Rational, int> ys;
    for (const auto& p : points) {
      xs.emplace(p.a, 0);
      ys.emplace(p.b, 0);
    }
    int id = 0;
    for (auto& [x, node] : xs) node = id++;
    for (auto& [y, node] : ys) node = id++;
    adjacency.resize(static_cast<std::size_t>(id));
    endpoints.reserve(points.size());
    for (std::size_t e = 0; e < points.size(); ++e) {
      const int u = xs.at(points[e].a);
      const int v = ys.at(points[e].b);
      endpoints.emplace_back(u, v);
      adjacency[u].push_back({v, static_cast<int>(e)});
      adjacency[v].push_back({u, static_cast<int>(e)});
    }
  }

  std::size_t node_count() const { return adjacency.size(); }

  std::vector<std::vector<Arc>> adjacency;
  std::vector<std::pair<int, int>> endpoints;
};

// Edge sequence of some cycle, or empty. Iterative DFS; the first non-tree edge
// met from a node still on the stack closes a cycle with the tree path.
std::vector<int> find_cycle_edges(const LineGraph& g) {
  const std::size_t n = g.node_count();
  enum class Colour { White, Grey, Black };
  std::vector<Colour> colour(n, Colour::White);
  std::vector<int> parent_node(n, -1);
  std::vector<int> parent_edge(n, -1);
  std::vector<std::size_t> next_arc(n, 0);

  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != Colour::White) continue;
    std::vector<int> stack{static_cast<int>(root)};
    colour[root] = Colour::Grey;
    while (!stack.empty()) {
      const int u = stack.back();
      if (next_arc[u] == g.adjacency[u].size()) {
        colour[u] = Colour::Black;
        stack.pop_back();
        continue;
      }
      const auto arc = g.adjacency[u][next_arc[u]++];
      if (arc.edge == parent_edge[u]) continue;
      if (colour[arc.to] == Colour::White) {
        colour[arc.to] = Colour::Grey;
        parent_node[arc.to] = u;
        parent_edge[arc.to] = arc.edge;
        stack.push_back(arc.to);
      } else if (colour[arc.to] == Colour::Grey) {
        std::vector<int> cycle{arc.edge};
        for (int w = u; w != arc.to; w = parent_node[w]) {
          cycle.push_back(parent_edge[w]);
        }
        return cycle;
      }
    }
  }
  return {};
}

// Breadth-first distances (in edges) from `source`, with the arriving edge.
struct Bfs {
  std::vector<int> dist;
  std::vector<int> via_edge;
  std::vector<int> via_node;
};

Bfs bfs(const LineGraph& g, int source) {
  const std::size_t n = g.node_count();
  Bfs r{std::vector<int>(n, -1), std::vector<int>(n, -1), std::vector<int>(n, -1)};
  std::deque<int> queue{source};
  r.dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (const auto& arc : g.adjacency[u]) {
      if (r.dist[arc.to] >= 0) continue;
      r.dist[arc.to] = r.dist[u] + 1;
      r.via_edge[arc.to] = arc.edge;
      r.via_node[arc.to] = u;
      queue.push_back(arc.to);
    }
  }
  return r;
}

int farthest(const Bfs& r) {
  int best = -1;
  for (std::size_t v = 0; v < r.dist.size(); ++v) {
    if (r.dist[v] >= 0 && (best < 0 || r.dist[v] > r.dist[best])) {
      best = static_cast<int>(v);
    }
  }
  return best;
}

std::vector<ExponentPair> points_of(const std::vector<ExponentPair>& points,
                                    const std::vector<int>& edges) {
  std::vector<ExponentPair> out;
  out.reserve(edges.size());
  for (int e : edges) out.push_back(points[e]);
  return out;
}

}  // namespace

ExponentSet::ExponentSet(std::vector<ExponentPair> points) {
  points_.reserve(points.size());
  for (const auto& p : points) insert(p);
}

void ExponentSet::insert(const ExponentPair& p) {
  if (!index_.insert(p).second) {
    throw Error(ErrorCode::DuplicatePoint, "duplicate point " + describe(p));
  }
  points_.push_back(p);
}

ZigzagPath::ZigzagPath(std::vector<ExponentPair> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "a zigzag contains at least one point");
  }
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    const auto& p = vertices_[i - 1];
    const auto& q = vertices_[i];
    const bool shares_x = p.a == q.a;
    const bool shares_y = p.b == q.b;
    if (shares_x == shares_y) {
      throw Error(ErrorCode::InvalidArgument,
                  "consecutive zigzag points " + describe(p) + ", " + describe(q) +
                      " must share exactly one coordinate");
    }
    if (i == 1) {
      starts_with_zag_ = shares_x;
    } else if (shares_x != (starts_with_zag_ == (i % 2 == 1))) {
      throw Error(ErrorCode::InvalidArgument,
                  "zigzag moves must alternate at " + describe(p));
    }
  }
}

bool ZigzagPath::is_loop() const noexcept {
  return length() > 0 && length() % 2 == 0 && vertices_.front() == vertices_.back();
}

std::vector<Rational> project(const ExponentSet& set, Axis axis) {
  std::vector<Rational> out;
  out.reserve(set.size());
  for (const auto& p : set.points()) out.push_back(p.coordinate(axis));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Multiplicity multiplicity(const ExponentSet& set) {
  Multiplicity m;
  for (const auto& p : set.points()) {
    m.max_mult = std::max({m.max_mult, ++m.vertical[p.a], ++m.horizontal[p.b]});
  }
  return m;
}

std::optional<ZigzagPath> find_zigzag_loop(const ExponentSet& set) {
  const LineGraph g(set.points());
  const auto cycle = find_cycle_edges(g);
  if (cycle.empty()) return std::nullopt;
  auto vertices = points_of(set.points(), cycle);
  vertices.push_back(vertices.front());
  return ZigzagPath(std::move(vertices));
}

ZigzagLength max_zigzag_length(const ExponentSet& set) {
  ZigzagLength result;
  if (set.empty()) return result;
  if (auto loop = find_zigzag_loop(set)) {
    result.unbounded_by_loop = true;
    result.length = loop->length();
    result.witness = std::move(loop);
    return result;
  }
  const LineGraph g(set.points());
  std::vector<bool> seen(g.node_count(), false);
  int best_edges = -1;
  std::vector<int> best_path;
  for (std::size_t start = 0; start < g.node_count(); ++start) {
    if (seen[start]) continue;
    const Bfs first = bfs(g, static_cast<int>(start));
    for (std::size_t v = 0; v < seen.size(); ++v) {
      if (first.dist[v] >= 0) seen[v] = true;
    }
    const int a = farthest(first);
    const Bfs second = bfs(g, a);
    const int b = farthest(second);
    if (second.dist[b] > best_edges) {
      best_edges = second.dist[b];
      best_path.clear();
      for (int w = b; w != a; w = second.via_node[w]) {
        best_path.push_back(second.via_edge[w]);
      }
    }
  }
  result.length = static_cast<std::size_t>(best_edges - 1);
  result.witness = ZigzagPath(points_of(set.points(), best_path));
  return result;
}

std::vector<std::pair<ExponentPair, int>> zigzag_distance_map(
    const ExponentSet& set, std::span<const ExponentPair> ordering) {
  std::vector<std::pair<ExponentPair, int>> f;
  f.reserve(ordering.size());
  // Lowest index seen so far on each vertical / horizontal line.
  std::unordered_map<Rational, std::size_t, RationalHash> first_on_x;
  std::unordered_map<Rational, std::size_t, RationalHash> first_on_y;
  ExponentSet prefix;
  for (std::size_t n = 0; n < ordering.size(); ++n) {
    const auto& s = ordering[n];
    if (!set.contains(s)) {
      throw Error(ErrorCode::NotAnSSequence, describe(s) + " is not in the set");
    }
    if (prefix.contains(s)) {
      throw Error(ErrorCode::NotAnSSequence, describe(s) + " appears twice");
    }
    prefix.insert(s);
    const auto vx = first_on_x.find(s.a);
    const auto hy = first_on_y.find(s.b);
    const bool has_v = vx != first_on_x.end();
    const bool has_h = hy != first_on_y.end();
    int value = 0;
    if (n > 0) {
      if (has_v && has_h) {
        auto loop = find_zigzag_loop(prefix);
        throw LoopError("two zigzags from s_1 reach " + describe(s),
                        std::move(*loop));
      }
      if (!has_v && !has_h) {
        throw Error(ErrorCode::NotAnSSequence,
                    describe(s) + " shares no line with an earlier point");
      }
      value = f[has_v ? vx->second : hy->second].second + 1;
    }
    f.emplace_back(s, value);
    first_on_x.emplace(s.a, n);
    first_on_y.emplace(s.b, n);
  }
  return f;
}

bool is_zigzag_complete(const ExponentSet& subset, const ExponentSet& set) {
  std::unordered_set<Rational, RationalHash> xs;
  std::unordered_set<Rational, RationalHash> ys;
  for (const auto& p : subset.points()) {
    if (!set.contains(p)) {
      throw Error(ErrorCode::NotSubset, describe(p) + " is not in the set");
    }
    xs.insert(p.a);
    ys.insert(p.b);
  }
  return std::none_of(set.points().begin(), set.points().end(), [&](const auto& p) {
    return !subset.contains(p) && (xs.count(p.a) != 0 || ys.count(p.b) != 0);
  });
}

double lower_beurling_density(std::span<const Rational> proj, double window,
                              int anchors) {
  if (!(window > 0.0) || anchors < 1) {
    throw Error(ErrorCode::InvalidArgument, "window must be > 0 and anchors >= 1");
  }
  if (proj.empty()) return 0.0;
  std::vector<double> xs;
  xs.reserve(proj.size());
  for (const auto& r : proj) xs.push_back(to_double(r));
  std::sort(xs.begin(), xs.end());
  const double lo = xs.front();
  const double span = xs.back() - lo;
  const double room = std::max(0.0, span - window);
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < anchors; ++k) {
    const double a = anchors == 1 ? lo : lo + room * k / (anchors - 1);
    const auto first = std::lower_bound(xs.begin(), xs.end(), a);
    const auto last = std::lower_bound(xs.begin(), xs.end(), a + window);
    best = std::min(best, static_cast<double>(last - first) / window);
  }
  return best;
}

std::vector<DensitySample> beurling_density_sweep(
    std::span<const Rational> proj, std::span<const double> windows, int anchors) {
  std::vector<DensitySample> out;
  out.reserve(windows.size());
  for (double w : windows) out.push_back({w, lower_beurling_density(proj, w, anchors)});
  return out;
}

}  // namespace addspec
