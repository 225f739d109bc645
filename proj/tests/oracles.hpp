#pragma once

// Brute-force reference implementations used only by tests. They share
// nothing with the library except Rational and the Graph container; distances
// come from Floyd-Warshall and optima from exhaustive enumeration.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "lly/graph.hpp"
#include "lly/rational.hpp"

namespace oracle {

using lly::Graph;
using lly::Rational;
using lly::Vertex;

inline std::vector<std::vector<long>> all_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const long inf = std::numeric_limits<long>::max() / 4;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

/// Calls `visit` with every integer function on `pts` that is 1-Lipschitz for
/// `d`, has value 0 at pts[0], and satisfies the optional pins.
inline void for_each_integer_lipschitz(const std::vector<Vertex>& pts, const std::vector<std::vector<long>>& d,
                                       const std::map<Vertex, long>& pins,
                                       const std::function<void(const std::vector<long>&)>& visit) {
  std::vector<long> f(pts.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == pts.size()) {
      visit(f);
      return;
    }
    const long reach = d[pts[0]][pts[i]];
    for (long value = -reach; value <= reach; ++value) {
      if (auto it = pins.find(pts[i]); it != pins.end() && it->second != value) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = std::abs(value - f[j]) <= d[pts[i]][pts[j]];
      if (!ok) continue;
      f[i] = value;
      rec(i + 1);
    }
  };
  if (auto it = pins.find(pts[0]); it != pins.end() && it->second != 0) return;
  rec(1);
}

/// Curvature of (x, y) as the minimum of (Δf(x) − Δf(y))/d(x,y) over integer
/// 1-Lipschitz f with f(y) − f(x) = d(x,y), enumerated on x, y and their
/// neighbors. Returns nullopt when that set exceeds `max_points`.
inline std::optional<Rational> curvature(const Graph& g, Vertex x, Vertex y, std::size_t max_points = 8) {
  const auto d = all_distances(g);
  std::vector<Vertex> pts{x, y};
  for (Vertex w : {x, y}) {
    for (Vertex u : g.neighbors(w)) pts.push_back(u);
  }
  std::sort(pts.begin() + 1, pts.end());
  pts.erase(std::unique(pts.begin() + 1, pts.end()), pts.end());
  pts.erase(std::remove(pts.begin() + 1, pts.end(), x), pts.end());
  if (pts.size() > max_points) return std::nullopt;

  const long dxy = d[x][y];
  std::optional<Rational> best;
  for_each_integer_lipschitz(pts, d, {{y, dxy}}, [&](const std::vector<long>& f) {
    std::map<Vertex, long> val;
    for (std::size_t i = 0; i < pts.size(); ++i) val[pts[i]] = f[i];
    auto laplacian = [&](Vertex w) {
      Rational sum(0);
      for (Vertex u : g.neighbors(w)) sum += val.at(u);
      return Rational(sum / static_cast<long>(g.degree(w)) - val.at(w));
    };
    Rational obj = (laplacian(x) - laplacian(y)) / dxy;
    if (!best || obj < *best) best = obj;
  });
  return best;
}

/// W1(m1, m2) as the maximum of Σ f (m1 − m2) over integer 1-Lipschitz f on
/// the union of supports.
inline Rational wasserstein(const Graph& g, const std::map<Vertex, Rational>& m1,
                            const std::map<Vertex, Rational>& m2) {
  const auto d = all_distances(g);
  std::map<Vertex, Rational> diff;
  for (const auto& [v, m] : m1) diff[v] += m;
  for (const auto& [v, m] : m2) diff[v] -= m;
  std::vector<Vertex> pts;
  for (const auto& [v, m] : diff) pts.push_back(v);
  std::optional<Rational> best;
  for_each_integer_lipschitz(pts, d, {}, [&](const std::vector<long>& f) {
    Rational total(0);
    for (std::size_t i = 0; i < pts.size(); ++i) total += diff.at(pts[i]) * f[i];
    if (!best || total > *best) best = total;
  });
  return best.value_or(Rational(0));
}

/// α-lazy walk at x, built directly from the definition.
inline std::map<Vertex, Rational> lazy(const Graph& g, Vertex x, const Rational& alpha) {
  std::map<Vertex, Rational> m;
  if (alpha != 0) m[x] = alpha;
  const Rational share = (Rational(1) - alpha) / static_cast<long>(g.degree(x));
  if (share != 0) {
    for (Vertex u : g.neighbors(x)) m[u] += share;
  }
  return m;
}

}  // namespace oracle
