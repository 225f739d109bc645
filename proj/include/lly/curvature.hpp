#pragma once

// Curvature engines.
//
// kappa_lly solves the limit-free Laplacian program
//
//   minimize   (Δf(x) - Δf(y)) / d(x, y)
//   subject to f(y) - f(x) = d(x, y),  |f(u) - f(v)| <= d(u, v)  on U,
//
// where U = {x, y} ∪ Γ(x) ∪ Γ(y) and d is the global graph distance. Any
// 1-Lipschitz function on U extends to the whole graph without touching the
// objective, so the restriction loses nothing. The program is solved through
// its dual (a flow-conservation system with one column per ordered pair) by
// the exact simplex; the simplex multipliers give back an optimal f, which is
// re-checked against the primal constraints before the value is returned.
//
// The transport-based engines (kappa_alpha, kappa_lly_slope, kappa_zero) go
// through min-cost flow instead and serve as the independent cross-check.

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "lly/embedding.hpp"
#include "lly/graph.hpp"
#include "lly/rational.hpp"
#include "lly/simplex.hpp"
#include "lly/transport.hpp"

namespace lly {

class CurvatureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LipschitzProgram {
  Vertex x = 0;
  Vertex y = 0;
  int separation = 0;                    // d(x, y)
  std::vector<Vertex> domain;            // U, ascending
  std::vector<std::vector<int>> distance;  // global distances on U
  std::vector<Rational> objective;       // coefficient of f(u) for u in U

  std::size_t slot(Vertex v) const {
    auto it = std::ranges::lower_bound(domain, v);
    if (it == domain.end() || *it != v) throw CurvatureError("vertex outside the program domain");
    return static_cast<std::size_t>(it - domain.begin());
  }

  static LipschitzProgram build(const Graph& g, Vertex x, Vertex y) {
    g.check(x);
    g.check(y);
    if (x == y) throw CurvatureError("curvature needs two distinct vertices");
    LipschitzProgram p;
    p.x = x;
    p.y = y;
    p.domain = {x, y};
    for (Vertex u : g.neighbors(x)) p.domain.push_back(u);
    for (Vertex u : g.neighbors(y)) p.domain.push_back(u);
    std::ranges::sort(p.domain);
    p.domain.erase(std::ranges::unique(p.domain).begin(), p.domain.end());
    p.distance = distances_among(g, p.domain);
    p.separation = p.distance[p.slot(x)][p.slot(y)];

    // Δf(w) = (1/deg w) Σ_{z ~ w} f(z) - f(w), scaled by 1/d(x, y).
    p.objective.assign(p.domain.size(), Rational(0));
    const Rational scale = make_rational(1, p.separation);
    const Rational wx = scale / static_cast<long>(g.degree(x));
    const Rational wy = scale / static_cast<long>(g.degree(y));
    for (Vertex z : g.neighbors(x)) p.objective[p.slot(z)] += wx;
    p.objective[p.slot(x)] -= scale;
    for (Vertex z : g.neighbors(y)) p.objective[p.slot(z)] -= wy;
    p.objective[p.slot(y)] += scale;
    return p;
  }

  /// Pairs whose Lipschitz constraint is not implied by a shorter chain of
  /// constraints through a third vertex of U.
  std::vector<std::pair<std::size_t, std::size_t>> essential_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = domain.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        bool implied = false;
        for (std::size_t k = 0; k < n && !implied; ++k) {
          implied = k != i && k != j && distance[i][k] + distance[k][j] == distance[i][j];
        }
        if (!implied) out.emplace_back(i, j);
      }
    }
    return out;
  }

  /// True when f (indexed like `domain`) satisfies every constraint.
  bool feasible(std::span<const Rational> f) const {
    if (f[slot(y)] - f[slot(x)] != separation) return false;
    for (std::size_t i = 0; i < domain.size(); ++i) {
      for (std::size_t j = i + 1; j < domain.size(); ++j) {
        if (abs(f[i] - f[j]) > distance[i][j]) return false;
      }
    }
    return true;
  }

  Rational evaluate(std::span<const Rational> f) const {
    Rational total(0);
    for (std::size_t i = 0; i < domain.size(); ++i) total += objective[i] * f[i];
    return total;
  }
};

struct LipschitzOptimum {
  Rational kappa;
  std::map<Vertex, Rational> potential;  // optimal f on U with f(x) = 0
  std::size_t pivots = 0;
};

inline LipschitzOptimum solve_lipschitz_program(const LipschitzProgram& p) {
  const std::size_t n = p.domain.size();
  const auto pairs = p.essential_pairs();
  const std::size_t cols = 2 * pairs.size() + 2;
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(cols, Rational(0)));
  std::vector<Rational> cost(cols);
  // Column for the constraint f(u) - f(v) <= d(u, v): +1 at v, -1 at u.
  std::size_t col = 0;
  for (auto [i, j] : pairs) {
    for (auto [u, v] : {std::pair{i, j}, std::pair{j, i}}) {
      A[v][col] = 1;
      A[u][col] = -1;
      cost[col] = p.distance[u][v];
      ++col;
    }
  }
  // Free multiplier of f(y) - f(x) = d, split into two signs.
  const std::size_t sx = p.slot(p.x), sy = p.slot(p.y);
  A[sy][col] = 1;
  A[sx][col] = -1;
  cost[col] = -p.separation;
  ++col;
  A[sy][col] = -1;
  A[sx][col] = 1;
  cost[col] = p.separation;

  auto lp = solve_standard_form(A, p.objective, cost);
  if (lp.status != LpStatus::optimal) throw std::logic_error("Lipschitz program dual not solvable");

  // The multipliers y satisfy y(v) - y(u) <= d(u, v); f = -y is primal optimal.
  std::vector<Rational> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = -(lp.dual[i] - lp.dual[sx]);
  LipschitzOptimum out;
  out.kappa = -lp.objective;
  out.pivots = lp.pivots;
  if (!p.feasible(f) || p.evaluate(f) != out.kappa) {
    throw std::logic_error("Lipschitz program certificate failed");
  }
  for (std::size_t i = 0; i < n; ++i) out.potential[p.domain[i]] = f[i];
  return out;
}

/// Lin-Lu-Yau curvature via the Laplacian program. Works for any x != y.
inline Rational kappa_lly(const Graph& g, Vertex x, Vertex y) {
  return solve_lipschitz_program(LipschitzProgram::build(g, x, y)).kappa;
}

/// ∇_xy Δf for a function given on (at least) {x, y} ∪ Γ(x) ∪ Γ(y); missing
/// vertices count as zero.
inline Rational laplacian_gradient(const Graph& g, Vertex x, Vertex y,
                                   const std::map<Vertex, Rational>& f) {
  auto value = [&](Vertex v) {
    auto it = f.find(v);
    return it == f.end() ? Rational(0) : it->second;
  };
  auto laplacian = [&](Vertex w) {
    Rational sum(0);
    for (Vertex z : g.neighbors(w)) sum += value(z);
    return Rational(sum / static_cast<long>(g.degree(w)) - value(w));
  };
  return (laplacian(x) - laplacian(y)) / distance(g, x, y);
}

inline Rational kappa_alpha(const Graph& g, Vertex x, Vertex y, const Rational& alpha) {
  if (x == y) throw CurvatureError("curvature needs two distinct vertices");
  auto w = solve_transport(g, lazy_measure(g, x, alpha), lazy_measure(g, y, alpha)).distance;
  return Rational(1) - w / distance(g, x, y);
}

/// Laziness at which κ_α/(1 - α) is read off: L/(L + 1), L = lcm(deg x, deg y).
inline Rational slope_laziness(const Graph& g, Vertex x, Vertex y) {
  const long dx = static_cast<long>(g.degree(x));
  const long dy = static_cast<long>(g.degree(y));
  const long l = std::lcm(dx, dy);
  return make_rational(l, l + 1);
}

/// κ_α/(1 - α) at α = L/(L + 1); agrees with kappa_lly on every edge.
inline Rational kappa_lly_slope(const Graph& g, Vertex x, Vertex y) {
  if (x == y || !g.adjacent(x, y)) throw CurvatureError("slope engine needs an edge");
  const Rational alpha = slope_laziness(g, x, y);
  return kappa_alpha(g, x, y, alpha) / (Rational(1) - alpha);
}

/// 1 - W(m_x^0, m_y^0), a lower bound on κ_LLY for an edge.
inline Rational kappa_zero(const Graph& g, Vertex x, Vertex y) {
  if (x == y || !g.adjacent(x, y)) throw CurvatureError("kappa_zero needs an edge");
  return kappa_alpha(g, x, y, Rational(0));
}

/// φ(v) for every vertex: 1 - deg(v)/2 + Σ 1/|σ| with one term per visit of
/// v on a face boundary walk. Requires a spherical embedding.
inline std::vector<Rational> combinatorial_curvatures(const Graph& g, std::span<const Face> faces) {
  auto check = validate_embedding(g, faces);
  if (!check.sphere()) {
    throw EmbeddingError("embedding has Euler characteristic " +
                         std::to_string(check.euler_characteristic) + ", not a sphere");
  }
  std::vector<Rational> phi(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    phi[v] = Rational(1) - make_rational(static_cast<long>(g.degree(v)), 2);
  }
  for (const auto& face : faces) {
    const Rational share = make_rational(1, static_cast<long>(face.size()));
    for (auto [u, v] : face.walk) phi[v] += share;
  }
  return phi;
}

inline Rational combinatorial_curvature(const Graph& g, std::span<const Face> faces, Vertex v) {
  g.check(v);
  return combinatorial_curvatures(g, faces)[v];
}

/// 1 + Δ Σ_{i<diam} (Δ-1)^i: the number of vertices a ball of radius `diameter`
/// can hold when every degree is at most Δ.
inline Integer moore_bound(long max_degree, long diameter) {
  if (max_degree < 2) throw CurvatureError("Moore bound needs maximum degree >= 2");
  if (diameter < 1) throw CurvatureError("Moore bound needs diameter >= 1");
  Integer shell(max_degree);
  Integer total(1);
  for (long i = 0; i < diameter; ++i) {
    total += shell;
    shell *= max_degree - 1;
  }
  return total;
}

}  // namespace lly
