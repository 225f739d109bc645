#pragma once

// Probability measures on graph vertices and exact 1-Wasserstein transport.
//
// W(m1, m2) is solved as an integer transshipment problem: masses are scaled
// by the common denominator, costs are graph distances between the supports,
// and successive shortest paths yields both an optimal flow and integer node
// labels. The flow is shortcut into a coupling and the labels become the
// Kantorovich potential.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lly/graph.hpp"
#include "lly/min_cost_flow.hpp"
#include "lly/rational.hpp"

namespace lly {

class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite-support probability distribution. Zero masses are not stored.
class Measure {
 public:
  Measure() = default;

  /// Throws TransportError unless masses are nonnegative and sum to one.
  explicit Measure(std::map<Vertex, Rational> mass) : mass_(std::move(mass)) {
    Rational total(0);
    for (auto it = mass_.begin(); it != mass_.end();) {
      if (it->second < 0) throw TransportError("negative mass at vertex index " + std::to_string(it->first));
      total += it->second;
      it = it->second == 0 ? mass_.erase(it) : std::next(it);
    }
    if (mass_.empty()) throw TransportError("measure has empty support");
    if (total != 1) throw TransportError("masses sum to " + to_string(total) + ", not 1");
  }

  static Measure point(Vertex v) { return Measure({{v, Rational(1)}}); }

  Rational operator[](Vertex v) const {
    auto it = mass_.find(v);
    return it == mass_.end() ? Rational(0) : it->second;
  }
  const std::map<Vertex, Rational>& masses() const { return mass_; }
  std::vector<Vertex> support() const {
    std::vector<Vertex> out;
    for (const auto& [v, m] : mass_) out.push_back(v);
    return out;
  }

  friend bool operator==(const Measure&, const Measure&) = default;

 private:
  std::map<Vertex, Rational> mass_;
};

/// m_x^alpha: alpha at x, (1 - alpha)/deg(x) on each neighbor.
inline Measure lazy_measure(const Graph& g, Vertex x, const Rational& alpha) {
  if (alpha < 0 || alpha > 1) throw TransportError("laziness must lie in [0, 1], got " + to_string(alpha));
  std::map<Vertex, Rational> mass;
  if (alpha != 0) mass[x] = alpha;
  if (alpha != 1) {
    Rational share = (Rational(1) - alpha) / Rational(static_cast<long>(g.degree(x)));
    for (Vertex u : g.neighbors(x)) mass[u] = share;
  }
  return Measure(std::move(mass));
}

struct PlanEntry {
  Vertex from;
  Vertex to;
  Rational mass;

  friend bool operator==(const PlanEntry&, const PlanEntry&) = default;
};

/// Coupling between `source` and `target`; entries sorted by (from, to).
struct TransportPlan {
  Measure source;
  Measure target;
  std::vector<PlanEntry> entries;
};

/// Integer-valued (when the optimum is) 1-Lipschitz function over the union of
/// both supports, anchored to zero at the smallest vertex of the source support.
struct DualPotential {
  std::map<Vertex, Rational> value;

  bool integral() const {
    return std::ranges::all_of(value, [](const auto& kv) { return is_integral(kv.second); });
  }
};

struct TransportSolution {
  Rational distance;
  TransportPlan plan;
  DualPotential potential;
};

namespace detail {

inline std::vector<Vertex> union_support(const Measure& a, const Measure& b) {
  std::vector<Vertex> out = a.support();
  for (Vertex v : b.support()) out.push_back(v);
  std::ranges::sort(out);
  auto dup = std::ranges::unique(out);
  out.erase(dup.begin(), dup.end());
  return out;
}

}  // namespace detail

/// Exact optimal transport between m1 and m2 under the graph metric.
///
/// `extra_scale` multiplies the common-denominator scale; any positive value
/// yields the same answer.
inline TransportSolution solve_transport(const Graph& g, const Measure& m1, const Measure& m2,
                                         long extra_scale = 1) {
  if (extra_scale < 1) throw TransportError("scale multiplier must be positive");
  const std::vector<Vertex> domain = detail::union_support(m1, m2);
  for (Vertex v : domain) g.check(v);
  const std::size_t n = domain.size();
  const auto dist = distances_among(g, domain);

  Integer scale(1);
  for (Vertex v : domain) {
    scale = lcm(scale, m1[v].get_den());
    scale = lcm(scale, m2[v].get_den());
  }
  scale *= extra_scale;

  // Net excess per node; the shared mass min(m1, m2) stays put at zero cost.
  std::vector<Integer> excess(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational net = (m1[domain[i]] - m2[domain[i]]) * scale;
    excess[i] = net.get_num();
  }
  std::vector<std::vector<std::int64_t>> cost(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[i][j] = dist[i][j];
  }
  auto flow = successive_shortest_paths<Integer>(cost, excess);

  // Shortcut the (acyclic) optimal flow into direct moves. By the triangle
  // inequality the cost is unchanged.
  std::vector<std::vector<Integer>> moved(n, std::vector<Integer>(n, Integer(0)));
  auto& f = flow.flow;
  for (std::size_t s = 0; s < n; ++s) {
    while (excess[s] > 0) {
      std::size_t u = s;
      Integer amount = excess[s];
      std::vector<std::size_t> path{s};
      for (;;) {
        if (u != s && excess[u] < 0) {
          if (-excess[u] < amount) amount = -excess[u];
          break;
        }
        std::size_t next = n;
        for (std::size_t w = 0; w < n; ++w) {
          if (f[u][w] > 0) {
            next = w;
            break;
          }
        }
        if (next == n) throw std::logic_error("flow decomposition stalled");
        if (f[u][next] < amount) amount = f[u][next];
        u = next;
        path.push_back(u);
        if (path.size() > n + 1) throw std::logic_error("cycle in optimal flow");
      }
      for (std::size_t k = 0; k + 1 < path.size(); ++k) f[path[k]][path[k + 1]] -= amount;
      moved[s][u] += amount;
      excess[s] -= amount;
      excess[u] += amount;
    }
  }

  TransportSolution out;
  out.plan.source = m1;
  out.plan.target = m2;
  Integer total_cost(0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational mass;
      if (i == j) {
        mass = std::min(m1[domain[i]], m2[domain[i]]);
      } else if (moved[i][j] > 0) {
        mass = make_rational(moved[i][j], scale);
        total_cost += moved[i][j] * dist[i][j];
      }
      if (mass != 0) out.plan.entries.push_back({domain[i], domain[j], mass});
    }
  }
  out.distance = make_rational(total_cost, scale);

  // f = -label, shifted to vanish at the anchor.
  const Vertex anchor = m1.support().front();
  const auto anchor_slot = static_cast<std::size_t>(std::ranges::find(domain, anchor) - domain.begin());
  for (std::size_t i = 0; i < n; ++i) {
    out.potential.value[domain[i]] = Rational(flow.label[anchor_slot] - flow.label[i]);
  }
  return out;
}

inline std::pair<Rational, TransportPlan> wasserstein(const Graph& g, const Measure& m1,
                                                      const Measure& m2) {
  auto sol = solve_transport(g, m1, m2);
  return {sol.distance, std::move(sol.plan)};
}

struct DualityCheck {
  bool ok = false;
  Rational primal;
  Rational dual;
  std::vector<std::string> violations;
};

/// Checks that `plan` couples its measures, that `f` is 1-Lipschitz on its
/// domain, and that primal cost equals dual value exactly.
inline DualityCheck verify_duality(const TransportPlan& plan, const DualPotential& f,
                                   const Graph& g) {
  DualityCheck out;
  std::map<Vertex, Rational> rows, cols;
  std::vector<Vertex> touched;
  for (const auto& e : plan.entries) {
    if (e.mass < 0) out.violations.push_back("negative plan entry");
    rows[e.from] += e.mass;
    cols[e.to] += e.mass;
    touched.push_back(e.from);
    touched.push_back(e.to);
  }
  auto domain = detail::union_support(plan.source, plan.target);
  touched.insert(touched.end(), domain.begin(), domain.end());
  std::ranges::sort(touched);
  touched.erase(std::ranges::unique(touched).begin(), touched.end());
  for (Vertex v : touched) {
    if (rows[v] != plan.source[v]) {
      out.violations.push_back("row marginal at vertex " + std::to_string(g.label(v)) + " is " +
                               to_string(rows[v]) + ", expected " + to_string(plan.source[v]));
    }
    if (cols[v] != plan.target[v]) {
      out.violations.push_back("column marginal at vertex " + std::to_string(g.label(v)) + " is " +
                               to_string(cols[v]) + ", expected " + to_string(plan.target[v]));
    }
  }

  std::vector<Vertex> fdom;
  for (const auto& [v, val] : f.value) fdom.push_back(v);
  for (Vertex v : domain) {
    if (!f.value.contains(v)) out.violations.push_back("potential undefined at vertex " + std::to_string(g.label(v)));
  }
  const auto dist = distances_among(g, fdom);
  for (std::size_t i = 0; i < fdom.size(); ++i) {
    for (std::size_t j = i + 1; j < fdom.size(); ++j) {
      Rational gap = abs(f.value.at(fdom[i]) - f.value.at(fdom[j]));
      if (gap > dist[i][j]) {
        out.violations.push_back("potential not 1-Lipschitz on " + std::to_string(g.label(fdom[i])) +
                                 ", " + std::to_string(g.label(fdom[j])));
      }
    }
  }

  std::vector<Vertex> ends;
  for (const auto& e : plan.entries) {
    ends.push_back(e.from);
    ends.push_back(e.to);
  }
  std::ranges::sort(ends);
  ends.erase(std::ranges::unique(ends).begin(), ends.end());
  const auto plan_dist = distances_among(g, ends);
  auto slot = [&](Vertex v) { return static_cast<std::size_t>(std::ranges::lower_bound(ends, v) - ends.begin()); };
  out.primal = 0;
  for (const auto& e : plan.entries) out.primal += e.mass * plan_dist[slot(e.from)][slot(e.to)];
  out.dual = 0;
  for (Vertex v : domain) {
    auto it = f.value.find(v);
    if (it != f.value.end()) out.dual += it->second * (plan.source[v] - plan.target[v]);
  }
  if (out.primal != out.dual) {
    out.violations.push_back("duality gap " + to_string(Rational(out.primal - out.dual)));
  }
  out.ok = out.violations.empty();
  return out;
}

/// Integer 1-Lipschitz f with sum f (m1 - m2) = W(m1, m2). Throws
/// std::logic_error if the solver's certificate fails to check.
inline DualPotential kantorovich_potential(const Graph& g, const Measure& m1, const Measure& m2) {
  auto sol = solve_transport(g, m1, m2);
  if (!sol.potential.integral()) throw std::logic_error("potential is not integer-valued");
  auto check = verify_duality(sol.plan, sol.potential, g);
  if (!check.ok) throw std::logic_error("transport certificate failed: " + check.violations.front());
  return sol.potential;
}

}  // namespace lly
