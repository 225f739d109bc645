#pragma once

// Successive shortest paths on a complete uncapacitated digraph.
//
// Nodes carry integer excesses (positive = supply, negative = demand, summing
// to zero); every ordered pair (u, v) is an arc of cost cost[u][v] >= 0 with
// unlimited capacity. Node labels are maintained so that reduced costs stay
// nonnegative on the residual graph, which lets every shortest path search be
// a plain Dijkstra and leaves an optimal dual solution behind.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace lly {

template <class Flow>
struct FlowSolution {
  std::vector<std::vector<Flow>> flow;  // flow[u][v] on arc u -> v
  std::vector<std::int64_t> label;      // optimal node labels
  Flow cost{};
  std::size_t augmentations = 0;
};

/// Solves min sum cost*flow subject to out(u) - in(u) = excess[u].
///
/// On return `label` satisfies label[v] - label[u] <= cost[u][v] for every
/// arc, with equality on arcs carrying flow. Ties in Dijkstra resolve to the
/// lower node index.
template <class Flow>
FlowSolution<Flow> successive_shortest_paths(const std::vector<std::vector<std::int64_t>>& cost,
                                             std::vector<Flow> excess) {
  const std::size_t n = excess.size();
  if (cost.size() != n) throw std::invalid_argument("cost matrix size mismatch");
  Flow total{0};
  for (const auto& e : excess) total += e;
  if (total != Flow{0}) throw std::invalid_argument("excesses do not balance");

  FlowSolution<Flow> sol;
  sol.flow.assign(n, std::vector<Flow>(n, Flow{0}));
  sol.label.assign(n, 0);
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();

  // Cheapest residual arc u -> v: the reverse of a loaded arc v -> u costs
  // -cost[v][u]; otherwise the forward arc.
  auto residual_cost = [&](std::size_t u, std::size_t v) {
    return sol.flow[v][u] > Flow{0} ? -cost[v][u] : cost[u][v];
  };

  std::vector<std::int64_t> dist(n);
  std::vector<std::size_t> parent(n);
  std::vector<char> done(n);
  for (;;) {
    bool any_supply = false;
    for (std::size_t v = 0; v < n; ++v) {
      dist[v] = inf;
      done[v] = 0;
      parent[v] = n;
      if (excess[v] > Flow{0}) {
        dist[v] = 0;
        any_supply = true;
      }
    }
    if (!any_supply) break;

    for (std::size_t step = 0; step < n; ++step) {
      std::size_t u = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (!done[v] && dist[v] != inf && (u == n || dist[v] < dist[u])) u = v;
      }
      if (u == n) break;
      done[u] = 1;
      for (std::size_t v = 0; v < n; ++v) {
        if (v == u || done[v]) continue;
        std::int64_t reduced = residual_cost(u, v) + sol.label[u] - sol.label[v];
        if (reduced < 0) throw std::logic_error("negative reduced cost in residual graph");
        if (dist[u] + reduced < dist[v]) {
          dist[v] = dist[u] + reduced;
          parent[v] = u;
        }
      }
    }

    std::size_t sink = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (excess[v] < Flow{0} && dist[v] != inf && (sink == n || dist[v] < dist[sink])) sink = v;
    }
    if (sink == n) throw std::logic_error("no augmenting path in a complete digraph");

    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] != inf) sol.label[v] += dist[v];
    }

    std::size_t source = sink;
    while (parent[source] != n) source = parent[source];
    Flow amount = excess[source];
    if (-excess[sink] < amount) amount = -excess[sink];
    for (std::size_t v = sink; parent[v] != n; v = parent[v]) {
      std::size_t u = parent[v];
      if (sol.flow[v][u] > Flow{0} && sol.flow[v][u] < amount) amount = sol.flow[v][u];
    }
    for (std::size_t v = sink; parent[v] != n; v = parent[v]) {
      std::size_t u = parent[v];
      if (sol.flow[v][u] > Flow{0}) {
        sol.flow[v][u] -= amount;
      } else {
        sol.flow[u][v] += amount;
      }
    }
    excess[source] -= amount;
    excess[sink] += amount;
    ++sol.augmentations;
  }

  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (sol.flow[u][v] > Flow{0}) sol.cost += sol.flow[u][v] * Flow(cost[u][v]);
    }
  }
  return sol;
}

}  // namespace lly
