#pragma once

// Simple undirected connected graphs with dense internal indexing.
//
// Vertices carry arbitrary nonnegative integer labels from the input. Internally
// they are re-indexed 0..n-1 in increasing label order, so index order and label
// order agree and every "smallest id" tie-break can be taken on indices.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lly {

using Vertex = std::uint32_t;
using VertexId = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Graph {
 public:
  Graph() = default;

  /// Builds a graph from labelled edges. `extra_vertices` lists labels that may
  /// have no incident edge (only a single-vertex graph can survive the
  /// connectivity check with one). Throws GraphError on self-loops, parallel
  /// edges, negative labels or a disconnected result.
  static Graph from_edges(std::span<const std::pair<VertexId, VertexId>> edges,
                          std::span<const VertexId> extra_vertices = {}) {
    Graph g;
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0) throw GraphError("negative vertex id");
      if (u == v) throw GraphError("self-loop on vertex " + std::to_string(u));
      g.labels_.push_back(u);
      g.labels_.push_back(v);
    }
    for (VertexId v : extra_vertices) {
      if (v < 0) throw GraphError("negative vertex id");
      g.labels_.push_back(v);
    }
    std::ranges::sort(g.labels_);
    auto dup = std::ranges::unique(g.labels_);
    g.labels_.erase(dup.begin(), dup.end());
    if (g.labels_.empty()) throw GraphError("graph has no vertices");

    g.adjacency_.assign(g.labels_.size(), {});
    for (auto [u, v] : edges) {
      Vertex a = *g.find(u);
      Vertex b = *g.find(v);
      g.adjacency_[a].push_back(b);
      g.adjacency_[b].push_back(a);
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto& nb = g.adjacency_[v];
      std::ranges::sort(nb);
      if (auto it = std::ranges::adjacent_find(nb); it != nb.end()) {
        throw GraphError("duplicate edge " + std::to_string(g.label(v)) + " " +
                         std::to_string(g.label(*it)));
      }
      g.edge_count_ += nb.size();
    }
    g.edge_count_ /= 2;
    if (!g.connected()) throw GraphError("graph is disconnected");
    return g;
  }

  /// Same as from_edges with labels equal to the given dense indices.
  static Graph from_index_edges(std::span<const Edge> edges, std::size_t vertex_count) {
    std::vector<std::pair<VertexId, VertexId>> labelled;
    labelled.reserve(edges.size());
    for (auto [u, v] : edges) labelled.emplace_back(u, v);
    std::vector<VertexId> all(vertex_count);
    for (std::size_t i = 0; i < vertex_count; ++i) all[i] = static_cast<VertexId>(i);
    return from_edges(labelled, all);
  }

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check(v);
    return adjacency_[v];
  }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    check(v);
    return std::ranges::binary_search(nb, v);
  }

  VertexId label(Vertex v) const {
    check(v);
    return labels_[v];
  }
  std::span<const VertexId> labels() const { return labels_; }

  std::optional<Vertex> find(VertexId id) const {
    auto it = std::ranges::lower_bound(labels_, id);
    if (it == labels_.end() || *it != id) return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
  }

  /// Index of a label; throws GraphError when absent.
  Vertex at(VertexId id) const {
    if (auto v = find(id)) return *v;
    throw GraphError("unknown vertex " + std::to_string(id));
  }

  /// Edges (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& nb : adjacency_) best = std::max(best, nb.size());
    return best;
  }
  std::size_t min_degree() const {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& nb : adjacency_) best = std::min(best, nb.size());
    return best;
  }

  void check(Vertex v) const {
    if (v >= vertex_count()) throw GraphError("unknown vertex index " + std::to_string(v));
  }

 private:
  bool connected() const {
    std::vector<char> seen(vertex_count(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : adjacency_[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == vertex_count();
  }

  std::vector<VertexId> labels_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

inline constexpr int kUnreached = -1;

/// Graph distances from one source. Entries beyond a radius cutoff, when one
/// was used, are kUnreached.
struct DistanceMap {
  Vertex source = 0;
  std::vector<int> distance;

  int operator[](Vertex v) const { return distance.at(v); }
};

inline DistanceMap bfs_distances(const Graph& g, Vertex source,
                                 int max_radius = std::numeric_limits<int>::max()) {
  g.check(source);
  DistanceMap out{source, std::vector<int>(g.vertex_count(), kUnreached)};
  std::deque<Vertex> queue{source};
  out.distance[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    int du = out.distance[u];
    if (du >= max_radius) continue;
    for (Vertex w : g.neighbors(u)) {
      if (out.distance[w] == kUnreached) {
        out.distance[w] = du + 1;
        queue.push_back(w);
      }
    }
  }
  return out;
}

/// Vertices within distance r of v, ascending.
inline std::vector<Vertex> ball(const Graph& g, Vertex v, int r) {
  if (r < 0) throw GraphError("negative radius");
  auto dist = bfs_distances(g, v, r);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (dist.distance[u] != kUnreached) out.push_back(u);
  }
  return out;
}

inline std::vector<Vertex> common_neighbors(const Graph& g, Vertex x, Vertex y) {
  auto a = g.neighbors(x);
  auto b = g.neighbors(y);
  if (x == y) throw GraphError("common_neighbors needs distinct vertices");
  std::vector<Vertex> out;
  std::ranges::set_intersection(a, b, std::back_inserter(out));
  return out;
}

/// Γ(S): every vertex adjacent to some member of S, ascending.
inline std::vector<Vertex> neighborhood(const Graph& g, std::span<const Vertex> set) {
  std::vector<Vertex> out;
  for (Vertex s : set) {
    auto nb = g.neighbors(s);
    out.insert(out.end(), nb.begin(), nb.end());
  }
  std::ranges::sort(out);
  auto dup = std::ranges::unique(out);
  out.erase(dup.begin(), dup.end());
  return out;
}

inline int distance(const Graph& g, Vertex u, Vertex v) {
  g.check(v);
  return bfs_distances(g, u).distance[v];
}

/// Exact distance table among `targets`. BFS from each target stops as soon as
/// every target has been reached.
inline std::vector<std::vector<int>> distances_among(const Graph& g,
                                                     std::span<const Vertex> targets) {
  const std::size_t n = targets.size();
  std::vector<int> slot(g.vertex_count(), -1);
  for (std::size_t i = 0; i < n; ++i) {
    g.check(targets[i]);
    slot[targets[i]] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> table(n, std::vector<int>(n, kUnreached));
  std::vector<int> dist(g.vertex_count(), kUnreached);
  std::vector<Vertex> touched;
  for (std::size_t i = 0; i < n; ++i) {
    std::deque<Vertex> queue{targets[i]};
    dist[targets[i]] = 0;
    touched.assign(1, targets[i]);
    std::size_t found = 0;
    while (!queue.empty() && found < n) {
      Vertex u = queue.front();
      queue.pop_front();
      if (slot[u] >= 0) {
        table[i][static_cast<std::size_t>(slot[u])] = dist[u];
        ++found;
      }
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          touched.push_back(w);
          queue.push_back(w);
        }
      }
    }
    for (Vertex t : touched) dist[t] = kUnreached;
  }
  return table;
}

inline int diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (int d : bfs_distances(g, v).distance) best = std::max(best, d);
  }
  return best;
}

/// Copy of g with vertex i renamed to perm[i]. Labels become the new indices.
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.vertex_count()) throw GraphError("permutation size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_index_edges(edges, g.vertex_count());
}

}  // namespace lly
