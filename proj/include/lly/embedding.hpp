#pragma once

// Rotation systems and face tracing.
//
// A rotation system fixes, at every vertex, a cyclic order of its neighbors.
// Faces are traced with the rule: the successor of the directed edge (u, v) is
// (v, w) where w follows u in the cyclic order at v.

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lly/graph.hpp"

namespace lly {

class EmbeddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RotationSystem {
 public:
  RotationSystem() = default;

  /// `cyclic[v]` is the clockwise neighbor cycle of v. Each must be a
  /// permutation of g.neighbors(v).
  RotationSystem(const Graph& g, std::vector<std::vector<Vertex>> cyclic)
      : order_(std::move(cyclic)) {
    if (order_.size() != g.vertex_count()) {
      throw EmbeddingError("rotation system covers " + std::to_string(order_.size()) +
                           " vertices, graph has " + std::to_string(g.vertex_count()));
    }
    position_.resize(order_.size());
    for (Vertex v = 0; v < order_.size(); ++v) {
      std::vector<Vertex> sorted = order_[v];
      std::ranges::sort(sorted);
      if (!std::ranges::equal(sorted, g.neighbors(v))) {
        throw EmbeddingError("rotation at vertex " + std::to_string(g.label(v)) +
                             " is not a permutation of its neighbors");
      }
      auto& pos = position_[v];
      pos.resize(sorted.size());
      for (std::size_t i = 0; i < order_[v].size(); ++i) {
        auto slot = std::ranges::lower_bound(sorted, order_[v][i]) - sorted.begin();
        pos[static_cast<std::size_t>(slot)] = static_cast<std::uint32_t>(i);
      }
      sorted_.push_back(std::move(sorted));
    }
  }

  std::span<const Vertex> cyclic(Vertex v) const { return order_.at(v); }

  /// Position of neighbor u in the cyclic order at v.
  std::size_t index_of(Vertex v, Vertex u) const {
    const auto& s = sorted_.at(v);
    auto it = std::ranges::lower_bound(s, u);
    if (it == s.end() || *it != u) throw EmbeddingError("not a neighbor in rotation");
    return position_[v][static_cast<std::size_t>(it - s.begin())];
  }

  /// Neighbor following u in the cyclic order at v.
  Vertex next(Vertex v, Vertex u) const {
    const auto& cyc = order_.at(v);
    return cyc[(index_of(v, u) + 1) % cyc.size()];
  }

  std::size_t vertex_count() const { return order_.size(); }

 private:
  std::vector<std::vector<Vertex>> order_;
  std::vector<std::vector<Vertex>> sorted_;
  std::vector<std::vector<std::uint32_t>> position_;
};

/// Closed boundary walk. walk[i] = (u, v) is followed by walk[i+1] = (v, w).
struct Face {
  std::vector<Edge> walk;

  std::size_t size() const { return walk.size(); }
};

/// Partitions the 2|E| directed edges into face walks. Walks start at the
/// smallest unused directed edge, so output is deterministic.
inline std::vector<Face> trace_faces(const Graph& g, const RotationSystem& rot) {
  std::vector<std::size_t> offset(g.vertex_count() + 1, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) offset[v + 1] = offset[v] + g.degree(v);
  auto dart = [&](Vertex u, Vertex v) {
    auto nb = g.neighbors(u);
    return offset[u] + static_cast<std::size_t>(std::ranges::lower_bound(nb, v) - nb.begin());
  };
  std::vector<char> used(offset.back(), 0);
  std::vector<Face> faces;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (used[dart(u, v)]) continue;
      Face face;
      Vertex a = u;
      Vertex b = v;
      while (!used[dart(a, b)]) {
        used[dart(a, b)] = 1;
        face.walk.emplace_back(a, b);
        Vertex c = rot.next(b, a);
        a = b;
        b = c;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

struct EmbeddingCheck {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  long euler_characteristic = 0;

  bool sphere() const { return euler_characteristic == 2; }
};

inline EmbeddingCheck validate_embedding(const Graph& g, std::span<const Face> faces) {
  EmbeddingCheck out;
  out.vertices = g.vertex_count();
  out.edges = g.edge_count();
  out.faces = faces.size();
  out.euler_characteristic = static_cast<long>(out.vertices) - static_cast<long>(out.edges) +
                             static_cast<long>(out.faces);
  return out;
}

/// Rotation system whose traced faces are exactly `faces`, given as
/// consistently oriented vertex cycles (every directed edge in exactly one).
inline RotationSystem rotation_from_faces(const Graph& g,
                                          std::span<const std::vector<Vertex>> faces) {
  // For a walk ... u -> v -> w ..., w follows u at v.
  std::vector<std::vector<std::pair<Vertex, Vertex>>> succ(g.vertex_count());
  for (const auto& face : faces) {
    const std::size_t k = face.size();
    for (std::size_t i = 0; i < k; ++i) {
      Vertex u = face[i];
      Vertex v = face[(i + 1) % k];
      Vertex w = face[(i + 2) % k];
      succ[v].emplace_back(u, w);
    }
  }
  std::vector<std::vector<Vertex>> cyclic(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto& table = succ[v];
    std::ranges::sort(table);
    if (table.size() != g.degree(v)) {
      throw EmbeddingError("face list does not cover vertex " + std::to_string(g.label(v)));
    }
    Vertex start = g.neighbors(v).front();
    Vertex cur = start;
    do {
      cyclic[v].push_back(cur);
      auto it = std::ranges::lower_bound(table, std::pair<Vertex, Vertex>{cur, 0});
      if (it == table.end() || it->first != cur) {
        throw EmbeddingError("inconsistent face list at vertex " + std::to_string(g.label(v)));
      }
      cur = it->second;
    } while (cur != start && cyclic[v].size() <= g.degree(v));
  }
  return RotationSystem(g, std::move(cyclic));
}

}  // namespace lly
