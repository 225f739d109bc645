#pragma once

// Deterministic graph generators. Planar families carry the rotation system of
// their canonical drawing, built from a consistently oriented face list.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lly/embedding.hpp"
#include "lly/graph.hpp"

namespace lly {

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FamilyGraph {
  std::string name;
  Graph graph;
  std::optional<RotationSystem> rotation;
};

namespace detail {

inline FamilyGraph assemble(std::string name, const std::vector<Edge>& edges, std::size_t n,
                            const std::vector<std::vector<Vertex>>& faces) {
  FamilyGraph out{std::move(name), Graph::from_index_edges(edges, n), std::nullopt};
  if (!faces.empty()) out.rotation = rotation_from_faces(out.graph, faces);
  return out;
}

}  // namespace detail

/// The degree-16 extremal example: center 0, rim y_j = j + 1 for j in [0, 16),
/// spokes, rim cycle, chords y_j y_{j+2} for even j and y_j y_{j+4} for j ≡ 0
/// (mod 4). Chords are drawn outside the rim, nested by span.
inline FamilyGraph figure1() {
  constexpr Vertex t = 16;
  auto y = [](Vertex j) { return static_cast<Vertex>(j % t + 1); };
  std::vector<Edge> edges;
  for (Vertex j = 0; j < t; ++j) {
    edges.emplace_back(0, y(j));
    edges.emplace_back(y(j), y(j + 1));
    if (j % 2 == 0) edges.emplace_back(y(j), y(j + 2));
    if (j % 4 == 0) edges.emplace_back(y(j), y(j + 4));
  }
  // Faces listed so that the center's cyclic order is y_0, y_1, ..., y_15.
  std::vector<std::vector<Vertex>> faces;
  for (Vertex j = 0; j < t; ++j) faces.push_back({0, y(j + 1), y(j)});
  for (Vertex j = 0; j < t; j += 2) faces.push_back({y(j), y(j + 1), y(j + 2)});
  for (Vertex j = 0; j < t; j += 4) faces.push_back({y(j), y(j + 2), y(j + 4)});
  faces.push_back({y(0), y(4), y(8), y(12)});
  return detail::assemble("figure1", edges, t + 1, faces);
}

/// Outer cycle 0..n-1, inner cycle n..2n-1, spokes i -- n+i.
inline FamilyGraph prism(std::size_t n) {
  if (n < 3) throw FamilyError("prism needs n >= 3");
  auto a = [n](std::size_t i) { return static_cast<Vertex>(i % n); };
  auto b = [n](std::size_t i) { return static_cast<Vertex>(n + i % n); };
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> faces;
  std::vector<Vertex> top, bottom;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(a(i), a(i + 1));
    edges.emplace_back(b(i), b(i + 1));
    edges.emplace_back(a(i), b(i));
    faces.push_back({a(i), a(i + 1), b(i + 1), b(i)});
    top.push_back(a(n - 1 - i));
    bottom.push_back(b(i));
  }
  faces.push_back(top);
  faces.push_back(bottom);
  return detail::assemble("prism(" + std::to_string(n) + ")", edges, 2 * n, faces);
}

/// Cycles 0..n-1 and n..2n-1 joined by the triangle band a_i b_i, b_i a_{i+1}.
inline FamilyGraph antiprism(std::size_t n) {
  if (n < 3) throw FamilyError("antiprism needs n >= 3");
  auto a = [n](std::size_t i) { return static_cast<Vertex>(i % n); };
  auto b = [n](std::size_t i) { return static_cast<Vertex>(n + i % n); };
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> faces;
  std::vector<Vertex> top, bottom;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(a(i), a(i + 1));
    edges.emplace_back(b(i), b(i + 1));
    edges.emplace_back(a(i), b(i));
    edges.emplace_back(b(i), a(i + 1));
    faces.push_back({a(i), a(i + 1), b(i)});
    faces.push_back({b(i), a(i + 1), b(i + 1)});
    top.push_back(a(n - 1 - i));
    bottom.push_back(b(i));
  }
  faces.push_back(top);
  faces.push_back(bottom);
  return detail::assemble("antiprism(" + std::to_string(n) + ")", edges, 2 * n, faces);
}

inline FamilyGraph cycle(std::size_t n) {
  if (n < 3) throw FamilyError("cycle needs n >= 3");
  std::vector<Edge> edges;
  std::vector<Vertex> forward, backward;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    forward.push_back(static_cast<Vertex>(i));
    backward.push_back(static_cast<Vertex>(n - 1 - i));
  }
  return detail::assemble("cycle(" + std::to_string(n) + ")", edges, n, {forward, backward});
}

/// K_n; rotation systems only for n <= 4.
inline FamilyGraph complete(std::size_t n) {
  if (n < 2) throw FamilyError("complete graph needs n >= 2");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  std::vector<std::vector<Vertex>> faces;
  if (n == 2) faces = {{0, 1}};
  if (n == 3) faces = {{0, 1, 2}, {2, 1, 0}};
  if (n == 4) faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  return detail::assemble("complete(" + std::to_string(n) + ")", edges, n, faces);
}

/// Q_d on bit strings; rotation systems only for d <= 3.
inline FamilyGraph hypercube(std::size_t d) {
  if (d < 1) throw FamilyError("hypercube needs d >= 1");
  if (d > 20) throw FamilyError("hypercube dimension too large");
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t bit = 0; bit < d; ++bit) {
      std::size_t w = v ^ (std::size_t{1} << bit);
      if (v < w) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(w));
    }
  }
  std::vector<std::vector<Vertex>> faces;
  if (d == 1) faces = {{0, 1}};
  if (d == 2) faces = {{0, 1, 3, 2}, {2, 3, 1, 0}};
  if (d == 3) {
    // prism(4) with a_i = gray(i), b_i = gray(i) | 4.
    const Vertex gray[4] = {0, 1, 3, 2};
    for (std::size_t i = 0; i < 4; ++i) {
      Vertex a0 = gray[i], a1 = gray[(i + 1) % 4];
      faces.push_back({a0, a1, static_cast<Vertex>(a1 | 4), static_cast<Vertex>(a0 | 4)});
    }
    faces.push_back({gray[3], gray[2], gray[1], gray[0]});
    faces.push_back({4 | gray[0], 4 | gray[1], 4 | gray[2], 4 | gray[3]});
  }
  return detail::assemble("hypercube(" + std::to_string(d) + ")", edges, n, faces);
}

/// Hub 0 joined to the rim cycle 1..n.
inline FamilyGraph wheel(std::size_t n) {
  if (n < 3) throw FamilyError("wheel needs n >= 3");
  auto r = [n](std::size_t i) { return static_cast<Vertex>(i % n + 1); };
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> faces;
  std::vector<Vertex> outer;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(0, r(i));
    edges.emplace_back(r(i), r(i + 1));
    faces.push_back({0, r(i + 1), r(i)});
    outer.push_back(r(i));
  }
  faces.push_back(outer);
  return detail::assemble("wheel(" + std::to_string(n) + ")", edges, n + 1, faces);
}

/// Apex 0, upper ring 1..5, lower ring 6..10, bottom 11.
inline FamilyGraph icosahedron() {
  auto u = [](std::size_t i) { return static_cast<Vertex>(1 + i % 5); };
  auto l = [](std::size_t i) { return static_cast<Vertex>(6 + i % 5); };
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> faces;
  for (std::size_t i = 0; i < 5; ++i) {
    edges.emplace_back(0, u(i));
    edges.emplace_back(u(i), u(i + 1));
    edges.emplace_back(u(i), l(i));
    edges.emplace_back(l(i), u(i + 1));
    edges.emplace_back(l(i), l(i + 1));
    edges.emplace_back(11, l(i));
    faces.push_back({u(i), u(i + 1), l(i)});
    faces.push_back({l(i), u(i + 1), l(i + 1)});
    faces.push_back({0, u(i + 1), u(i)});
    faces.push_back({11, l(i), l(i + 1)});
  }
  return detail::assemble("icosahedron", edges, 12, faces);
}

/// Star center 0 with leaves 1..6; leaf 1 carries pendants 7 and 8. The edge
/// (0, 1) violates the neighborhood inequality for S = {7, 8}.
inline FamilyGraph star_with_pendants() {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= 6; ++v) edges.emplace_back(0, v);
  edges.emplace_back(1, 7);
  edges.emplace_back(1, 8);
  return detail::assemble("star-with-pendants", edges, 9, {});
}

/// wheel(6) plus an outside vertex 7 joined to rim vertices 1 and 4: a 3-cap
/// around the hub.
inline FamilyGraph apex_wheel() {
  auto w = wheel(6);
  std::vector<Edge> edges = w.graph.edges();
  edges.emplace_back(1, 7);
  edges.emplace_back(4, 7);
  std::vector<std::vector<Vertex>> faces;
  for (Vertex i = 0; i < 6; ++i) faces.push_back({0, static_cast<Vertex>((i + 1) % 6 + 1), static_cast<Vertex>(i + 1)});
  faces.push_back({1, 2, 3, 4, 7});
  faces.push_back({4, 5, 6, 1, 7});
  return detail::assemble("apex-wheel", edges, 8, faces);
}

/// Connected random graph on n vertices with every degree <= max_degree: a
/// random recursive tree plus random extra edges. Fully determined by seed.
inline FamilyGraph random_connected(std::size_t n, std::size_t max_degree, std::uint64_t seed) {
  if (n < 2) throw FamilyError("random graph needs n >= 2");
  if (max_degree < 2) throw FamilyError("random graph needs max degree >= 2");
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<std::size_t> degree(n, 0);
  std::vector<Edge> edges;
  auto add = [&](std::size_t a, std::size_t b) {
    adj[a][b] = adj[b][a] = 1;
    ++degree[a];
    ++degree[b];
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  };
  for (std::size_t v = 1; v < n; ++v) {
    std::vector<std::size_t> open;
    for (std::size_t u = 0; u < v; ++u) {
      if (degree[u] < max_degree) open.push_back(u);
    }
    add(open[pick(open.size())], v);
  }
  const std::size_t attempts = pick(2 * n + 1);
  for (std::size_t i = 0; i < attempts; ++i) {
    std::size_t a = pick(n), b = pick(n);
    if (a == b || adj[a][b] || degree[a] >= max_degree || degree[b] >= max_degree) continue;
    add(a, b);
  }
  return detail::assemble("random(" + std::to_string(n) + "," + std::to_string(seed) + ")", edges, n, {});
}

/// Dispatch by name for the command line. `n` is the size parameter (cycle
/// length, prism sides, dimension for hypercube).
inline FamilyGraph make_family(const std::string& name, std::size_t n, std::uint64_t seed = 0,
                               std::size_t max_degree = 6) {
  if (name == "figure1") return figure1();
  if (name == "prism") return prism(n);
  if (name == "antiprism") return antiprism(n);
  if (name == "cycle") return cycle(n);
  if (name == "complete") return complete(n);
  if (name == "hypercube") return hypercube(n);
  if (name == "wheel") return wheel(n);
  if (name == "icosahedron") return icosahedron();
  if (name == "star-with-pendants") return star_with_pendants();
  if (name == "apex-wheel") return apex_wheel();
  if (name == "random") return random_connected(n, max_degree, seed);
  throw FamilyError("unknown family '" + name + "'");
}

}  // namespace lly
