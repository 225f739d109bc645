#pragma once

// Executable versions of the local structure arguments used to bound the
// maximum degree of positively curved planar graphs:
//
//  * arc / cap detection around a vertex, relative to its rotation;
//  * the neighborhood inequality for an edge xy (deg x >= deg y) and a set
//    S ⊆ Γ(y) \ {x}:
//        |Γ(S) ∩ Γ(x)| > (|S|/deg y)·deg x - (k + 1 + γ(x,y)) + |Γ(S) ∩ Γ(x,y)|,
//    with k = |S ∩ Γ(x)|, together with the {-1, 0, 1}-valued test function
//    that certifies κ(x, y) <= 0 whenever the inequality fails;
//  * the maximum degree audit.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lly/curvature.hpp"
#include "lly/embedding.hpp"
#include "lly/graph.hpp"
#include "lly/io.hpp"
#include "lly/parallel.hpp"
#include "lly/report.hpp"

namespace lly {

class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Arcs and caps

enum class CapKind { arc, cap };

/// Pair (v_k, v_{k+ℓ}) of neighbors of `center`, indices in its rotation.
struct CapRecord {
  Vertex center;
  std::size_t start;  // k
  std::size_t end;    // (k + ℓ) mod deg(center)
  std::size_t length; // ℓ
  Vertex from;        // v_k
  Vertex to;          // v_{k+ℓ}
  CapKind kind;
  std::optional<Vertex> witness;  // z for a cap that is not an arc

  friend bool operator==(const CapRecord&, const CapRecord&) = default;
};

/// All ℓ-arcs and ℓ-caps around x with 1 <= ℓ <= max_length, ordered by (k, ℓ).
/// A pair that is an arc is reported as an arc. A cap witness z is a vertex
/// other than x and the strictly intermediate v_{k+i}, adjacent to both ends
/// and to none of v_{k+1}, ..., v_{k+ℓ-1}; the smallest such z is reported.
inline std::vector<CapRecord> detect_caps(const Graph& g, const RotationSystem& rot, Vertex x,
                                          std::size_t max_length) {
  g.check(x);
  const auto order = rot.cyclic(x);
  const std::size_t t = order.size();
  std::vector<CapRecord> out;
  if (t < 2) return out;
  max_length = std::min(max_length, t - 1);
  for (std::size_t k = 0; k < t; ++k) {
    for (std::size_t len = 1; len <= max_length; ++len) {
      const Vertex a = order[k];
      const Vertex b = order[(k + len) % t];
      CapRecord rec{x, k, (k + len) % t, len, a, b, CapKind::arc, std::nullopt};
      if (g.adjacent(a, b)) {
        out.push_back(rec);
        continue;
      }
      std::vector<Vertex> between;
      for (std::size_t i = 1; i < len; ++i) between.push_back(order[(k + i) % t]);
      for (Vertex z : common_neighbors(g, a, b)) {
        if (z == x || std::ranges::find(between, z) != between.end()) continue;
        bool blocked = std::ranges::any_of(between, [&](Vertex w) { return g.adjacent(z, w); });
        if (!blocked) {
          rec.kind = CapKind::cap;
          rec.witness = z;
          out.push_back(rec);
          break;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Neighborhood inequality

struct NeighborhoodInstance {
  Vertex x;
  Vertex y;
  std::vector<Vertex> subset;  // S, ascending
  std::size_t s = 0;
  std::size_t k = 0;
  std::size_t gamma = 0;
  std::size_t lhs = 0;
  std::size_t overlap = 0;
  Rational rhs;
  bool holds = false;
};

struct LipschitzWitness {
  Vertex x;
  Vertex y;
  std::map<Vertex, int> value;  // nonzero entries of f
  Rational nabla;               // ∇_xy Δf
};

namespace detail {

inline std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Vertex> tmp;
  std::ranges::set_intersection(a, b, std::back_inserter(tmp));
  return tmp.size();
}

}  // namespace detail

/// Evaluates the inequality exactly. Throws StructureError listing every
/// violated precondition.
inline NeighborhoodInstance neighborhood_inequality(const Graph& g, Vertex x, Vertex y, std::vector<Vertex> subset) {
  g.check(x);
  g.check(y);
  std::ranges::sort(subset);
  std::vector<std::string> problems;
  if (x == y || !g.adjacent(x, y)) problems.push_back("x and y are not adjacent");
  if (g.degree(x) < g.degree(y)) problems.push_back("deg(x) < deg(y)");
  if (std::ranges::adjacent_find(subset) != subset.end()) problems.push_back("S has repeated vertices");
  for (Vertex s : subset) {
    g.check(s);
    if (s == x || !g.adjacent(s, y)) {
      problems.push_back("vertex " + std::to_string(g.label(s)) + " of S is not in Γ(y) \\ {x}");
    }
  }
  if (!problems.empty()) {
    std::string msg = "precondition violated:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw StructureError(msg);
  }

  NeighborhoodInstance inst;
  inst.x = x;
  inst.y = y;
  inst.subset = subset;
  const auto gx = g.neighbors(x);
  const auto gs = neighborhood(g, subset);
  const auto gxy = common_neighbors(g, x, y);
  inst.s = subset.size();
  inst.k = detail::intersection_size(subset, gx);
  inst.gamma = gxy.size();
  inst.lhs = detail::intersection_size(gs, gx);
  inst.overlap = detail::intersection_size(gs, gxy);
  inst.rhs = make_rational(static_cast<long>(inst.s * g.degree(x)), static_cast<long>(g.degree(y))) -
             static_cast<long>(inst.k + 1 + inst.gamma) + static_cast<long>(inst.overlap);
  inst.holds = Rational(static_cast<long>(inst.lhs)) > inst.rhs;
  return inst;
}

/// The test function f = 1 on {y} ∪ S, -1 on Γ(x) \ (Γ(S) ∪ Γ(y)), 0 elsewhere
/// (earlier clauses win), checked 1-Lipschitz. Only defined when the
/// inequality fails; then ∇_xy Δf <= 0 bounds κ(x, y) from above.
inline LipschitzWitness neighborhood_witness(const Graph& g, Vertex x, Vertex y, std::vector<Vertex> subset) {
  auto inst = neighborhood_inequality(g, x, y, std::move(subset));
  if (inst.holds) throw StructureError("inequality holds; no witness exists for this instance");

  LipschitzWitness w{x, y, {}, Rational(0)};
  w.value[y] = 1;
  for (Vertex s : inst.subset) w.value[s] = 1;
  auto covered = neighborhood(g, inst.subset);
  for (Vertex u : g.neighbors(y)) covered.push_back(u);
  std::ranges::sort(covered);
  for (Vertex u : g.neighbors(x)) {
    if (!w.value.contains(u) && !std::ranges::binary_search(covered, u)) w.value[u] = -1;
  }

  std::vector<Vertex> support;
  for (const auto& [v, val] : w.value) support.push_back(v);
  const auto dist = distances_among(g, support);
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (std::size_t j = i + 1; j < support.size(); ++j) {
      if (std::abs(w.value[support[i]] - w.value[support[j]]) > dist[i][j]) {
        throw std::logic_error("witness is not 1-Lipschitz");
      }
    }
  }

  std::map<Vertex, Rational> f;
  for (const auto& [v, val] : w.value) f[v] = val;
  w.nabla = laplacian_gradient(g, x, y, f);
  if (w.nabla > 0) throw std::logic_error("witness gradient is positive on a failing instance");
  return w;
}

struct SweepOptions {
  std::size_t edge_budget = 0;           // 0 = every edge
  std::size_t exhaustive_degree = 10;    // all subsets when deg(y) <= this
  std::size_t random_subsets = 1024;     // samples per edge otherwise
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

struct FailingInstance {
  NeighborhoodInstance instance;
  LipschitzWitness witness;
};

/// Searches edges for failing instances. Edges are oriented with
/// deg(x) >= deg(y); equal degrees are examined in both orientations.
inline std::vector<FailingInstance> neighborhood_sweep(const Graph& g, const SweepOptions& opt = {}) {
  std::vector<Edge> oriented;
  for (auto [u, v] : g.edges()) {
    if (g.degree(u) >= g.degree(v)) oriented.emplace_back(u, v);
    if (g.degree(v) >= g.degree(u)) oriented.emplace_back(v, u);
  }
  if (opt.edge_budget != 0 && oriented.size() > opt.edge_budget) oriented.resize(opt.edge_budget);

  auto per_edge = parallel_map(oriented.size(), opt.jobs, [&](std::size_t idx) {
    auto [x, y] = oriented[idx];
    std::vector<Vertex> pool;
    for (Vertex u : g.neighbors(y)) {
      if (u != x) pool.push_back(u);
    }
    std::vector<FailingInstance> found;
    auto test = [&](std::vector<Vertex> subset) {
      auto inst = neighborhood_inequality(g, x, y, subset);
      if (!inst.holds) found.push_back({inst, neighborhood_witness(g, x, y, std::move(subset))});
    };
    if (g.degree(y) <= opt.exhaustive_degree) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
        std::vector<Vertex> subset;
        for (std::size_t i = 0; i < pool.size(); ++i) {
          if (mask >> i & 1) subset.push_back(pool[i]);
        }
        test(std::move(subset));
      }
    } else {
      std::mt19937_64 rng(opt.seed ^ (0x9e3779b97f4a7c15ULL * (idx + 1)));
      for (std::size_t sample = 0; sample < opt.random_subsets; ++sample) {
        std::vector<Vertex> subset;
        for (Vertex u : pool) {
          if (rng() & 1) subset.push_back(u);
        }
        test(std::move(subset));
      }
    }
    return found;
  });

  std::vector<FailingInstance> out;
  for (auto& chunk : per_edge) {
    for (auto& f : chunk) out.push_back(std::move(f));
  }
  return out;
}

inline nlohmann::ordered_json to_json(const FailingInstance& f, const Graph& g) {
  auto labels = [&](std::span<const Vertex> vs) {
    auto arr = nlohmann::ordered_json::array();
    for (Vertex v : vs) arr.push_back(g.label(v));
    return arr;
  };
  const auto& i = f.instance;
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  for (const auto& [v, val] : f.witness.value) witness[std::to_string(g.label(v))] = val;
  return {{"x", g.label(i.x)},
          {"y", g.label(i.y)},
          {"S", labels(i.subset)},
          {"s", i.s},
          {"k", i.k},
          {"lhs", i.lhs},
          {"rhs", to_string(i.rhs)},
          {"witness", std::move(witness)},
          {"nabla_xy_delta_f", to_string(f.witness.nabla)}};
}

// ---------------------------------------------------------------------------
// Degree audit

inline constexpr std::size_t kPlanarDegreeLimit = 17;

enum class AuditStatus { not_applicable, passed, violated };

struct AuditResult {
  AuditStatus status = AuditStatus::not_applicable;
  std::string reason;
  std::optional<nlohmann::ordered_json> counterexample;  // set when violated
};

/// For a positively curved graph with minimum degree >= 3 and a spherical
/// embedding, the maximum degree must be at most 17. A violation produces a
/// counterexample-candidate artifact (graph plus curvature table).
inline AuditResult degree_audit(const Graph& g, const RotationSystem* rot, const CurvatureReport& report) {
  AuditResult out;
  if (!report.positively_curved) {
    out.reason = "not positively curved";
    return out;
  }
  if (report.min_degree < 3) {
    out.reason = "minimum degree below 3";
    return out;
  }
  if (rot == nullptr) {
    out.reason = "no embedding supplied";
    return out;
  }
  auto faces = trace_faces(g, *rot);
  if (!validate_embedding(g, faces).sphere()) {
    out.reason = "embedding is not spherical";
    return out;
  }
  if (report.max_degree <= kPlanarDegreeLimit) {
    out.status = AuditStatus::passed;
    out.reason = "max degree " + std::to_string(report.max_degree) + " <= 17";
    return out;
  }
  out.status = AuditStatus::violated;
  out.reason = "COUNTEREXAMPLE CANDIDATE: positively curved spherical graph with max degree " +
               std::to_string(report.max_degree);
  out.counterexample = nlohmann::ordered_json{{"kind", "counterexample-candidate"},
                                              {"rotation", write_rotation(g, *rot)},
                                              {"report", to_json(report, g)}};
  return out;
}

}  // namespace lly
