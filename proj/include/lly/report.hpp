#pragma once

// Whole-graph curvature reports and their JSON / CSV serialization.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lly/curvature.hpp"
#include "lly/embedding.hpp"
#include "lly/graph.hpp"
#include "lly/parallel.hpp"
#include "lly/rational.hpp"

namespace lly {

enum class CurvatureMode { lly, alpha, comb, zero };

inline std::string to_string(CurvatureMode mode) {
  switch (mode) {
    case CurvatureMode::lly: return "lly";
    case CurvatureMode::alpha: return "alpha";
    case CurvatureMode::comb: return "comb";
    case CurvatureMode::zero: return "zero";
  }
  return "lly";
}

inline CurvatureMode parse_mode(const std::string& text) {
  if (text == "lly") return CurvatureMode::lly;
  if (text == "alpha") return CurvatureMode::alpha;
  if (text == "comb") return CurvatureMode::comb;
  if (text == "zero") return CurvatureMode::zero;
  throw std::invalid_argument("unknown mode '" + text + "'");
}

struct ReportOptions {
  CurvatureMode mode = CurvatureMode::lly;
  Rational alpha{0};  // used by CurvatureMode::alpha
  unsigned jobs = 1;
};

struct EdgeCurvature {
  Vertex u;
  Vertex v;
  Rational kappa;  // κ_LLY, or κ_α in alpha mode
  std::optional<Rational> kappa_zero;
};

struct VertexCurvature {
  Vertex v;
  Rational phi;
};

/// In alpha mode `kappa`, `min_kappa` and `positively_curved` refer to κ_α.
struct CurvatureReport {
  CurvatureMode mode = CurvatureMode::lly;
  std::optional<Rational> alpha;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  int diameter = 0;
  std::vector<EdgeCurvature> edges;
  std::vector<VertexCurvature> vertices;  // empty unless φ was computed
  Rational min_kappa;
  bool positively_curved = false;
  std::optional<Rational> min_phi;
};

/// Evaluates every edge (and, in comb mode, every vertex). Comb mode needs a
/// spherical rotation system and also reports κ_LLY on edges.
inline CurvatureReport curvature_report(const Graph& g, const RotationSystem* rot,
                                        const ReportOptions& options = {}) {
  CurvatureReport r;
  r.mode = options.mode;
  r.vertex_count = g.vertex_count();
  r.edge_count = g.edge_count();
  r.max_degree = g.max_degree();
  r.min_degree = g.min_degree();
  r.diameter = diameter(g);
  if (options.mode == CurvatureMode::alpha) r.alpha = options.alpha;

  const auto edges = g.edges();
  r.edges = parallel_map(edges.size(), options.jobs, [&](std::size_t i) {
    auto [u, v] = edges[i];
    EdgeCurvature e{u, v, Rational(0), std::nullopt};
    if (options.mode == CurvatureMode::alpha) {
      e.kappa = kappa_alpha(g, u, v, options.alpha);
    } else {
      e.kappa = kappa_lly(g, u, v);
    }
    if (options.mode == CurvatureMode::zero) e.kappa_zero = kappa_zero(g, u, v);
    return e;
  });

  r.positively_curved = !r.edges.empty();
  for (std::size_t i = 0; i < r.edges.size(); ++i) {
    if (i == 0 || r.edges[i].kappa < r.min_kappa) r.min_kappa = r.edges[i].kappa;
    if (r.edges[i].kappa <= 0) r.positively_curved = false;
  }

  if (options.mode == CurvatureMode::comb) {
    if (rot == nullptr) throw EmbeddingError("combinatorial curvature needs a rotation system");
    auto faces = trace_faces(g, *rot);
    auto phi = combinatorial_curvatures(g, faces);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      r.vertices.push_back({v, phi[v]});
      if (!r.min_phi || phi[v] < *r.min_phi) r.min_phi = phi[v];
    }
  }
  return r;
}

inline nlohmann::ordered_json to_json(const CurvatureReport& r, const Graph& g) {
  nlohmann::ordered_json j;
  j["mode"] = to_string(r.mode);
  if (r.alpha) j["alpha"] = to_string(*r.alpha);
  j["graph"] = {{"vertex_count", r.vertex_count},
                {"edge_count", r.edge_count},
                {"max_degree", r.max_degree},
                {"min_degree", r.min_degree},
                {"diameter", r.diameter}};
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : r.edges) {
    nlohmann::ordered_json row = {{"u", g.label(e.u)}, {"v", g.label(e.v)}, {"kappa", to_string(e.kappa)}};
    if (e.kappa_zero) row["kappa_zero"] = to_string(*e.kappa_zero);
    edges.push_back(std::move(row));
  }
  j["edges"] = std::move(edges);
  if (!r.vertices.empty()) {
    auto vertices = nlohmann::ordered_json::array();
    for (const auto& v : r.vertices) vertices.push_back({{"v", g.label(v.v)}, {"phi", to_string(v.phi)}});
    j["vertices"] = std::move(vertices);
  }
  j["summary"] = {{"min_kappa", to_string(r.min_kappa)}, {"positively_curved", r.positively_curved}};
  if (r.min_phi) {
    j["summary"]["min_phi"] = to_string(*r.min_phi);
    j["summary"]["combinatorially_positive"] = *r.min_phi > 0;
  }
  return j;
}

/// One row per edge: u,v,kappa[,kappa_zero].
inline std::string to_csv(const CurvatureReport& r, const Graph& g) {
  const bool with_zero = r.mode == CurvatureMode::zero;
  std::ostringstream out;
  out << "u,v,kappa" << (with_zero ? ",kappa_zero" : "") << '\n';
  for (const auto& e : r.edges) {
    out << g.label(e.u) << ',' << g.label(e.v) << ',' << to_string(e.kappa);
    if (with_zero) out << ',' << to_string(e.kappa_zero.value_or(Rational(0)));
    out << '\n';
  }
  return out.str();
}

}  // namespace lly
