#pragma once

// Invariant suite run by `lly verify` and the acceptance tests. Each check is
// exact; a check that does not apply to the input (e.g. Gauss-Bonnet without
// an embedding) passes and says why.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lly/curvature.hpp"
#include "lly/embedding.hpp"
#include "lly/parallel.hpp"
#include "lly/report.hpp"
#include "lly/structure.hpp"
#include "lly/transport.hpp"

namespace lly {

struct CheckResult {
  explicit CheckResult(std::string check_name = {}) : name(std::move(check_name)) {}

  std::string name;
  bool applicable = true;
  bool passed = true;
  std::string detail;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
};

struct VerifyOptions {
  std::vector<std::string> checks;  // empty = all
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::size_t pair_check_max_vertices = 64;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::ranges::all_of(checks, [](const CheckResult& c) { return c.passed; });
  }
};

inline const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names = {
      "positivity",  "floor",    "agreement", "duality", "integrality", "concavity", "slope-monotonicity",
      "diameter",    "pair-reduction", "neighborhood",   "gauss-bonnet", "degree-audit"};
  return names;
}

/// Canonical name for `name`; the numbered names used by older scripts map to
/// their descriptive equivalents.
inline std::string canonical_check(const std::string& name) {
  if (name == "lemma3") return "pair-reduction";
  if (name == "lemma4") return "neighborhood";
  return name;
}

/// Laziness values used by the duality and integrality checks.
inline std::vector<Rational> duality_laziness() {
  return {Rational(0), make_rational(1, 3), make_rational(1, 2)};
}

namespace detail {

inline std::string edge_name(const Graph& g, Vertex u, Vertex v) {
  return "(" + std::to_string(g.label(u)) + "," + std::to_string(g.label(v)) + ")";
}

struct AlphaProfile {
  std::map<Rational, Rational> kappa;  // κ_α on the grid k/20
};

/// κ_α at α = k/20, k = 0..20, for one edge.
inline AlphaProfile alpha_profile(const Graph& g, Vertex u, Vertex v) {
  AlphaProfile p;
  for (long k = 0; k <= 20; ++k) {
    Rational a = make_rational(k, 20);
    p.kappa[a] = kappa_alpha(g, u, v, a);
  }
  return p;
}

}  // namespace detail

class Verifier {
 public:
  Verifier(const Graph& g, const RotationSystem* rot, VerifyOptions options)
      : g_(g), rot_(rot), opt_(std::move(options)), edges_(g.edges()) {}

  VerifyReport run() {
    std::vector<std::string> names = opt_.checks.empty() ? all_checks() : opt_.checks;
    VerifyReport out;
    for (const auto& name : names) out.checks.push_back(run_one(canonical_check(name)));
    return out;
  }

  CheckResult run_one(const std::string& name) {
    if (name == "positivity") return positivity();
    if (name == "floor") return floor();
    if (name == "agreement") return agreement();
    if (name == "duality" || name == "integrality") return duality(name);
    if (name == "concavity") return concavity();
    if (name == "slope-monotonicity") return slope();
    if (name == "diameter") return diameter_bound();
    if (name == "pair-reduction") return pair_reduction();
    if (name == "neighborhood") return neighborhood();
    if (name == "gauss-bonnet") return gauss_bonnet();
    if (name == "degree-audit") return audit();
    throw std::invalid_argument("unknown check '" + name + "'");
  }

  const CurvatureReport& report() {
    if (!report_) report_ = curvature_report(g_, nullptr, {CurvatureMode::lly, Rational(0), opt_.jobs});
    return *report_;
  }

 private:
  static CheckResult not_applicable(std::string name, std::string why) {
    CheckResult c{std::move(name)};
    c.applicable = false;
    c.detail = "not applicable: " + why;
    return c;
  }

  void fail(CheckResult& c, const std::string& what) {
    if (c.passed) c.detail = what;
    c.passed = false;
    c.data["failures"].push_back(what);
  }

  CheckResult positivity() {
    CheckResult c{"positivity"};
    const auto& r = report();
    for (const auto& e : r.edges) {
      if (e.kappa <= 0) fail(c, "kappa" + detail::edge_name(g_, e.u, e.v) + " = " + to_string(e.kappa));
    }
    if (c.passed) c.detail = "every edge kappa > 0, min " + to_string(r.min_kappa);
    return c;
  }

  CheckResult floor() {
    const auto& r = report();
    if (!r.positively_curved) return not_applicable("floor", "graph is not positively curved");
    CheckResult c{"floor"};
    const long delta = static_cast<long>(r.max_degree);
    const Rational global = delta >= 2 ? make_rational(1, delta * (delta - 1)) : Rational(0);
    for (const auto& e : r.edges) {
      const long dx = static_cast<long>(g_.degree(e.u)), dy = static_cast<long>(g_.degree(e.v));
      if (e.kappa < make_rational(1, dx * dy)) {
        fail(c, "kappa" + detail::edge_name(g_, e.u, e.v) + " = " + to_string(e.kappa) + " < 1/(" +
                    std::to_string(dx) + "*" + std::to_string(dy) + ")");
      }
      if (e.kappa < global) {
        fail(c, "kappa" + detail::edge_name(g_, e.u, e.v) + " below 1/(D(D-1)) = " + to_string(global));
      }
    }
    if (c.passed) c.detail = "min kappa " + to_string(r.min_kappa) + " >= 1/(D(D-1)) = " + to_string(global);
    return c;
  }

  CheckResult agreement() {
    CheckResult c{"agreement"};
    const auto& r = report();
    auto slopes = parallel_map(edges_.size(), opt_.jobs, [&](std::size_t i) {
      return kappa_lly_slope(g_, edges_[i].first, edges_[i].second);
    });
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (slopes[i] != r.edges[i].kappa) {
        fail(c, "edge " + detail::edge_name(g_, edges_[i].first, edges_[i].second) + ": LP " +
                    to_string(r.edges[i].kappa) + " vs slope " + to_string(slopes[i]));
      }
    }
    if (c.passed) c.detail = std::to_string(edges_.size()) + " edges agree exactly";
    return c;
  }

  CheckResult duality(const std::string& name) {
    CheckResult c{name};
    struct Outcome {
      std::vector<std::string> gaps;
      std::vector<std::string> fractional;
    };
    auto outcomes = parallel_map(edges_.size(), opt_.jobs, [&](std::size_t i) {
      auto [u, v] = edges_[i];
      Outcome o;
      auto alphas = duality_laziness();
      alphas.push_back(slope_laziness(g_, u, v));
      for (const auto& a : alphas) {
        auto sol = solve_transport(g_, lazy_measure(g_, u, a), lazy_measure(g_, v, a));
        auto check = verify_duality(sol.plan, sol.potential, g_);
        const std::string where = detail::edge_name(g_, u, v) + " alpha=" + to_string(a);
        if (!check.ok) o.gaps.push_back(where + ": " + check.violations.front());
        if (!sol.potential.integral()) o.fractional.push_back(where);
      }
      return o;
    });
    std::size_t instances = 0;
    for (const auto& o : outcomes) {
      instances += duality_laziness().size() + 1;
      for (const auto& s : (name == "duality" ? o.gaps : o.fractional)) fail(c, s);
    }
    if (c.passed) {
      c.detail = std::to_string(instances) +
                 (name == "duality" ? " transport instances with zero duality gap"
                                    : " transport instances with integer potentials");
    }
    return c;
  }

  const std::vector<detail::AlphaProfile>& profiles() {
    if (!profiles_) {
      profiles_ = parallel_map(edges_.size(), opt_.jobs, [&](std::size_t i) {
        return detail::alpha_profile(g_, edges_[i].first, edges_[i].second);
      });
    }
    return *profiles_;
  }

  CheckResult concavity() {
    CheckResult c{"concavity"};
    const auto& prof = profiles();
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto& k = prof[e].kappa;
      const std::string where = detail::edge_name(g_, edges_[e].first, edges_[e].second);
      for (long i = 0; i <= 10; ++i) {
        for (long j = i + 1; j <= 10; ++j) {
          const Rational mid = make_rational(i + j, 20);
          const Rational avg = (k.at(make_rational(i, 10)) + k.at(make_rational(j, 10))) / 2;
          if (k.at(mid) < avg) fail(c, where + " midpoint " + to_string(mid) + " below chord");
        }
      }
      for (const auto& [a, val] : k) {
        if (val > (Rational(1) - a) * 2) fail(c, where + " kappa_alpha above 2(1-alpha) at " + to_string(a));
      }
    }
    if (c.passed) c.detail = "midpoint concavity and upper bound hold on the alpha grid for every edge";
    return c;
  }

  CheckResult slope() {
    CheckResult c{"slope-monotonicity"};
    const auto& prof = profiles();
    const auto& r = report();
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const std::string where = detail::edge_name(g_, edges_[e].first, edges_[e].second);
      std::optional<Rational> previous;
      for (long i = 0; i < 10; ++i) {
        const Rational a = make_rational(i, 10);
        const Rational s = prof[e].kappa.at(a) / (Rational(1) - a);
        if (previous && s < *previous) fail(c, where + " slope decreases at alpha=" + to_string(a));
        if (s > r.edges[e].kappa) fail(c, where + " slope exceeds kappa_LLY at alpha=" + to_string(a));
        previous = s;
      }
    }
    if (c.passed) c.detail = "kappa_alpha/(1-alpha) nondecreasing and <= kappa_LLY for every edge";
    return c;
  }

  CheckResult diameter_bound() {
    const auto& r = report();
    if (!r.positively_curved) return not_applicable("diameter", "graph is not positively curved");
    CheckResult c{"diameter"};
    const Rational bound = Rational(2) / r.min_kappa;
    c.data["diameter"] = r.diameter;
    c.data["bound"] = to_string(bound);
    if (Rational(r.diameter) > bound) {
      fail(c, "diameter " + std::to_string(r.diameter) + " exceeds 2/min kappa = " + to_string(bound));
    } else {
      c.detail = "diameter " + std::to_string(r.diameter) + " <= " + to_string(bound);
    }
    return c;
  }

  CheckResult pair_reduction() {
    const std::size_t n = g_.vertex_count();
    if (n > opt_.pair_check_max_vertices) {
      return not_applicable("pair-reduction", "more than " + std::to_string(opt_.pair_check_max_vertices) + " vertices");
    }
    CheckResult c{"pair-reduction"};
    const auto& r = report();
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    auto values = parallel_map(pairs.size(), opt_.jobs,
                               [&](std::size_t i) { return kappa_lly(g_, pairs[i].first, pairs[i].second); });
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (values[i] < r.min_kappa) {
        fail(c, "pair " + detail::edge_name(g_, pairs[i].first, pairs[i].second) + " has kappa " +
                    to_string(values[i]) + " below the edge minimum " + to_string(r.min_kappa));
      }
    }
    if (c.passed) c.detail = std::to_string(pairs.size()) + " pairs >= edge minimum " + to_string(r.min_kappa);
    return c;
  }

  CheckResult neighborhood() {
    CheckResult c{"neighborhood"};
    SweepOptions so;
    so.seed = opt_.seed;
    so.jobs = opt_.jobs;
    auto failing = neighborhood_sweep(g_, so);
    for (const auto& f : failing) {
      const Rational kappa = kappa_lly(g_, f.instance.x, f.instance.y);
      auto j = to_json(f, g_);
      j["kappa_lly"] = to_string(kappa);
      j["kappa_confirmed_nonpositive"] = kappa <= f.witness.nabla && kappa <= 0;
      c.data["instances"].push_back(std::move(j));
      fail(c, "inequality fails on " + detail::edge_name(g_, f.instance.x, f.instance.y) +
                  "; witness gives nabla = " + to_string(f.witness.nabla) + ", kappa = " + to_string(kappa));
    }
    if (c.passed) c.detail = "no failing instance";
    return c;
  }

  CheckResult gauss_bonnet() {
    if (rot_ == nullptr) return not_applicable("gauss-bonnet", "no rotation system");
    auto faces = trace_faces(g_, *rot_);
    auto emb = validate_embedding(g_, faces);
    if (!emb.sphere()) {
      return not_applicable("gauss-bonnet", "Euler characteristic " + std::to_string(emb.euler_characteristic));
    }
    CheckResult c{"gauss-bonnet"};
    Rational total(0);
    for (const auto& phi : combinatorial_curvatures(g_, faces)) total += phi;
    c.data["sum_phi"] = to_string(total);
    if (total != 2) {
      fail(c, "sum of phi is " + to_string(total));
    } else {
      c.detail = "sum of phi = 2";
    }
    return c;
  }

  CheckResult audit() {
    auto result = degree_audit(g_, rot_, report());
    if (result.status == AuditStatus::not_applicable) return not_applicable("degree-audit", result.reason);
    CheckResult c{"degree-audit"};
    if (result.status == AuditStatus::violated) {
      fail(c, result.reason);
      c.data["counterexample"] = *result.counterexample;
    } else {
      c.detail = result.reason;
    }
    return c;
  }

  const Graph& g_;
  const RotationSystem* rot_;
  VerifyOptions opt_;
  std::vector<Edge> edges_;
  std::optional<CurvatureReport> report_;
  std::optional<std::vector<detail::AlphaProfile>> profiles_;
};

inline VerifyReport run_checks(const Graph& g, const RotationSystem* rot, const VerifyOptions& options = {}) {
  return Verifier(g, rot, options).run();
}

inline nlohmann::ordered_json to_json(const VerifyReport& report) {
  nlohmann::ordered_json j;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    arr.push_back({{"name", c.name},
                   {"applicable", c.applicable},
                   {"passed", c.passed},
                   {"detail", c.detail},
                   {"data", c.data}});
  }
  j["checks"] = std::move(arr);
  j["passed"] = report.passed();
  return j;
}

}  // namespace lly
