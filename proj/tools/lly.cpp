// lly: generate graphs, compute curvature, solve transport, run checks.
//
// Exit codes: 0 success, 1 a check failed (or an internal consistency error),
// 2 bad input or usage.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lly/lly.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input = "-";
  std::string format = "auto";
  std::string mode = "lly";
  std::string alpha;
  std::string checks;
  std::uint64_t seed = 0;
  std::string out;
  std::string output_format;
  unsigned jobs = 0;
  std::string family;
  std::size_t n = 0;
  std::size_t max_degree = 6;
  lly::VertexId x = -1;
  lly::VertexId y = -1;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

// A rotation file is recognized by the ':' after the first vertex id.
lly::InputFormat detect_format(const std::string& text, const std::string& requested) {
  if (requested == "edgelist") return lly::InputFormat::edgelist;
  if (requested == "rotation") return lly::InputFormat::rotation;
  if (requested != "auto") throw InputError("unknown format '" + requested + "'");
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return line.find(':') == std::string::npos ? lly::InputFormat::edgelist : lly::InputFormat::rotation;
  }
  return lly::InputFormat::edgelist;
}

lly::ParsedGraph load(const Config& cfg) {
  const std::string text = read_input(cfg.input);
  return lly::parse_graph(text, detect_format(text, cfg.format));
}

void emit(const Config& cfg, const std::string& body) {
  if (cfg.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw InputError("cannot write " + cfg.out);
  out << body;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << body;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_generate(const Config& cfg) {
  auto fam = lly::make_family(cfg.family, cfg.n, cfg.seed, cfg.max_degree);
  const bool want_edges = cfg.format == "edgelist" || !fam.rotation;
  if (cfg.out.empty()) {
    std::cout << (want_edges ? lly::write_edgelist(fam.graph) : lly::write_rotation(fam.graph, *fam.rotation));
    return 0;
  }
  write_file(cfg.out + ".edges", lly::write_edgelist(fam.graph));
  if (fam.rotation) write_file(cfg.out + ".rot", lly::write_rotation(fam.graph, *fam.rotation));
  return 0;
}

int cmd_curvature(const Config& cfg) {
  auto parsed = load(cfg);
  lly::ReportOptions opt;
  opt.mode = lly::parse_mode(cfg.mode);
  opt.jobs = cfg.jobs;
  if (opt.mode == lly::CurvatureMode::alpha) {
    if (cfg.alpha.empty()) throw InputError("--mode alpha needs --alpha");
    opt.alpha = lly::parse_rational(cfg.alpha);
  } else if (!cfg.alpha.empty()) {
    throw InputError("--alpha is only meaningful with --mode alpha");
  }
  if (opt.mode == lly::CurvatureMode::comb && !parsed.rotation) {
    throw InputError("--mode comb needs rotation input");
  }
  auto report = lly::curvature_report(parsed.graph, parsed.rotation ? &*parsed.rotation : nullptr, opt);
  const std::string fmt = cfg.output_format.empty() ? "json" : cfg.output_format;
  if (fmt == "csv") {
    emit(cfg, lly::to_csv(report, parsed.graph));
  } else if (fmt == "json") {
    emit(cfg, lly::to_json(report, parsed.graph).dump(2) + "\n");
  } else {
    throw InputError("curvature output format must be json or csv");
  }
  return 0;
}

int cmd_transport(const Config& cfg) {
  auto parsed = load(cfg);
  const auto& g = parsed.graph;
  auto x = g.find(cfg.x);
  auto y = g.find(cfg.y);
  if (!x) throw InputError("vertex " + std::to_string(cfg.x) + " is not in the graph");
  if (!y) throw InputError("vertex " + std::to_string(cfg.y) + " is not in the graph");
  const lly::Rational alpha = cfg.alpha.empty() ? lly::Rational(0) : lly::parse_rational(cfg.alpha);
  auto m1 = lly::lazy_measure(g, *x, alpha);
  auto m2 = lly::lazy_measure(g, *y, alpha);
  auto sol = lly::solve_transport(g, m1, m2);
  auto check = lly::verify_duality(sol.plan, sol.potential, g);

  const std::string fmt = cfg.output_format.empty() ? "text" : cfg.output_format;
  std::ostringstream out;
  if (fmt == "json") {
    nlohmann::ordered_json j;
    j["x"] = cfg.x;
    j["y"] = cfg.y;
    j["alpha"] = lly::to_string(alpha);
    j["distance"] = lly::to_string(sol.distance);
    auto plan = nlohmann::ordered_json::array();
    for (const auto& e : sol.plan.entries) {
      plan.push_back({{"from", g.label(e.from)}, {"to", g.label(e.to)}, {"mass", lly::to_string(e.mass)}});
    }
    j["plan"] = std::move(plan);
    auto pot = nlohmann::ordered_json::object();
    for (const auto& [v, val] : sol.potential.value) pot[std::to_string(g.label(v))] = lly::to_string(val);
    j["potential"] = std::move(pot);
    j["duality"] = {{"ok", check.ok}, {"primal", lly::to_string(check.primal)}, {"dual", lly::to_string(check.dual)}};
    out << j.dump(2) << '\n';
  } else if (fmt == "text") {
    out << "W = " << lly::to_string(sol.distance) << '\n';
    out << "plan:\n";
    for (const auto& e : sol.plan.entries) {
      out << "  " << g.label(e.from) << " -> " << g.label(e.to) << " : " << lly::to_string(e.mass) << '\n';
    }
    out << "potential:\n";
    for (const auto& [v, val] : sol.potential.value) out << "  " << g.label(v) << " : " << lly::to_string(val) << '\n';
    out << "duality: primal " << lly::to_string(check.primal) << ", dual " << lly::to_string(check.dual)
        << (check.ok ? ", gap 0" : ", FAILED") << '\n';
  } else {
    throw InputError("transport output format must be text or json");
  }
  emit(cfg, out.str());
  return check.ok ? 0 : kExitFail;
}

int cmd_verify(const Config& cfg) {
  auto parsed = load(cfg);
  lly::VerifyOptions opt;
  opt.checks = split_commas(cfg.checks);
  for (auto& name : opt.checks) {
    name = lly::canonical_check(name);
    if (std::ranges::find(lly::all_checks(), name) == lly::all_checks().end()) {
      throw InputError("unknown check '" + name + "'");
    }
  }
  opt.seed = cfg.seed;
  opt.jobs = cfg.jobs;
  auto report = lly::run_checks(parsed.graph, parsed.rotation ? &*parsed.rotation : nullptr, opt);

  const std::string fmt = cfg.output_format.empty() ? "text" : cfg.output_format;
  if (fmt == "json") {
    emit(cfg, lly::to_json(report).dump(2) + "\n");
  } else if (fmt == "text") {
    std::ostringstream out;
    for (const auto& c : report.checks) {
      out << (c.passed ? (c.applicable ? "PASS " : "SKIP ") : "FAIL ") << c.name << ": " << c.detail << '\n';
      if (!c.passed && c.data.contains("instances")) {
        for (const auto& inst : c.data["instances"]) out << "  " << inst.dump() << '\n';
      }
      if (!c.passed && c.data.contains("counterexample")) out << "  " << c.data["counterexample"].dump() << '\n';
    }
    emit(cfg, out.str());
  } else {
    throw InputError("verify output format must be text or json");
  }
  return report.passed() ? 0 : kExitFail;
}

void add_input_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--input,-i", cfg.input, "graph file, '-' for stdin")->capture_default_str();
  cmd->add_option("--format", cfg.format, "edgelist, rotation, or auto")
      ->check(CLI::IsMember({"auto", "edgelist", "rotation"}))
      ->capture_default_str();
  cmd->add_option("--jobs,-j", cfg.jobs, "worker threads, 0 = all cores")->capture_default_str();
  cmd->add_option("--out,-o", cfg.out, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lin-Lu-Yau and combinatorial curvature of graphs"};
  app.require_subcommand(1);
  Config cfg;

  auto* gen = app.add_subcommand("generate", "emit a named graph family");
  gen->add_option("--family", cfg.family,
                  "figure1, prism, antiprism, cycle, complete, hypercube, wheel, icosahedron, "
                  "star-with-pendants, apex-wheel, random")
      ->required();
  gen->add_option("--n", cfg.n, "size parameter");
  gen->add_option("--seed", cfg.seed, "seed for the random family");
  gen->add_option("--max-degree", cfg.max_degree, "degree cap for the random family")->capture_default_str();
  gen->add_option("--format", cfg.format, "stdout format when --out is absent")
      ->check(CLI::IsMember({"auto", "edgelist", "rotation"}));
  gen->add_option("--out,-o", cfg.out, "write PREFIX.edges and PREFIX.rot");

  auto* curv = app.add_subcommand("curvature", "curvature of every edge (and vertex in comb mode)");
  add_input_options(curv, cfg);
  curv->add_option("--mode", cfg.mode, "lly, alpha, comb, or zero")
      ->check(CLI::IsMember({"lly", "alpha", "comb", "zero"}))
      ->capture_default_str();
  curv->add_option("--alpha", cfg.alpha, "laziness as p/q or exact decimal");
  curv->add_option("--output-format", cfg.output_format, "json or csv");

  auto* trans = app.add_subcommand("transport", "optimal transport between two lazy walks");
  add_input_options(trans, cfg);
  trans->add_option("--x,-x", cfg.x, "first vertex")->required();
  trans->add_option("--y,-y", cfg.y, "second vertex")->required();
  trans->add_option("--alpha", cfg.alpha, "laziness as p/q or exact decimal (default 0)");
  trans->add_option("--output-format", cfg.output_format, "text or json");

  auto* ver = app.add_subcommand("verify", "run the invariant checks");
  add_input_options(ver, cfg);
  ver->add_option("--checks", cfg.checks, "comma list (default all)");
  ver->add_option("--seed", cfg.seed, "seed for sampled checks")->capture_default_str();
  ver->add_option("--output-format", cfg.output_format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*gen) return cmd_generate(cfg);
    if (*curv) return cmd_curvature(cfg);
    if (*trans) return cmd_transport(cfg);
    if (*ver) return cmd_verify(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
