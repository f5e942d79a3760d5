// nccert: invariants, verification bundles and representation search from the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "nccert/nccert.hpp"

namespace {

using namespace nccert;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string subject;
  std::string kind;  // export only
  double tol = kDefaultThetaTol;
  std::uint64_t seed = 0;
  std::uint64_t shots = 100000;
  int restarts = 50;
  int dim = 6;
  int budget = 20;
  std::string format = "human";
  std::string out;
  std::string rep_file;
  std::string state_file;
  bool shots_given = false;
};

// ---------------------------------------------------------------------------
// Report rendering.

struct Real {
  double v;
};
using Value = std::variant<bool, long long, Real, Rational, std::string>;

std::string fixed7(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7f", x);
  std::string s = buf;
  if (s == "-0.0000000") s = "0.0000000";
  return s;
}

std::string general(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

std::string render(const Value& v) {
  struct {
    std::string operator()(bool b) const { return b ? "TRUE" : "FALSE"; }
    std::string operator()(long long i) const { return std::to_string(i); }
    std::string operator()(Real r) const { return fixed7(r.v); }
    std::string operator()(const Rational& r) const { return to_string(r); }
    std::string operator()(const std::string& s) const { return s; }
  } visit;
  return std::visit(visit, v);
}

nlohmann::ordered_json to_json(const Value& v) {
  if (auto* b = std::get_if<bool>(&v)) return *b;
  if (auto* i = std::get_if<long long>(&v)) return *i;
  if (auto* r = std::get_if<Real>(&v)) return std::stod(fixed7(r->v));
  return render(v);
}

class Report {
 public:
  explicit Report(const RunConfig& cfg) : cfg_(cfg) {}

  void add(std::string key, Value v) { rows_.emplace_back(std::move(key), std::move(v)); }
  void add(std::string key, bool v) { add(std::move(key), Value{v}); }
  void add(std::string key, int v) { add(std::move(key), Value{static_cast<long long>(v)}); }
  void add(std::string key, std::size_t v) { add(std::move(key), Value{static_cast<long long>(v)}); }
  void add(std::string key, const char* v) { add(std::move(key), Value{std::string(v)}); }
  void real(std::string key, double v) { add(std::move(key), Value{Real{v}}); }

  void print(std::ostream& out) const {
    if (cfg_.format == "json") {
      nlohmann::ordered_json j;
      j["command"] = cfg_.command;
      j["subject"] = cfg_.subject;
      j["config"] = {{"tol", cfg_.tol}, {"seed", cfg_.seed}, {"shots", cfg_.shots}, {"restarts", cfg_.restarts}};
      auto& res = j["results"] = nlohmann::ordered_json::object();
      for (const auto& [k, v] : rows_) res[k] = to_json(v);
      out << j.dump(2) << '\n';
      return;
    }
    out << "# nccert " << cfg_.command << ' ' << cfg_.subject << '\n';
    out << "# tol=" << general(cfg_.tol) << " seed=" << cfg_.seed << " shots=" << cfg_.shots
        << " restarts=" << cfg_.restarts << '\n';
    std::size_t width = 0;
    for (const auto& r : rows_) width = std::max(width, r.first.size());
    for (const auto& [k, v] : rows_) {
      if (cfg_.format == "tsv")
        out << k << '\t' << render(v) << '\n';
      else
        out << k << std::string(width + 2 - k.size(), ' ') << render(v) << '\n';
    }
  }

 private:
  const RunConfig& cfg_;
  std::vector<std::pair<std::string, Value>> rows_;
};

std::string set_string(VertexSet s) {
  std::ostringstream o;
  o << s;
  return o.str();
}

std::string cover_string(const CliqueCover& c) {
  std::string s;
  for (auto v : c) s += (s.empty() ? "" : " ") + set_string(v);
  return s;
}

// ---------------------------------------------------------------------------
// Subject resolution: short ids for bundled assets, otherwise a file path.

template <class F>
auto read_file(const std::string& path, F parse) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return parse(in);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

bool looks_like_file(const std::string& s) { return std::filesystem::exists(s); }

Graph resolve_graph(const std::string& id) {
  static const std::regex cycle("c([0-9]+)"), complete("k([0-9]+)");
  std::smatch m;
  try {
    if (std::regex_match(id, m, cycle)) return cycle_graph(std::stoi(m[1]));
    if (std::regex_match(id, m, complete)) return complete_graph(std::stoi(m[1]));
  } catch (const std::exception& e) {
    throw InputError("bad graph id '" + id + "': " + e.what());
  }
  if (id == "petersen") return petersen_graph();
  if (id == "j52") return johnson_5_2_graph();
  if (id == "twin") return inequality_graph(twin()).graph;
  if (id == "kcbs") return inequality_graph(kcbs()).graph;
  if (looks_like_file(id)) return read_file(id, [](std::istream& in) { return read_graph(in); });
  throw InputError("unknown graph id '" + id + "' (use c<N>, k<N>, petersen, j52, twin, kcbs or a file)");
}

Inequality resolve_inequality(const std::string& id) {
  if (id == "twin") return twin();
  if (id == "kcbs") return kcbs();
  if (looks_like_file(id))
    return read_file(id, [&](std::istream& in) {
      return read_inequality(in, std::filesystem::path(id).stem().string());
    });
  throw InputError("unknown inequality id '" + id + "' (use twin, kcbs or a file)");
}

struct BundledRep {
  std::string name;
  OrthoRep rep;
  StateVector state;
};

std::optional<BundledRep> bundled_rep(const std::string& id) {
  if (id == "twin" || id == "twin-d6") {
    auto g = inequality_graph(twin()).graph;
    return BundledRep{"twin-d6", twin_rep_d6(g), twin_state_d6()};
  }
  if (id == "kcbs" || id == "kcbs-d3") return BundledRep{"kcbs-d3", kcbs_rep_d3(cycle_graph(5)), kcbs_state_d3()};
  return std::nullopt;
}

/// Names of bundled graphs isomorphic to g.
std::string isomorphism_names(const Graph& g) {
  std::vector<std::pair<std::string, Graph>> named{
      {"c" + std::to_string(g.order()), g.order() >= 3 ? cycle_graph(g.order()) : complete_graph(g.order())},
      {"k" + std::to_string(g.order()), complete_graph(g.order())},
      {"petersen", petersen_graph()},
      {"j52", johnson_5_2_graph()},
      {"complement(petersen)", complement(petersen_graph())},
  };
  std::string s;
  for (const auto& [name, h] : named)
    if (h.order() == g.order() && h.edge_count() == g.edge_count() && is_isomorphic(g, h))
      s += (s.empty() ? "" : ",") + name;
  return s.empty() ? "none" : s;
}

// ---------------------------------------------------------------------------
// Commands.

void graph_invariants(Report& r, const Graph& g, const RunConfig& cfg, const std::string& prefix) {
  const auto alpha = independence_number(g);
  const auto theta = lovasz_theta(g, cfg.tol);
  const auto packing = fractional_packing_number(g);
  const auto cover = edge_clique_cover_number(g, cfg.budget);

  r.add(prefix + "alpha", alpha.number);
  r.add(prefix + "alpha.witness", set_string(alpha.witness));
  r.real(prefix + "theta", theta.value);
  r.add(prefix + "theta.converged", theta.converged);
  r.add(prefix + "alpha_star", packing.value);
  if (cover.number) {
    r.add(prefix + "theta_prime", *cover.number);
    r.add(prefix + "theta_prime.cover", cover_string(cover.cover));
  } else {
    r.add(prefix + "theta_prime", "> " + std::to_string(cover.budget) + " (budget exhausted)");
  }
  const double astar = to_double(packing.value);
  const bool full = alpha.number < theta.value - cfg.tol && std::abs(theta.value - astar) <= cfg.tol;
  r.add(prefix + "fully_contextual_candidate", full);
}

int cmd_invariants(const RunConfig& cfg, std::ostream& out) {
  const Graph g = resolve_graph(cfg.subject);
  Report r(cfg);
  r.add("vertices", g.order());
  r.add("edges", g.edge_count());
  graph_invariants(r, g, cfg, "");
  r.print(out);
  return kExitOk;
}

const char* verdict(bool ok) { return ok ? "ok" : "MISMATCH"; }

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Inequality q = resolve_inequality(cfg.subject);
  Report r(cfg);
  bool mismatch = false;

  const auto ig = inequality_graph(q);
  r.add("inequality", q.name);
  r.add("tests", q.n_tests);
  r.add("contexts", q.contexts.size());
  r.add("contexts.sets", cover_string(ig.cover));
  r.add("reduction_exact", ig.reduction_exact);
  r.add("graph.vertices", ig.graph.order());
  r.add("graph.edges", ig.graph.edge_count());
  r.add("graph.isomorphic_to", isomorphism_names(ig.graph));
  graph_invariants(r, ig.graph, cfg, "graph.");

  const auto alpha = independence_number(ig.graph).number;
  const auto theta = lovasz_theta(ig.graph, cfg.tol).value;
  const auto astar = fractional_packing_number(ig.graph).value;

  const auto nchv = nchv_max(q, VertexModel::all_assignments);
  const auto nchv_ex = nchv_max(q, VertexModel::exclusive);
  r.add("nchv.max", nchv.value);
  r.add("nchv.witness", nchv.witness.str());
  r.add("nchv.max_exclusive", nchv_ex.value);
  r.add("nchv.equals_alpha", nchv.value == alpha);
  if (q.bounds && q.bounds->nchv.exact) {
    const bool ok = *q.bounds->nchv.exact == nchv.value;
    mismatch |= !ok;
    r.add("nchv.declared", *q.bounds->nchv.exact);
    r.add("nchv.check", verdict(ok));
  }

  std::optional<BundledRep> rep = bundled_rep(cfg.subject);
  if (!cfg.rep_file.empty() || !cfg.state_file.empty()) {
    if (cfg.rep_file.empty() || cfg.state_file.empty()) throw InputError("--rep and --state must be given together");
    auto orep = read_file(cfg.rep_file, [&](std::istream& in) { return read_ortho_rep(in, ig.graph); });
    auto psi = read_file(cfg.state_file, [](std::istream& in) { return read_state(in); });
    rep = BundledRep{cfg.rep_file, std::move(orep), std::move(psi)};
  }
  if (rep) {
    const auto valid = validate_ortho_rep(rep->rep, 1e-9, false);
    r.add("quantum.rep", rep->name);
    r.add("quantum.rep_dim", rep->rep.dim());
    r.add("quantum.rep_valid", valid.ok);
    if (!valid.ok) throw InputError("representation '" + rep->name + "' is invalid: " + valid.message);
    const auto lhs = inequality_quantum_lhs(q, rep->rep, rep->state);
    r.real("quantum.lhs", lhs.value);
    for (std::size_t c = 0; c < lhs.terms.size(); ++c) r.real("quantum.term." + std::to_string(c), lhs.terms[c]);
    r.real("quantum.theta", theta);
    const bool within_theta = lhs.value <= theta + cfg.tol;
    mismatch |= !within_theta;
    r.add("quantum.check_theta", verdict(within_theta));
    if (q.bounds) {
      const double declared = q.bounds->qm.value;
      const bool ok = lhs.value <= declared + cfg.tol;
      mismatch |= !ok;
      r.real("quantum.declared", declared);
      r.add("quantum.check", verdict(ok));
      r.add("quantum.attains_declared", std::abs(lhs.value - declared) <= cfg.tol);
    }
  } else {
    r.add("quantum.rep", "none");
  }

  r.add("gp.alpha_star", astar);
  if (q.bounds && q.bounds->gp.exact) {
    const bool ok = *q.bounds->gp.exact == astar;
    mismatch |= !ok;
    r.add("gp.declared", *q.bounds->gp.exact);
    r.add("gp.check", verdict(ok));
  }

  if (q.n_tests <= kEnumerationGuard) {
    for (auto model : {VertexModel::all_assignments, VertexModel::exclusive}) {
      const std::string p = std::string("facet.") + to_string(model) + ".";
      try {
        const auto cert = facet_check(q, model);
        r.add(p + "verdict", cert.facet ? "YES" : "NO");
        r.add(p + "bound", cert.bound);
        r.add(p + "polytope_dim", cert.polytope_dim);
        r.add(p + "face_dim", cert.face_dim);
        r.add(p + "vertices", cert.vertex_count);
        r.add(p + "saturating", cert.saturating_count);
        r.add(p + "coordinates", cert.coordinate_count);
      } catch (const std::domain_error& e) {
        mismatch = true;
        r.add(p + "verdict", std::string("MISMATCH: ") + e.what());
      }
    }
  } else {
    r.add("facet", "skipped (more than " + std::to_string(kEnumerationGuard) + " tests)");
  }

  if (cfg.shots_given) {
    if (!rep) throw InputError("Monte Carlo needs a representation (--rep/--state)");
    const auto mc = simulate_sequential(q, rep->rep, rep->state, cfg.shots, cfg.seed);
    r.add("mc.shots", Value{static_cast<long long>(mc.shots)});
    r.add("mc.seed", Value{static_cast<long long>(mc.seed)});
    for (std::size_t c = 0; c < mc.p_exactly_one.size(); ++c) {
      r.real("mc.p_exactly_one." + std::to_string(c), mc.p_exactly_one[c]);
      r.real("mc.std_error." + std::to_string(c), mc.std_error[c]);
    }
    r.real("mc.lhs", mc.lhs);
    r.real("mc.lhs_std_error", mc.lhs_std_error);
  }

  r.add("status", mismatch ? "MISMATCH" : "ok");
  r.print(out);
  return mismatch ? kExitMismatch : kExitOk;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
  const Graph g = resolve_graph(cfg.subject);
  if (cfg.dim < 1) throw InputError("--dim must be >= 1");
  if (cfg.restarts < 1) throw InputError("--restarts must be >= 1");
  const auto res = ortho_rep_search(g, cfg.dim, cfg.restarts, cfg.seed);
  std::size_t accepted = 0;
  for (const auto& o : res.restarts) accepted += o.accepted;

  Report r(cfg);
  r.add("vertices", g.order());
  r.add("dim", cfg.dim);
  r.real("best.value", res.value);
  r.add("best.residual", general(res.residual));
  r.add("best.feasible", res.found_feasible);
  r.add("restarts.accepted", std::to_string(accepted) + "/" + std::to_string(res.restarts.size()));
  r.real("theta", lovasz_theta(g, cfg.tol).value);

  std::string path = cfg.out;
  if (path.empty()) path = std::filesystem::path(cfg.subject).stem().string() + "_d" + std::to_string(cfg.dim) + ".rep";
  if (res.rep && res.state) {
    std::ofstream rep_out(path), state_out(path + ".state");
    if (!rep_out || !state_out) throw InputError("cannot write '" + path + "'");
    write_ortho_rep(rep_out, *res.rep);
    write_state(state_out, *res.state);
    r.add("output.rep", path);
    r.add("output.state", path + ".state");
  }
  r.add("note", "local search: best of restarts, a heuristic lower bound, not a proof of optimality");
  r.print(out);
  return kExitOk;
}

int cmd_export(const RunConfig& cfg, std::ostream& out) {
  if (cfg.kind == "graph") {
    write_graph(out, resolve_graph(cfg.subject));
  } else if (cfg.kind == "inequality") {
    write_inequality(out, resolve_inequality(cfg.subject));
  } else {
    auto rep = bundled_rep(cfg.subject);
    if (!rep) throw InputError("no bundled representation '" + cfg.subject + "' (use twin-d6 or kcbs-d3)");
    if (cfg.kind == "rep")
      write_ortho_rep(out, rep->rep);
    else
      write_state(out, rep->state);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph invariants and verification for noncontextuality inequalities"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "SDP tolerance and comparison slack")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "Base seed for searches and simulation")->capture_default_str();
    sub->add_option("--restarts", cfg.restarts, "Search restarts")->capture_default_str();
    sub->add_option("--format", cfg.format, "Output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"human", "tsv", "json"}));
    sub->add_option("--budget", cfg.budget, "Largest edge clique cover size to try")->capture_default_str();
  };

  auto* inv = app.add_subcommand("invariants", "alpha, theta, alpha*, theta' and the fully contextual flag");
  inv->add_option("graph", cfg.subject, "Graph id (c<N>, k<N>, petersen, j52, twin, kcbs) or file")->required();
  add_common(inv);

  auto* ver = app.add_subcommand("verify", "Full verification bundle for an inequality");
  ver->add_option("inequality", cfg.subject, "Inequality id (twin, kcbs) or file")->required();
  add_common(ver);
  auto* shots = ver->add_option("--shots", cfg.shots, "Monte Carlo shots per context; runs the simulator when given")
                    ->capture_default_str()
                    ->check(CLI::PositiveNumber);
  ver->add_option("--rep", cfg.rep_file, "Representation file for the quantum value");
  ver->add_option("--state", cfg.state_file, "State file for the quantum value");

  auto* srch = app.add_subcommand("search", "Search for an orthogonal representation maximizing sum <v_i|psi>^2");
  srch->add_option("graph", cfg.subject, "Graph id or file")->required();
  add_common(srch);
  srch->add_option("--dim", cfg.dim, "Representation dimension")->capture_default_str();
  srch->add_option("--out", cfg.out, "Representation output path (state goes to <out>.state)");

  auto* exp = app.add_subcommand("export", "Print a bundled asset in its file format");
  exp->add_option("kind", cfg.kind, "graph, inequality, rep or state")
      ->required()
      ->check(CLI::IsMember({"graph", "inequality", "rep", "state"}));
  exp->add_option("id", cfg.subject, "Asset id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }
  cfg.shots_given = shots->count() > 0;

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (inv->parsed()) return cmd_invariants(cfg, std::cout);
    if (ver->parsed()) return cmd_verify(cfg, std::cout);
    if (srch->parsed()) return cmd_search(cfg, std::cout);
    return cmd_export(cfg, std::cout);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
