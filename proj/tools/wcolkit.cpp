// Command-line driver. Exit codes: 0 success / property holds, 1 property
// violated, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "wcolkit/wcolkit.hpp"

using namespace wcolkit;

namespace {

constexpr int kHolds = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;

/// stdout unless a path is given.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error("io", "cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string join(std::span<const Vertex> vs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? sep : "") + std::to_string(vs[i]);
  return out;
}

const char* yes(bool b) { return b ? "yes" : "no"; }

std::string read_text(const std::string& path) {
  auto in = detail::open_input(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

VertexSet parse_id_list(const std::string& text, int n) {
  VertexSet out;
  std::string tok;
  std::stringstream ss(text);
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(detail::parse_vertex(tok, 0, n));
  }
  return normalized(std::move(out));
}

/// "NAME=id,id,..." entries.
Expansion parse_color_assignments(const std::vector<std::string>& items, int n) {
  Expansion e;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw Error("usage", "expected NAME=ids, got '" + item + "'");
    e[item.substr(0, eq)] = parse_id_list(item.substr(eq + 1), n);
  }
  return e;
}

/// One "<A ids> | <B ids>" pair per line.
void read_set_pairs(const std::string& path, std::vector<VertexSet>& A, std::vector<VertexSet>& B) {
  auto in = detail::open_input(path);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto bar = line.find('|');
    if (bar == std::string::npos) detail::format_error(number, "expected '<A ids> | <B ids>'");
    auto side = [&](const std::string& s) {
      VertexSet out;
      std::istringstream ss(s);
      for (std::string tok; ss >> tok;) out.push_back(static_cast<Vertex>(detail::parse_integer(tok, number)));
      return out;
    };
    A.push_back(side(line.substr(0, bar)));
    B.push_back(side(line.substr(bar + 1)));
  }
}

void print_wcol(std::ostream& out, const WcolResult& r) {
  out << "wcol " << r.value << '\n';
  out << "exact " << (r.exact ? 1 : 0) << '\n';
  out << "witness " << r.witness_vertex << '\n';
  out << "order";
  for (Vertex v : r.order.perm()) out << ' ' << v;
  out << '\n';
}

int exit_code_for(const Error& e) {
  static const std::set<std::string> input_errors{
      "format",     "io",           "usage",         "malformed", "invalid-parameters", "invalid-ordering",
      "out-of-range", "syntax", "unbound-variable", "unknown-connective", "empty-set"};
  return input_errors.contains(e.code()) ? kUsage : kViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak coloring numbers, shallow minor models and transductions"};
  app.require_subcommand(1);
  int result = kHolds;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph family member");
  std::vector<std::string> gen_spec;
  std::string gen_out, gen_order_out;
  gen->add_option("spec", gen_spec, "Family spec, e.g. 'kpath 2 15' or 'grid 3x4'")->required();
  gen->add_option("-o,--output", gen_out, "Graph file (default stdout)");
  gen->add_option("--order-out", gen_order_out, "Write the canonical ordering here");
  gen->callback([&] {
    std::string spec;
    for (const auto& s : gen_spec) spec += (spec.empty() ? "" : " ") + s;
    const auto g = gen_family(spec);
    Output out(gen_out);
    out.stream() << "# " << g.label << '\n';
    write_graph(out.stream(), g.graph);
    if (!gen_order_out.empty()) {
      if (!g.canonical) throw Error("usage", "'" + g.label + "' has no canonical order");
      Output order(gen_order_out);
      write_ordering(order.stream(), *g.canonical);
    }
  });

  // wcol
  auto* wcol = app.add_subcommand("wcol", "Weak d-coloring number of a graph");
  std::string wcol_graph, wcol_order;
  int wcol_d = 1;
  bool wcol_exact_flag = false, wcol_heuristic_flag = false;
  std::uint64_t wcol_budget = kDefaultNodeBudget;
  wcol->add_option("graph", wcol_graph)->required();
  wcol->add_option("--d", wcol_d, "Reach distance")->required()->check(CLI::NonNegativeNumber);
  auto* o_order = wcol->add_option("--order", wcol_order, "Evaluate this ordering");
  auto* o_exact = wcol->add_flag("--exact", wcol_exact_flag, "Branch-and-bound minimum over orderings");
  auto* o_heur = wcol->add_flag("--heuristic", wcol_heuristic_flag, "Degeneracy-order heuristic");
  o_order->excludes(o_exact)->excludes(o_heur);
  o_exact->excludes(o_heur);
  wcol->add_option("--budget", wcol_budget, "Node budget for --exact");
  wcol->callback([&] {
    const auto g = load_graph(wcol_graph);
    WcolResult r;
    if (!wcol_order.empty()) {
      r = wcol_of_order(g, load_ordering(wcol_order, g.vertex_count()), wcol_d);
    } else if (wcol_exact_flag) {
      r = wcol_exact(g, wcol_d, wcol_budget);
    } else if (wcol_heuristic_flag) {
      r = wcol_heuristic(g, wcol_d);
    } else {
      throw Error("usage", "one of --order, --exact, --heuristic is required");
    }
    print_wcol(std::cout, r);
  });

  // validate-model
  auto* validate = app.add_subcommand("validate-model", "Check radius, congestion and touching of a model");
  std::string val_graph, val_model;
  validate->add_option("graph", val_graph)->required();
  validate->add_option("model", val_model)->required();
  validate->callback([&] {
    const auto g = load_graph(val_graph);
    const auto m = load_model(val_model, g);
    const auto r = validate_model(m);
    std::cout << "radius " << (r.radius_ok ? "ok" : "FAIL");
    if (r.radius_failure) {
      std::cout << " vertex=" << *r.radius_failure << " radius="
                << (r.failing_radius ? std::to_string(*r.failing_radius) : "inf");
    }
    std::cout << '\n' << "congestion " << (r.congestion_ok ? "ok" : "FAIL");
    if (r.congestion_failure) std::cout << " vertex=" << *r.congestion_failure << " count=" << r.failing_congestion;
    std::cout << '\n' << "touch " << (r.touch_ok ? "ok" : "FAIL");
    if (r.touch_failure) std::cout << " edge=" << r.touch_failure->u << '-' << r.touch_failure->v;
    std::cout << '\n'
              << "observed_congestion " << r.observed_congestion << '\n'
              << "observed_depth " << r.observed_depth << '\n'
              << "valid " << yes(r.valid()) << '\n';
    if (!r.valid()) result = kViolated;
  });

  // pullback
  auto* pullback = app.add_subcommand("pullback", "Pull a host ordering back to the model's H");
  std::string pb_graph, pb_model, pb_order, pb_out;
  pullback->add_option("graph", pb_graph)->required();
  pullback->add_option("model", pb_model)->required();
  pullback->add_option("order", pb_order)->required();
  pullback->add_option("-o,--output", pb_out);
  pullback->callback([&] {
    const auto g = load_graph(pb_graph);
    const auto m = load_model(pb_model, g);
    Output out(pb_out);
    write_ordering(out.stream(), pull_back_order(m, load_ordering(pb_order, g.vertex_count())));
  });

  // check-transfer
  auto* transfer = app.add_subcommand("check-transfer", "Check wcol_d(H) <= k * wcol_{(4k+1)d}(G)");
  std::string tr_graph, tr_model, tr_order;
  int tr_k = 1, tr_d = 1;
  transfer->add_option("graph", tr_graph)->required();
  transfer->add_option("model", tr_model)->required();
  transfer->add_option("order", tr_order)->required();
  transfer->add_option("--k", tr_k)->required()->check(CLI::PositiveNumber);
  transfer->add_option("--d", tr_d)->required()->check(CLI::NonNegativeNumber);
  transfer->callback([&] {
    const auto g = load_graph(tr_graph);
    const auto m = load_model(tr_model, g);
    const auto r = check_transfer_inequality(m, load_ordering(tr_order, g.vertex_count()), tr_k, tr_d);
    std::cout << "lhs " << r.lhs << '\n'
              << "host_wcol " << r.host_value << '\n'
              << "rhs " << r.rhs << '\n'
              << "holds " << yes(r.holds) << '\n'
              << "witness " << r.witness << " reach " << join(r.witness_reach) << '\n'
              << "pulled";
    for (Vertex v : r.pulled.perm()) std::cout << ' ' << v;
    std::cout << '\n' << "max_walk " << r.max_walk_length << " limit " << 4 * tr_k + 1 << '\n';
    for (const auto& w : r.walks)
      std::cout << "walk " << w.edge.u << '-' << w.edge.v << " : " << join(w.path) << '\n';
    std::cout << "walks_ok " << yes(r.walks_ok) << '\n';
    if (!r.ok()) result = kViolated;
  });

  // sigma-rho
  auto* sr = app.add_subcommand("sigma-rho", "Label H-edges with sigma and rho");
  std::string sr_graph, sr_order, sr_edges;
  int sr_d = 1;
  sr->add_option("graph", sr_graph)->required();
  sr->add_option("order", sr_order)->required();
  sr->add_option("edges", sr_edges)->required();
  sr->add_option("--d", sr_d)->required()->check(CLI::NonNegativeNumber);
  sr->callback([&] {
    const auto g = load_graph(sr_graph);
    const auto edges = load_edge_list(sr_edges, g.vertex_count());
    const auto lab = label_edges(g, load_ordering(sr_order, g.vertex_count()), sr_d, edges);
    for (std::size_t i = 0; i < lab.edges.size(); ++i)
      std::cout << lab.edges[i].u << ' ' << lab.edges[i].v << " rho " << lab.rho[i] << " sigma "
                << join(lab.sigma[i]) << '\n';
  });

  // build-model
  auto* bm = app.add_subcommand("build-model", "Build the depth-2d model of H from covers of rho-fibers");
  std::string bm_graph, bm_order, bm_edges, bm_out;
  int bm_d = 1, bm_lambda = 1;
  bool bm_fallback = false;
  bm->add_option("graph", bm_graph)->required();
  bm->add_option("order", bm_order)->required();
  bm->add_option("edges", bm_edges)->required();
  bm->add_option("--d", bm_d)->required()->check(CLI::NonNegativeNumber);
  bm->add_option("--lambda", bm_lambda, "|Lambda| used in the theoretical cover bound")->check(CLI::PositiveNumber);
  bm->add_flag("--fallback", bm_fallback, "Use matching covers when the exact cover budget runs out");
  bm->add_option("-o,--output", bm_out, "Model file (default: printed after the report)");
  bm->callback([&] {
    const auto g = load_graph(bm_graph);
    const auto order = load_ordering(bm_order, g.vertex_count());
    const auto edges = load_edge_list(bm_edges, g.vertex_count());
    CoverOptions options;
    options.fallback_to_matching = bm_fallback;
    const auto run = run_lemma_pipeline(g, order, bm_d, edges, bm_lambda, options);
    const auto& c = run.build.claims;
    std::cout << "s " << c.s << '\n'
              << "t " << run.t << '\n'
              << "max_cover " << c.max_cover << '\n'
              << "theoretical_f " << run.cover_bound << '\n'
              << "observed_congestion " << c.observed_congestion << '\n'
              << "congestion_bound " << c.congestion_bound << '\n'
              << "claim_edges " << (c.edges_ok ? "ok" : "FAIL") << '\n'
              << "claim_radius " << (c.radius_ok ? "ok" : "FAIL") << '\n'
              << "claim_congestion " << (c.congestion_ok ? "ok" : "FAIL") << '\n'
              << "valid " << yes(run.validation.valid()) << '\n';
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      const auto& x = run.covers.cover[static_cast<std::size_t>(w)];
      if (x.empty()) continue;
      std::cout << "X " << w << " : " << join(x) << (run.covers.exact[static_cast<std::size_t>(w)] ? "" : " (matching)")
                << '\n';
    }
    if (bm_out.empty()) {
      write_model(std::cout, run.build.model);
    } else {
      Output out(bm_out);
      write_model(out.stream(), run.build.model);
    }
    if (!run.ok()) result = kViolated;
  });

  // bollobas
  auto* bol = app.add_subcommand("bollobas", "Bollobas-type set-pair bound");
  bol->require_subcommand(1);
  auto* bol_check = bol->add_subcommand("check", "Check a set-pair sequence file");
  std::string bc_file;
  int bc_a = 0, bc_b = 0;
  bol_check->add_option("file", bc_file, "Lines '<A ids> | <B ids>'")->required();
  bol_check->add_option("--a", bc_a)->required()->check(CLI::NonNegativeNumber);
  bol_check->add_option("--b", bc_b)->required()->check(CLI::NonNegativeNumber);
  bol_check->callback([&] {
    std::vector<VertexSet> A, B;
    read_set_pairs(bc_file, A, B);
    const auto v = bollobas_check(A, B, bc_a, bc_b);
    std::cout << "n " << v.n << '\n' << "bound " << v.bound << '\n';
    std::cout << "sizes " << (v.sizes_ok ? "ok" : "FAIL");
    if (v.size_failure) std::cout << " pair=" << *v.size_failure;
    std::cout << '\n' << "disjoint " << (v.disjoint_ok ? "ok" : "FAIL");
    if (v.disjoint_failure) std::cout << " pair=" << *v.disjoint_failure;
    std::cout << '\n' << "cross " << (v.cross_ok ? "ok" : "FAIL");
    if (v.cross_failure) std::cout << " pair=" << v.cross_failure->first << ',' << v.cross_failure->second;
    std::cout << '\n' << "premise " << yes(v.premise()) << '\n' << "conclusion " << yes(v.holds()) << '\n';
    if (!v.holds()) result = kViolated;
  });
  auto* bol_search = bol->add_subcommand("search", "Longest premise-satisfying sequence");
  int bs_u = 4, bs_a = 1, bs_b = 1;
  bol_search->add_option("--universe", bs_u)->required()->check(CLI::Range(0, 16));
  bol_search->add_option("--a", bs_a)->required()->check(CLI::NonNegativeNumber);
  bol_search->add_option("--b", bs_b)->required()->check(CLI::NonNegativeNumber);
  bol_search->callback([&] {
    const auto r = bollobas_extremal(bs_u, bs_a, bs_b);
    const auto bound = bollobas_bound(bs_a, bs_b);
    std::cout << "best " << r.best << '\n' << "bound " << bound << '\n';
    for (std::size_t i = 0; i < r.A.size(); ++i) std::cout << join(r.A[i]) << " | " << join(r.B[i]) << '\n';
    std::cout << "within_bound " << yes(BigInt(r.best) <= bound) << '\n';
    if (BigInt(r.best) > bound) result = kViolated;
  });

  // fo-apply
  auto* fo_apply = app.add_subcommand("fo-apply", "Apply a formula to a colored graph");
  std::string fa_graph, fa_formula, fa_out, fa_keep;
  std::vector<std::string> fa_colors;
  fo_apply->add_option("graph", fa_graph)->required();
  fo_apply->add_option("--formula", fa_formula, "Formula file")->required();
  fo_apply->add_option("--colors", fa_colors, "Expansion entries NAME=id,id,...");
  fo_apply->add_option("--keep", fa_keep, "Kept vertices id,id,... (default all)");
  fo_apply->add_option("-o,--output", fa_out);
  fo_apply->callback([&] {
    const auto g = load_graph(fa_graph);
    const auto phi = parse_formula(read_text(fa_formula));
    const auto expansion = parse_color_assignments(fa_colors, g.vertex_count());
    std::vector<std::string> names;
    for (const auto& [name, members] : expansion) names.push_back(name);
    for (const auto& [name, members] : g.colors()) names.push_back(name);
    for (const auto& name : phi.colors()) names.push_back(name);
    const Transduction t(names, phi);
    const VertexSet keep = fa_keep.empty() ? all_vertices(g) : parse_id_list(fa_keep, g.vertex_count());
    Output out(fa_out);
    write_graph(out.stream(), transduce(t, g, expansion, keep));
  });

  // fo-search
  auto* fo_search = app.add_subcommand("fo-search", "Search an expansion and keep set producing a target");
  std::string fs_graph, fs_target, fs_formula;
  std::vector<std::string> fs_colors;
  std::uint64_t fs_budget = kDefaultSearchBudget;
  fo_search->add_option("graph", fs_graph)->required();
  fo_search->add_option("target", fs_target)->required();
  fo_search->add_option("--formula", fs_formula, "Formula file")->required();
  fo_search->add_option("--colors", fs_colors, "Color names of the transduction");
  fo_search->add_option("--budget", fs_budget, "Candidate budget");
  fo_search->callback([&] {
    const auto g = load_graph(fs_graph);
    const auto target = load_graph(fs_target);
    const auto phi = parse_formula(read_text(fs_formula));
    std::vector<std::string> names = fs_colors;
    if (names.empty())
      for (const auto& name : phi.colors()) names.push_back(name);
    const Transduction t(names, phi);
    const auto r = search_transduction(t, uncolored(g), target, fs_budget);
    std::cout << "status " << to_string(r.status) << '\n';
    if (r.status == SearchStatus::Found) {
      for (const auto& [name, members] : r.expansion) std::cout << "color " << name << " : " << join(members) << '\n';
      std::cout << "keep " << join(r.keep) << '\n';
    }
    std::cout << "candidates " << r.candidates << '\n';
    if (r.status != SearchStatus::Found) result = kViolated;
  });

  // profile
  auto* prof = app.add_subcommand("profile", "Per-d wcol table of a family (TSV)");
  std::vector<std::string> pr_family;
  int pr_dmax = 10;
  std::string pr_method = "canonical", pr_out;
  std::uint64_t pr_budget = kDefaultNodeBudget;
  prof->add_option("--family", pr_family, "Family member spec (repeatable), e.g. --family 'kpath 2 15'")->required();
  prof->add_option("--d-max", pr_dmax)->required()->check(CLI::PositiveNumber);
  prof->add_option("--method", pr_method, "exact | heuristic | canonical");
  prof->add_option("--budget", pr_budget, "Node budget for the exact method");
  prof->add_option("-o,--output", pr_out);
  prof->callback([&] {
    ProfileOptions options;
    options.exact_budget = pr_budget;
    const auto p = profile_family(pr_family, pr_dmax, parse_profile_method(pr_method), options);
    Output out(pr_out);
    write_profile(out.stream(), p);
    for (const auto& v : p.violations)
      std::cerr << "violation " << v.member << " d=" << v.d << " value=" << v.value << " bound=" << v.bound << '\n';
    if (!p.violations.empty()) result = kViolated;
  });

  // compare
  auto* cmp = app.add_subcommand("compare", "Empirical domination verdict between two profiles");
  std::string cmp_f, cmp_g;
  cmp->add_option("f", cmp_f, "Profile TSV of f")->required();
  cmp->add_option("g", cmp_g, "Profile TSV of g")->required();
  cmp->callback([&] {
    auto fin = detail::open_input(cmp_f);
    auto gin = detail::open_input(cmp_g);
    const auto v = compare_domination(read_profile(fin), read_profile(gin));
    std::cout << "degree_f " << detail::fixed6(v.degree_f) << '\n'
              << "degree_g " << detail::fixed6(v.degree_g) << '\n'
              << "margin " << detail::fixed6(kDominationMargin) << '\n'
              << "verdict " << v.text() << '\n';
  });

  // random-model
  auto* rm = app.add_subcommand("random-model", "Random valid congestion-k depth-k model");
  std::string rm_graph, rm_out;
  int rm_k = 1, rm_sets = -1;
  std::uint64_t rm_seed = 1;
  rm->add_option("graph", rm_graph)->required();
  rm->add_option("--k", rm_k)->required()->check(CLI::PositiveNumber);
  rm->add_option("--seed", rm_seed);
  rm->add_option("--sets", rm_sets, "Number of branch sets (default random)");
  rm->add_option("-o,--output", rm_out);
  rm->callback([&] {
    const auto g = load_graph(rm_graph);
    RandomModelOptions options;
    options.branch_sets = rm_sets;
    Output out(rm_out);
    write_model(out.stream(), random_model(g, rm_k, rm_seed, options));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return result;
}
