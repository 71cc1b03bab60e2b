#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include <anonhard/binary_reduction.hpp>
#include <anonhard/error.hpp>
#include <anonhard/io.hpp>
#include <anonhard/sampling.hpp>
#include <anonhard/solver.hpp>
#include <anonhard/width8_reduction.hpp>

#include "report.hpp"

namespace anonhard::cli {

namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  unsigned jobs = 0;
  std::string report_dir;

  std::string builtin;
  std::string graph;
  std::string instance;
  std::string reduction;

  std::string out;
  std::string cover;
  std::string clustering;
  std::string rows;
  std::size_t n = 10;
  std::size_t k = 0;
  std::size_t limit = kDefaultExactLimit;
  bool greedy = false;
  bool exact = false;
};

unsigned worker_count(const Options& o) {
  if (o.jobs > 0) return o.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

// One built instance of either reduction.
struct Loaded {
  std::string reduction;
  std::optional<binary::BinaryInstance> binary;
  std::optional<width8::Width8Instance> width8;

  const CubicGraph& graph() const { return binary ? binary->graph() : width8->graph(); }
  const Instance& table() const { return binary ? binary->instance() : width8->instance(); }

  template <class F>
  decltype(auto) visit(F&& f) const {
    if (binary) return f(*binary);
    return f(*width8);
  }

  Cost expected_cost(std::size_t cover_size) const {
    const auto n = graph().vertex_count();
    const auto m = graph().edge_count();
    return binary ? binary::expected_cost(n, m, cover_size) : width8::expected_cost(n, m, cover_size);
  }

  std::string rows_csv() const {
    std::ostringstream out;
    io::write_rows_csv(out, table().rows());
    return out.str();
  }

  std::string description() const {
    return reduction + ", n=" + std::to_string(graph().vertex_count()) +
           ", m=" + std::to_string(graph().edge_count()) + ", " + std::to_string(table().size()) +
           " rows x " + std::to_string(table().width()) + " columns";
  }
};

CubicGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file " + path);
  return read_dimacs(in);
}

CubicGraph load_graph(const Options& o) {
  const int given = !o.builtin.empty() + !o.graph.empty() + !o.instance.empty();
  if (given != 1) throw UsageError("give exactly one of --builtin, --graph, --instance");
  if (!o.builtin.empty()) return builtin_graph(o.builtin);
  if (!o.graph.empty()) return read_graph_file(o.graph);
  const auto layout = io::parse_layout(io::read_file((fs::path(o.instance) / "layout.json").string()));
  return io::layout_graph(layout);
}

Loaded load(const Options& o, std::string_view only = {}) {
  std::string reduction = o.reduction;
  std::optional<io::Layout> layout;
  if (!o.instance.empty()) {
    layout = io::parse_layout(io::read_file((fs::path(o.instance) / "layout.json").string()));
    if (reduction.empty()) reduction = layout->reduction;
    if (reduction != layout->reduction) {
      throw UsageError("--reduction " + reduction + " does not match the instance (" +
                       layout->reduction + ")");
    }
  }
  if (reduction.empty()) reduction = only.empty() ? "" : std::string(only);
  if (reduction.empty()) throw UsageError("--reduction is required (3abp or 4ap8)");
  if (!only.empty() && reduction != only) {
    throw UsageError("this check applies to the " + std::string(only) + " reduction only");
  }
  const auto g = load_graph(o);
  Loaded l;
  l.reduction = reduction;
  if (reduction == "3abp") l.binary.emplace(g);
  else l.width8.emplace(g);

  if (!o.instance.empty()) {
    const auto rows_path = fs::path(o.instance) / "rows.csv";
    if (fs::exists(rows_path) && io::read_file(rows_path.string()) != l.rows_csv()) {
      throw Error(ErrorKind::Parse, rows_path.string() + " does not match layout.json");
    }
  }
  return l;
}

Clustering load_clustering(const std::string& path, const Loaded& l) {
  auto p = io::parse_clustering(io::read_file(path));
  validate_partition(p, l.table().size());
  return p;
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    if (const auto dir = fs::path(path).parent_path(); !dir.empty()) fs::create_directories(dir);
    io::write_file(path, content);
  }
}

int finish(const VerificationReport& report, const Options& o, std::ostream& out) {
  out << report.text();
  if (!o.report_dir.empty()) {
    fs::create_directories(o.report_dir);
    io::write_file((fs::path(o.report_dir) / "report.txt").string(), report.text());
    io::write_file((fs::path(o.report_dir) / "report.csv").string(), report.csv());
  }
  return report.passed() ? kExitOk : kExitFailed;
}

std::string join_values(const std::set<Cost>& values) {
  std::string s;
  for (auto v : values) s += (s.empty() ? "" : "/") + std::to_string(v);
  return s.empty() ? "-" : s;
}

std::string ratio(std::size_t good, std::size_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

// ---------------------------------------------------------------------------

int cmd_gen_graph(const Options& o, std::ostream& out) {
  const auto g = o.builtin.empty() ? random_cubic(o.n, o.seed) : builtin_graph(o.builtin);
  std::ostringstream text;
  write_dimacs(text, g);
  emit(o.out, text.str(), out);
  return kExitOk;
}

int cmd_build(const Options& o, std::ostream& out) {
  const auto l = load(o);
  fs::create_directories(o.out);
  const auto csv = l.rows_csv();
  io::write_file((fs::path(o.out) / "rows.csv").string(), csv);
  l.visit([&](const auto& inst) {
    io::write_file((fs::path(o.out) / "provenance.json").string(), io::provenance_json(inst));
    io::write_file((fs::path(o.out) / "layout.json").string(), io::layout_json(inst));
  });
  out << "built " << l.description() << '\n';
  out << "fingerprint: sha256:" << sha256_hex(csv) << '\n';
  return kExitOk;
}

int cmd_solve_vc(const Options& o, std::ostream& out) {
  const auto g = load_graph(o);
  const auto cover = o.greedy ? greedy_vertex_cover(g) : exact_vertex_cover(g);
  emit(o.out, io::cover_json(cover), out);
  if (!o.out.empty()) out << "cover size " << cover.size() << '\n';
  return kExitOk;
}

int cmd_vc_to_solution(const Options& o, std::ostream& out) {
  const auto l = load(o);
  const auto cover = io::parse_cover(io::read_file(o.cover), l.graph().vertex_count());
  const auto p = l.visit([&](const auto& inst) { return vc_to_solution(inst, cover); });
  emit(o.out, io::clustering_json(p), out);
  if (!o.out.empty()) out << "cost " << clustering_cost(l.table(), p) << '\n';
  return kExitOk;
}

int cmd_solution_to_vc(const Options& o, std::ostream& out) {
  const auto l = load(o);
  const auto p = load_clustering(o.clustering, l);
  const auto cover = l.visit([&](const auto& inst) { return solution_to_vc(inst, p); });
  emit(o.out, io::cover_json(cover), out);
  if (!o.out.empty()) out << "cover size " << cover.size() << '\n';
  return kExitOk;
}

int cmd_canonicalize(const Options& o, std::ostream& out) {
  const auto l = load(o);
  const auto& table = l.table();
  VerificationReport report("canonicalize");
  report.set_instance(l.description(), l.rows_csv());

  if (!o.clustering.empty()) {
    const auto p = load_clustering(o.clustering, l);
    report.add("input feasible", "true", is_feasible(table, p) ? "true" : "false", is_feasible(table, p));
    if (!report.passed()) return finish(report, o, out);
    const auto q = l.visit([&](const auto& inst) { return canonicalize(inst, p); });
    const bool canonical = l.visit([&](const auto& inst) { return is_canonical(inst, q); });
    const Cost before = clustering_cost(table, p);
    const Cost after = clustering_cost(table, q);
    report.add("output canonical", "true", canonical ? "true" : "false", canonical);
    report.add("cost", "<= " + std::to_string(before), std::to_string(after), after <= before);
    if (!o.out.empty()) io::write_file(o.out, io::clustering_json(q));
    return finish(report, o, out);
  }

  Rng rng(o.seed);
  std::size_t canonical = 0, monotone = 0, errors = 0, improved = 0;
  for (std::size_t t = 0; t < o.trials; ++t) {
    const auto p = l.visit([&](const auto& inst) { return sample_solution(inst, rng); });
    try {
      const auto q = l.visit([&](const auto& inst) { return canonicalize(inst, p); });
      canonical += l.visit([&](const auto& inst) { return is_canonical(inst, q); }) ? 1 : 0;
      const Cost before = clustering_cost(table, p);
      const Cost after = clustering_cost(table, q);
      monotone += after <= before ? 1 : 0;
      improved += after < before ? 1 : 0;
    } catch (const Error&) {
      ++errors;
    }
  }
  report.add("random solutions canonicalized", std::to_string(o.trials), ratio(canonical, o.trials),
             canonical == o.trials);
  report.add("cost never increased", std::to_string(o.trials), ratio(monotone, o.trials),
             monotone == o.trials);
  report.add("canonicalizer errors", "0", std::to_string(errors), errors == 0);
  report.add("strict improvements", "-", ratio(improved, o.trials), true);
  return finish(report, o, out);
}

int cmd_verify_distances(const Options& o, std::ostream& out) {
  const auto l = load(o, "3abp");
  VerificationReport report("verify distances");
  report.set_instance(l.description(), l.rows_csv());
  const auto result = binary::verify_distance_catalog(*l.binary, worker_count(o));
  for (const auto& c : result.cases) {
    const std::string expected = (c.exact ? "= " : ">= ") + std::to_string(c.expected);
    const std::string observed =
        c.pairs == 0 ? "no pairs"
                     : std::to_string(c.min_seen) + ".." + std::to_string(c.max_seen) + " over " +
                           std::to_string(c.pairs) + " pairs";
    report.add("case " + std::to_string(c.number) + " " + c.description, expected, observed,
               c.pairs > 0 && c.violations == 0);
  }
  return finish(report, o, out);
}

int cmd_verify_locality(const Options& o, std::ostream& out) {
  const auto l = load(o, "4ap8");
  const auto& inst = *l.width8;
  const auto& table = l.table();
  VerificationReport report("verify locality");
  report.set_instance(l.description(), l.rows_csv());

  std::size_t close = 0, local = 0;
  for (std::size_t a = 0; a < table.size(); ++a) {
    for (std::size_t b = a + 1; b < table.size(); ++b) {
      if (hamming(table.row(a), table.row(b)) >= width8::kWidth) continue;
      ++close;
      for (std::size_t v = 0; v < inst.graph().vertex_count(); ++v) {
        if (inst.in_neighborhood(a, v) && inst.in_neighborhood(b, v)) {
          ++local;
          break;
        }
      }
    }
  }
  report.add("row pairs at distance < 8 share a neighborhood", std::to_string(close), ratio(local, close),
             local == close);

  auto record = [&](const std::string& name, const Clustering& p) {
    const auto r = width8::verify_locality(inst, p);
    report.add(name + ": cheap clusters local", "0 violations",
               std::to_string(r.locality_violations) + " of " + std::to_string(r.cheap_clusters),
               r.locality_violations == 0);
    report.add(name + ": vertex rows lose >= 3 even columns", "0 violations",
               std::to_string(r.low_bound_violations) + " of " + std::to_string(r.vertex_rows),
               r.low_bound_violations == 0);
  };
  if (!o.clustering.empty()) {
    record("clustering", load_clustering(o.clustering, l));
  } else {
    record("canonical solution", width8::vc_to_solution(inst, exact_vertex_cover(inst.graph())));
    Rng rng(o.seed);
    std::size_t ok = 0;
    for (std::size_t t = 0; t < o.trials; ++t) {
      ok += width8::verify_locality(inst, width8::sample_solution(inst, rng)).passed() ? 1 : 0;
    }
    report.add("random solutions without violations", std::to_string(o.trials), ratio(ok, o.trials),
               ok == o.trials);
  }
  return finish(report, o, out);
}

void canonical_costs_binary(const binary::BinaryInstance& inst, VerificationReport& report) {
  const auto& table = inst.instance();
  const std::size_t n = inst.graph().vertex_count();
  std::set<Cost> type_a, star_a, jolly_a;
  for (std::size_t g = 0; g < n; ++g) {
    Cost total = 0;
    for (const auto& c : binary::build_type_a(inst, g)) {
      const Cost cost = cluster_cost(table, c);
      total += cost;
      (c.size() == binary::kJollyCopies ? jolly_a : star_a).insert(cost);
    }
    type_a.insert(total);
  }
  report.add("type a total cost", "81", join_values(type_a), type_a == std::set<Cost>{81});
  report.add("type a star clusters", "27", join_values(star_a), star_a == std::set<Cost>{27});
  report.add("type a jolly clusters", "0", join_values(jolly_a), jolly_a == std::set<Cost>{0});

  // Every gadget type b: each hosts the edge gadgets it owns.
  std::vector<std::size_t> all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = v;
  std::set<Cost> type_b, edge_virtual, jolly_virtual, star_b, dock_jolly, dock_edge;
  for (const auto& cover : {make_cover(all, n), exact_vertex_cover(inst.graph())}) {
    const auto p = binary::vc_to_solution(inst, cover);
    const auto s = binary::recognize(inst, p);
    const auto v = binary::virtual_costs(inst, p);
    for (std::size_t g = 0; g < n; ++g) {
      binary::VirtualCost sum = 0;
      for (std::size_t e = 0; e < binary::kCoreEdges; ++e) sum += v[inst.core_row(g, e)];
      if (s.type[g] == binary::GadgetType::B && sum.denominator() == 1) type_b.insert(sum.numerator());
      if (s.type[g] == binary::GadgetType::B && sum.denominator() != 1) type_b.insert(-1);
    }
    for (std::size_t r = 0; r < table.size(); ++r) {
      const auto& x = v[r];
      const Cost whole = x.denominator() == 1 ? x.numerator() : -1;
      if (inst.is_edge_gadget(r)) edge_virtual.insert(whole);
      if (inst.is_jolly(r)) jolly_virtual.insert(whole);
    }
    for (const auto& c : p.clusters) {
      const auto edge_gadgets = std::count_if(c.begin(), c.end(), [&](auto r) { return inst.is_edge_gadget(r); });
      const auto jolly = std::count_if(c.begin(), c.end(), [&](auto r) { return inst.is_jolly(r); });
      const Cost cost = cluster_cost(table, c);
      if (edge_gadgets == 1) dock_edge.insert(cost);
      else if (jolly == 1 && c.size() == 3) dock_jolly.insert(cost);
      else if (jolly == 0 && edge_gadgets == 0 && s.type[inst.gadget_of(c.front())] == binary::GadgetType::B)
        star_b.insert(cost);
    }
  }
  report.add("type b core-row virtual cost", "99", join_values(type_b), type_b == std::set<Cost>{99});
  report.add("type b c6 star", "27", join_values(star_b), star_b == std::set<Cost>{27});
  report.add("docking cluster with jolly row", "24", join_values(dock_jolly), dock_jolly == std::set<Cost>{24});
  report.add("docking cluster with edge gadget", "36", join_values(dock_edge), dock_edge == std::set<Cost>{36});
  report.add("edge gadget virtual cost", "12", join_values(edge_virtual), edge_virtual == std::set<Cost>{12});
  report.add("jolly row virtual cost", "0", join_values(jolly_virtual), jolly_virtual == std::set<Cost>{0});
}

void canonical_costs_width8(const width8::Width8Instance& inst, VerificationReport& report) {
  const auto& table = inst.instance();
  std::set<Cost> red, black, black_four, black_dock;
  for (std::size_t v = 0; v < inst.graph().vertex_count(); ++v) {
    red.insert(cluster_cost(table, width8::build_red(inst, v)[0]));
    const auto b = width8::build_black(inst, v);
    black_four.insert(cluster_cost(table, b[0]));
    black_dock.insert(cluster_cost(table, b[1]));
    black.insert(cluster_cost(table, b[0]) + cluster_cost(table, b[1]));
  }
  report.add("red solution", "15", join_values(red), red == std::set<Cost>{15});
  report.add("black solution", "36", join_values(black), black == std::set<Cost>{36});
  report.add("black four-row cluster", "12", join_values(black_four), black_four == std::set<Cost>{12});
  report.add("black docking cluster", "24", join_values(black_dock), black_dock == std::set<Cost>{24});
  const auto p = width8::vc_to_solution(inst, exact_vertex_cover(inst.graph()));
  const auto& filler = p.clusters.front();
  report.add("filler cost per row", "8", std::to_string(cluster_cost(table, filler) / static_cast<Cost>(filler.size())),
             cluster_cost(table, filler) == 8 * static_cast<Cost>(filler.size()));
}

int cmd_verify_canonical_costs(const Options& o, std::ostream& out) {
  const auto l = load(o);
  VerificationReport report("verify canonical-costs");
  report.set_instance(l.description(), l.rows_csv());
  if (l.binary) canonical_costs_binary(*l.binary, report);
  else canonical_costs_width8(*l.width8, report);
  return finish(report, o, out);
}

int cmd_verify_roundtrip(const Options& o, std::ostream& out) {
  const auto l = load(o);
  const auto& g = l.graph();
  const std::size_t n = g.vertex_count();
  VerificationReport report("verify roundtrip");
  report.set_instance(l.description(), l.rows_csv());

  std::vector<VertexCover> covers;
  std::vector<std::size_t> all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = v;
  covers.push_back(make_cover(all, n));
  covers.push_back(exact_vertex_cover(g));
  Rng rng(o.seed);
  for (std::size_t t = 0; t < o.trials; ++t) covers.push_back(random_cover(g, rng));

  std::size_t canonical = 0, formula = 0, back = 0, forth = 0;
  for (const auto& cover : covers) {
    l.visit([&](const auto& inst) {
      const auto p = vc_to_solution(inst, cover);
      canonical += is_canonical(inst, p) ? 1 : 0;
      formula += clustering_cost(l.table(), p) == l.expected_cost(cover.size()) ? 1 : 0;
      const auto recovered = solution_to_vc(inst, p);
      back += recovered == cover ? 1 : 0;
      forth += normalized(vc_to_solution(inst, recovered)) == normalized(p) ? 1 : 0;
    });
  }
  const auto total = covers.size();
  report.add("solutions canonical", std::to_string(total), ratio(canonical, total), canonical == total);
  report.add("cost matches formula", std::to_string(total), ratio(formula, total), formula == total);
  report.add("cover recovered", std::to_string(total), ratio(back, total), back == total);
  report.add("solution rebuilt from recovered cover", std::to_string(total), ratio(forth, total), forth == total);
  return finish(report, o, out);
}

int cmd_verify_theorem(const Options& o, std::ostream& out) {
  const auto l = load(o);
  const auto& g = l.graph();
  VerificationReport report("verify theorem");
  report.set_instance(l.description(), l.rows_csv());
  const auto cover = exact_vertex_cover(g);
  report.add("vertex cover", "valid", is_vertex_cover(g, cover) ? "valid" : "invalid", is_vertex_cover(g, cover));
  report.add("minimum cover size", "-", std::to_string(cover.size()), true);
  const auto p = l.visit([&](const auto& inst) { return vc_to_solution(inst, cover); });
  const bool canonical = l.visit([&](const auto& inst) { return is_canonical(inst, p); });
  report.add("canonical solution", "true", canonical ? "true" : "false", canonical);
  report.add("feasible", "true", is_feasible(l.table(), p) ? "true" : "false", is_feasible(l.table(), p));
  const Cost expected = l.expected_cost(cover.size());
  report.add_equal("cost", expected, clustering_cost(l.table(), p));
  const auto back = l.visit([&](const auto& inst) { return solution_to_vc(inst, p); });
  report.add("reverse extraction", io::cover_json(cover).substr(0, io::cover_json(cover).size() - 1),
             io::cover_json(back).substr(0, io::cover_json(back).size() - 1), back == cover);
  return finish(report, o, out);
}

int cmd_solve(const Options& o, std::ostream& out) {
  if (o.exact == o.greedy) throw UsageError("give exactly one of --exact, --greedy");
  std::ifstream in(o.rows);
  if (!in) throw UsageError("cannot open rows file " + o.rows);
  Instance inst(io::read_rows_csv(in), o.k);
  const auto res = o.exact ? exact_kap(inst, o.limit) : greedy_kap(inst);
  out << "cost " << res.cost << '\n';
  out << "optimal " << (res.optimal ? "true" : "false") << '\n';
  out << io::clustering_json(res.clustering);
  if (!o.out.empty()) io::write_file(o.out, io::clustering_json(res.clustering));
  return kExitOk;
}

// ---------------------------------------------------------------------------

void add_source(CLI::App* cmd, Options& o, bool with_instance = true) {
  cmd->add_option("--builtin", o.builtin, "Built-in graph: k4, k33, petersen, q3");
  cmd->add_option("--graph", o.graph, "DIMACS-like graph file");
  if (with_instance) cmd->add_option("--instance", o.instance, "Directory written by `build`");
}

void add_reduction(CLI::App* cmd, Options& o) {
  cmd->add_option("--reduction", o.reduction, "3abp or 4ap8")->check(CLI::IsMember({"3abp", "4ap8"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Reductions from vertex cover on cubic graphs to k-anonymity, with verifiers", "anonhard"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "Seed for randomized trials")->capture_default_str();
  app.add_option("--trials", o.trials, "Number of randomized trials")->capture_default_str();
  app.add_option("--jobs", o.jobs, "Worker threads (0 = all cores)")->envname("ANONHARD_JOBS");
  app.add_option("--report-dir", o.report_dir, "Also write report.txt and report.csv here");

  std::function<int()> action;
  auto bind = [&](CLI::App* cmd, int (*fn)(const Options&, std::ostream&)) {
    cmd->callback([&, fn] { action = [&, fn] { return fn(o, out); }; });
  };

  auto* gen = app.add_subcommand("gen-graph", "Write a random or built-in cubic graph");
  gen->add_option("--n", o.n, "Vertex count (even, >= 4)")->capture_default_str();
  gen->add_option("--builtin", o.builtin, "Built-in graph instead of a random one");
  gen->add_option("--out", o.out, "Output file (default stdout)");
  bind(gen, cmd_gen_graph);

  auto* build = app.add_subcommand("build", "Build a reduction instance directory");
  add_source(build, o, false);
  add_reduction(build, o);
  build->get_option("--reduction")->required();
  build->add_option("--out", o.out, "Output directory")->required();
  bind(build, cmd_build);

  auto* svc = app.add_subcommand("solve-vc", "Minimum (or greedy) vertex cover");
  add_source(svc, o);
  svc->add_flag("--greedy", o.greedy, "Matching-based 2-approximation");
  svc->add_option("--out", o.out, "Output file (default stdout)");
  bind(svc, cmd_solve_vc);

  auto* v2s = app.add_subcommand("vc-to-solution", "Canonical clustering for a vertex cover");
  add_source(v2s, o);
  add_reduction(v2s, o);
  v2s->add_option("--cover", o.cover, "Cover JSON (1-based vertices)")->required();
  v2s->add_option("--out", o.out, "Output file (default stdout)");
  bind(v2s, cmd_vc_to_solution);

  auto* s2v = app.add_subcommand("solution-to-vc", "Vertex cover from a canonical clustering");
  add_source(s2v, o);
  add_reduction(s2v, o);
  s2v->add_option("--clustering", o.clustering, "Clustering JSON")->required();
  s2v->add_option("--out", o.out, "Output file (default stdout)");
  bind(s2v, cmd_solution_to_vc);

  auto* canon = app.add_subcommand("canonicalize", "Canonicalize a clustering, or random ones");
  add_source(canon, o);
  add_reduction(canon, o);
  canon->add_option("--clustering", o.clustering, "Clustering JSON (default: random trials)");
  canon->add_option("--out", o.out, "Where to write the canonical clustering");
  bind(canon, cmd_canonicalize);

  auto* verify = app.add_subcommand("verify", "Run a verification and print a report");
  verify->require_subcommand(1);
  auto* vd = verify->add_subcommand("distances", "Pairwise distance catalog (3abp)");
  add_source(vd, o);
  add_reduction(vd, o);
  bind(vd, cmd_verify_distances);
  auto* vl = verify->add_subcommand("locality", "Locality of cheap clusters (4ap8)");
  add_source(vl, o);
  add_reduction(vl, o);
  vl->add_option("--clustering", o.clustering, "Clustering JSON (default: canonical and random)");
  bind(vl, cmd_verify_locality);
  auto* vc = verify->add_subcommand("canonical-costs", "Costs of the canonical building blocks");
  add_source(vc, o);
  add_reduction(vc, o);
  bind(vc, cmd_verify_canonical_costs);
  auto* vr = verify->add_subcommand("roundtrip", "Cover to solution to cover on random covers");
  add_source(vr, o);
  add_reduction(vr, o);
  bind(vr, cmd_verify_roundtrip);
  auto* vt = verify->add_subcommand("theorem", "Minimum cover, canonical cost and extraction");
  add_source(vt, o);
  add_reduction(vt, o);
  bind(vt, cmd_verify_theorem);

  auto* solve = app.add_subcommand("solve", "Solve k-anonymity on a rows CSV");
  solve->add_flag("--exact", o.exact, "Exact search");
  solve->add_flag("--greedy", o.greedy, "Greedy baseline");
  solve->add_option("--k", o.k, "Anonymity parameter")->required()->check(CLI::PositiveNumber);
  solve->add_option("--rows", o.rows, "Rows CSV")->required();
  solve->add_option("--limit", o.limit, "Row cap for exact search")->capture_default_str();
  solve->add_option("--out", o.out, "Also write the clustering JSON here");
  bind(solve, cmd_solve);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace anonhard::cli
