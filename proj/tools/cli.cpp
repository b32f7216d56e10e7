#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tgb/branching.hpp"
#include "tgb/cnf.hpp"
#include "tgb/distances.hpp"
#include "tgb/hardness.hpp"
#include "tgb/oracle.hpp"
#include "tgb/random_graph.hpp"
#include "tgb/serialize.hpp"
#include "tgb/tg_format.hpp"

namespace tgb::cli {
namespace {

struct GraphArgs {
  std::string path;
  std::string root;
  std::string kind = "EA";
  std::string format = "table";
};

TgInstance load_instance(const std::string& path) {
  TgInstance instance = read_tg_instance_file(path);
  const ValidationReport report = validate(instance.graph);
  if (!report.ok()) {
    std::string where = report.offending_arc == kNoArc
                            ? std::string("graph")
                            : "arc " + std::to_string(report.offending_arc);
    throw std::invalid_argument("invalid graph (" + where + "): " + report.message);
  }
  return instance;
}

DistanceKind parse_kind_or_throw(const std::string& text) {
  auto kind = parse_distance_kind(text);
  if (!kind.has_value()) {
    throw std::invalid_argument("unknown kind '" + text + "' (EA|FT|LD|MT|MW|ST)");
  }
  return *kind;
}

VertexId resolve_root(const TgInstance& instance, const std::string& flag) {
  if (!flag.empty()) return instance.graph.require_vertex(flag);
  if (instance.root_label.has_value()) {
    return instance.graph.require_vertex(*instance.root_label);
  }
  throw std::invalid_argument("--root is required (no sidecar root in the file)");
}

std::string fmt_value(Dist v) {
  return v == kUnreachable ? std::string("inf") : std::to_string(v);
}

void print_distance_table(std::ostream& out, const TemporalGraph& g,
                          const DistanceVector& dist, const EadVector* ead) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << g.label(v) << ' ' << fmt_value(dist[v]);
    if (ead != nullptr) out << ' ' << fmt_value((*ead)[v]);
    out << '\n';
  }
}

void print_branching_table(std::ostream& out, const TemporalGraph& g,
                           const Branching& b) {
  out << "root " << g.label(b.root) << '\n';
  out << "kind " << to_string(b.kind) << '\n';
  out << "members " << b.member_count() << '/' << g.vertex_count() << '\n';
  for (const BranchingEntry& e : b.parents) {
    const TemporalArc& a = g.arc(e.arc);
    out << g.label(e.vertex) << ' ' << g.label(a.tail) << ' ' << a.t_start << ' '
        << a.t_arrive << ' ' << e.dist << ' ' << e.arrival << '\n';
  }
}

void report_unspanned(std::ostream& err, const TemporalGraph& g, const Branching& b) {
  if (b.spanning(g)) return;
  err << "not spanned:";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!b.is_member(v)) err << ' ' << g.label(v);
  }
  err << '\n';
}

void emit_branching(std::ostream& out, const TemporalGraph& g, const Branching& b,
                    const std::string& format) {
  if (format == "json") {
    out << branching_to_json(g, b);
  } else if (format == "dot") {
    branching_to_dot(out, g, b);
  } else {
    print_branching_table(out, g, b);
  }
}

void print_witness_table(std::ostream& out, const TemporalGraph& g,
                         const TossWitness& w) {
  out << "arcs " << w.arcs.size() << '\n';
  for (ArcId id : w.arcs) {
    const TemporalArc& a = g.arc(id);
    out << g.label(a.tail) << ' ' << g.label(a.head) << ' ' << a.t_start << ' '
        << a.t_arrive << '\n';
  }
}

int run_distances(const GraphArgs& args, bool with_ead, std::ostream& out) {
  const TgInstance instance = load_instance(args.path);
  const VertexId root = resolve_root(instance, args.root);
  const DistanceKind kind = parse_kind_or_throw(args.kind);
  const DistanceWithEad both = single_source_with_ead(instance.graph, root, kind);
  if (args.format == "json") {
    out << distances_to_json(instance.graph, both.dist, with_ead ? &both.ead : nullptr);
  } else {
    print_distance_table(out, instance.graph, both.dist, with_ead ? &both.ead : nullptr);
  }
  return kExitOk;
}

int run_tob(const GraphArgs& args, int max_n, bool in_branching, std::ostream& out,
            std::ostream& err) {
  const TgInstance instance = load_instance(args.path);
  const TemporalGraph& g = instance.graph;
  const VertexId root = resolve_root(instance, args.root);
  const DistanceKind kind = parse_kind_or_throw(args.kind);

  Branching result;
  const bool hard_kind =
      kind == DistanceKind::FastestTime || kind == DistanceKind::MinimumWaiting;
  if (!in_branching) {
    if (!hard_kind) {
      switch (kind) {
        case DistanceKind::EarliestArrival: result = spanning_tob(g, root); break;
        case DistanceKind::MinimumTransfers: result = max_mt_tob(g, root); break;
        default: result = max_ld_st_tob(g, root, kind); break;
      }
    } else if (auto poly = ft_mw_poly_cases(g, root, kind)) {
      result = *poly;
    } else {
      err << "warning: maximum " << to_string(kind)
          << " branchings are NP-hard in this regime; using the exponential "
             "oracle\n";
      HardnessOptions options;
      options.max_tob_vertices = max_n;
      result = brute_max_dtob(g, root, kind, options);
    }
  } else {
    if (!hard_kind) {
      result = max_d_tib(g, root, kind);
    } else {
      const TemporalGraph rev = reverse(g);
      if (auto poly = ft_mw_poly_cases(rev, root, kind)) {
        result = tib_from_reverse_tob(g, *poly, kind);
      } else {
        err << "warning: maximum " << to_string(kind)
            << " in-branchings are NP-hard in this regime; using the "
               "exponential oracle\n";
        HardnessOptions options;
        options.max_tob_vertices = max_n;
        result = tib_from_reverse_tob(g, brute_max_dtob(rev, root, kind, options), kind);
      }
    }
  }
  report_unspanned(err, g, result);
  emit_branching(out, g, result, args.format);
  return kExitOk;
}

int run_toss(const GraphArgs& args, std::optional<std::int64_t> k_flag, int max_m,
             bool in_spanning, std::ostream& out, std::ostream& err) {
  const TgInstance instance = load_instance(args.path);
  const TemporalGraph& g = instance.graph;
  const VertexId root = resolve_root(instance, args.root);
  const DistanceKind kind = parse_kind_or_throw(args.kind);
  std::optional<std::int64_t> k = k_flag;
  if (!k.has_value()) k = instance.arc_budget;
  if (!k.has_value()) {
    throw std::invalid_argument("--k is required (no sidecar k in the file)");
  }

  std::optional<TossWitness> witness;
  const std::int64_t spanning_size = g.vertex_count() - 1;
  if (!in_spanning && kind == DistanceKind::EarliestArrival) {
    // Spanning EA-TOB and minimum EA-TOSS coincide; no search needed.
    witness = *k >= spanning_size ? ea_toss(g, root) : std::nullopt;
  } else if (in_spanning && kind == DistanceKind::LatestDeparture) {
    witness = *k >= spanning_size ? min_ld_tiss(g, root) : std::nullopt;
  } else {
    HardnessOptions options;
    options.max_toss_arcs = max_m;
    witness = in_spanning ? brute_min_dtiss(g, root, kind, *k, options)
                          : brute_min_dtoss(g, root, kind, *k, options);
  }

  if (!witness.has_value()) {
    err << "no " << to_string(kind) << (in_spanning ? "-tiss" : "-toss")
        << " with at most " << *k << " arcs\n";
    return kExitNo;
  }
  if (args.format == "json") {
    out << toss_witness_to_json(g, *witness);
  } else {
    print_witness_table(out, g, *witness);
  }
  return kExitOk;
}

int run_verify(const GraphArgs& args, const std::string& branching_path,
               bool in_branching, bool structure_only, std::ostream& out) {
  const TgInstance instance = load_instance(args.path);
  const TemporalGraph& g = instance.graph;
  std::ifstream in(branching_path);
  if (!in) throw std::invalid_argument("cannot open '" + branching_path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  Branching b = branching_from_json(g, buffer.str());
  const DistanceKind kind = args.kind.empty() ? b.kind : parse_kind_or_throw(args.kind);

  if (structure_only) {
    const TobReport report = in_branching ? verify_tib(g, b) : verify_tob(g, b);
    if (report.ok()) {
      out << "ok\n";
      return kExitOk;
    }
    out << "violation: " << report.violation->condition << " (vertex "
        << (report.violation->vertex == kNoVertex ? std::string("-")
                                                  : g.label(report.violation->vertex))
        << ")\n";
    return kExitNo;
  }
  const DTobReport report =
      in_branching ? verify_d_tib(g, b, kind) : verify_d_tob(g, b, kind);
  if (!report.ok()) {
    out << "violation: " << report.violation->condition << " (vertex "
        << (report.violation->vertex == kNoVertex ? std::string("-")
                                                  : g.label(report.violation->vertex))
        << ")\n";
    return kExitNo;
  }
  out << "ok kind=" << to_string(kind) << " spanning=" << (report.spanning ? "yes" : "no")
      << " ead=" << (report.ead ? "yes" : "no") << '\n';
  return kExitOk;
}

int run_gen(const std::string& reduction, const std::string& cnf_path,
            const std::string& variant, bool simple, bool random_mode, int n, int m,
            int tau, std::uint64_t seed, std::ostream& out) {
  if (random_mode) {
    const TemporalGraph g = random_temporal_graph(n, m, tau, seed);
    write_tg(out, g);
    return kExitOk;
  }
  if (reduction.empty() || cnf_path.empty()) {
    throw std::invalid_argument("gen needs --reduction with --cnf, or --random");
  }
  const CnfFormula phi = read_dimacs_file(cnf_path);
  const ElapsedVariant ev =
      variant == "el1" ? ElapsedVariant::One : ElapsedVariant::Zero;

  std::optional<ReductionInstance> instance;
  if (reduction == "ftmw") {
    instance = gen_ftmw_instance(phi, ev, simple);
  } else if (reduction == "st-toss") {
    if (variant == "el1") {
      throw std::invalid_argument("st-toss has a single time layout; drop --variant");
    }
    instance = gen_st_toss_instance(phi, simple);
  } else if (reduction == "ld-toss") {
    instance = gen_ld_toss_instance(phi, ev, simple);
  } else if (reduction == "mt-toss") {
    instance = gen_mt_toss_instance(phi, ev, simple);
  } else {
    throw std::invalid_argument("unknown reduction '" + reduction +
                                "' (ftmw|st-toss|ld-toss|mt-toss)");
  }
  write_tg(out, instance->graph);
  out << "root " << instance->graph.label(instance->root) << '\n';
  if (instance->arc_budget.has_value()) out << "k " << *instance->arc_budget << '\n';
  return kExitOk;
}

int run_oracle(const GraphArgs& args, const std::string& target,
               std::size_t max_walks, std::ostream& out) {
  const TgInstance instance = load_instance(args.path);
  const TemporalGraph& g = instance.graph;
  const VertexId root = resolve_root(instance, args.root);
  const DistanceKind kind = parse_kind_or_throw(args.kind);
  EnumerationOptions options;
  options.max_walks = max_walks;

  if (!target.empty()) {
    const VertexId sink = g.require_vertex(target);
    const auto walks = kind == DistanceKind::MinimumWaiting
                           ? enumerate_wait_walks(g, root, sink, options)
                           : enumerate_temporal_paths(g, root, sink, options);
    for (const TemporalWalk& w : walks) {
      out << g.label(w.origin);
      for (ArcId id : w.arc_ids) {
        const TemporalArc& a = g.arc(id);
        out << " -(" << a.t_start << ',' << a.t_arrive << ")-> " << g.label(a.head);
      }
      out << '\n';
    }
    return kExitOk;
  }

  const DistanceVector dist = oracle_single_source(g, root, kind, options);
  const EadVector ead = oracle_single_source_ead(g, root, kind, options);
  if (args.format == "json") {
    out << distances_to_json(g, dist, &ead);
  } else {
    print_distance_table(out, g, dist, &ead);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal temporal out/in-branchings and spanning subgraphs"};
  app.require_subcommand(1);

  GraphArgs ga;
  bool with_ead = false;
  int max_n = HardnessOptions{}.max_tob_vertices;
  int max_m = HardnessOptions{}.max_toss_arcs;
  std::optional<std::int64_t> k_flag;
  std::string branching_path;
  bool structure_only = false;
  std::string reduction, cnf_path, variant = "el0", target;
  bool simple = false, random_mode = false;
  int rnd_n = 10, rnd_m = 20, rnd_tau = 5;
  std::uint64_t seed = 1;
  std::size_t max_walks = EnumerationOptions{}.max_walks;

  bool verify_tib_flag = false;
  ga.kind.clear();

  auto add_common = [&](CLI::App* cmd, bool kind_required) {
    cmd->add_option("--graph", ga.path, "input .tg file")->required();
    cmd->add_option("--root", ga.root, "root vertex name (falls back to sidecar)");
    auto* kind = cmd->add_option("--kind", ga.kind, "distance kind EA|FT|LD|MT|MW|ST");
    if (kind_required) kind->required();
    cmd->add_option("--format", ga.format, "output format")
        ->check(CLI::IsMember({"table", "json", "dot"}));
  };

  auto* cmd_distances = app.add_subcommand("distances", "single-source distances");
  add_common(cmd_distances, true);
  cmd_distances->add_flag("--ead", with_ead, "also print earliest arrival of a realizing walk");

  auto* cmd_tob = app.add_subcommand("tob", "maximum temporal out-branching");
  add_common(cmd_tob, true);
  cmd_tob->add_option("--max-n", max_n, "vertex guard for the FT/MW oracle");

  auto* cmd_tib = app.add_subcommand("tib", "maximum temporal in-branching");
  add_common(cmd_tib, true);
  cmd_tib->add_option("--max-n", max_n, "vertex guard for the FT/MW oracle");

  auto* cmd_toss = app.add_subcommand("toss", "out-spanning subgraph decision");
  add_common(cmd_toss, true);
  cmd_toss->add_option("--k", k_flag, "arc budget (falls back to sidecar)");
  cmd_toss->add_option("--max-m", max_m, "arc guard for the subset search");

  auto* cmd_tiss = app.add_subcommand("tiss", "in-spanning subgraph decision");
  add_common(cmd_tiss, true);
  cmd_tiss->add_option("--k", k_flag, "arc budget (falls back to sidecar)");
  cmd_tiss->add_option("--max-m", max_m, "arc guard for the subset search");

  auto* cmd_verify = app.add_subcommand("verify", "check a branching certificate");
  add_common(cmd_verify, false);
  cmd_verify->add_option("--branching", branching_path, "branching JSON file")->required();
  cmd_verify->add_flag("--tib", verify_tib_flag, "verify as in-branching");
  cmd_verify->add_flag("--structure-only", structure_only,
                       "check only the branching structure, not distances");

  auto* cmd_gen = app.add_subcommand("gen", "instance generators");
  cmd_gen->add_option("--reduction", reduction, "ftmw|st-toss|ld-toss|mt-toss");
  cmd_gen->add_option("--cnf", cnf_path, "DIMACS CNF input");
  cmd_gen->add_option("--variant", variant, "elapsed-time variant")
      ->check(CLI::IsMember({"el0", "el1"}));
  cmd_gen->add_flag("--simple", simple, "one arc per ordered vertex pair");
  cmd_gen->add_flag("--random", random_mode, "random instance instead of a reduction");
  cmd_gen->add_option("--n", rnd_n, "random: vertex count");
  cmd_gen->add_option("--m", rnd_m, "random: arc count");
  cmd_gen->add_option("--tau", rnd_tau, "random: lifetime");
  cmd_gen->add_option("--seed", seed, "random: RNG seed");

  auto* cmd_oracle = app.add_subcommand("oracle", "exhaustive-enumeration distances");
  add_common(cmd_oracle, true);
  cmd_oracle->add_option("--target", target, "list walks to this vertex instead");
  cmd_oracle->add_option("--max-walks", max_walks, "enumeration cap");

  std::vector<const char*> argv;
  argv.push_back("tgb");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (cmd_distances->parsed()) return run_distances(ga, with_ead, out);
    if (cmd_tob->parsed()) return run_tob(ga, max_n, false, out, err);
    if (cmd_tib->parsed()) return run_tob(ga, max_n, true, out, err);
    if (cmd_toss->parsed()) return run_toss(ga, k_flag, max_m, false, out, err);
    if (cmd_tiss->parsed()) return run_toss(ga, k_flag, max_m, true, out, err);
    if (cmd_verify->parsed()) {
      return run_verify(ga, branching_path, verify_tib_flag, structure_only, out);
    }
    if (cmd_gen->parsed()) {
      return run_gen(reduction, cnf_path, variant, simple, random_mode, rnd_n, rnd_m,
                     rnd_tau, seed, out);
    }
    if (cmd_oracle->parsed()) return run_oracle(ga, target, max_walks, out);
  } catch (const SizeGuardError& e) {
    err << "size guard: " << e.what() << '\n';
    return kExitGuard;
  } catch (const OracleOverflowError& e) {
    err << "oracle overflow: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tgb::cli
