#include "chordtim/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chordtim/analysis.hpp"
#include "chordtim/converse.hpp"
#include "chordtim/demand.hpp"
#include "chordtim/errors.hpp"
#include "chordtim/json_io.hpp"
#include "chordtim/onedim.hpp"
#include "chordtim/region.hpp"
#include "chordtim/scheduler.hpp"

namespace chordtim::cli {

namespace {

struct Options {
  std::string topology_path;
  std::string messages_path;
  std::string rates_path;
  std::string layout_path;
  std::string schedule_path;
  std::size_t max_size = 24;
  bool max_size_given = false;
  bool all_cliques = false;
  bool vertices = false;
  bool certify = false;
  bool pretty = false;
  bool json = true;
  std::uint64_t seed = 0;
  std::size_t cycle_n = 0;
  std::size_t num_sources = 5;
  std::size_t num_destinations = 5;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json read_json(const std::string& path) { return parse_json_text(read_file(path)); }

struct Input {
  Json document;
  TopologyGraph graph;
  MessageSet messages;
};

Input load(const Options& opt) {
  Input in;
  in.document = read_json(opt.topology_path);
  in.graph = topology_from_json(in.document);
  in.messages = opt.messages_path.empty() ? all_unicast(in.graph)
                                          : message_set_from_json(read_json(opt.messages_path), in.graph);
  return in;
}

void emit(std::ostream& out, const Json& j, const Options& opt) { out << (opt.pretty ? j.dump(2) : j.dump()) << '\n'; }

void require_size(std::size_t size, const Options& opt, const char* what) {
  if (size > opt.max_size) throw SizeLimitExceeded(what, size, opt.max_size);
}

int cmd_analyze(const Options& opt, std::ostream& out) {
  const Input in = load(opt);
  require_size(in.messages.size(), opt, "analyze");
  const auto witness = find_chordless_long_cycle(in.graph);
  const ConflictGraph cg = conflict_graph(in.graph, in.messages);
  const RegionPolytope rp = build_region(in.graph, in.messages);

  Json report;
  report["chordal"] = !witness.has_value();
  if (witness) report["witness"] = to_json(*witness);
  Json stats;
  stats["vertices"] = cg.size();
  stats["edges"] = cg.graph.num_edges();
  stats["clique_count"] = rp.inequalities.size();
  stats["independence_number"] = independence_number(cg);
  stats["chromatic_number"] = chromatic_number(cg);
  report["conflict_stats"] = std::move(stats);
  Json region;
  region["messages"] = in.messages.size();
  region["inequalities"] = rp.inequalities.size();
  region["valid_capacity_region"] = rp.chordal;
  report["region"] = std::move(region);
  if (witness && opt.certify) report["certificate"] = to_json(certify_suboptimality(in.graph));
  emit(out, report, opt);
  return witness ? kNotChordal : kOk;
}

int cmd_region(const Options& opt, std::ostream& out, std::ostream& err) {
  const Input in = load(opt);
  require_size(in.messages.size(), opt, "region");
  const RegionPolytope rp =
      build_region(in.graph, in.messages, opt.all_cliques ? CliqueFamily::all : CliqueFamily::maximal);
  Json j = to_json(rp);
  if (!rp.chordal) {
    j["warning"] = "not a valid capacity region: topology not chordal";
    err << "warning: topology is not chordal; the clique polytope only bounds orthogonal access\n";
  }
  if (opt.vertices) {
    // Vertex enumeration is exponential; it keeps its own cap unless --max-size is explicit.
    const std::size_t limit = opt.max_size_given ? opt.max_size : kDefaultVertexLimit;
    const auto verts = enumerate_vertices(rp, limit);
    j["vertices"] = to_json(verts);
    j["integral"] = integral_vertices_check(rp, limit);
  }
  emit(out, j, opt);
  return rp.chordal ? kOk : kNotChordal;
}

int cmd_schedule(const Options& opt, std::ostream& out, std::ostream& err) {
  const Input in = load(opt);
  if (opt.rates_path.empty()) throw ParseError("schedule needs --rates");
  const RateTuple rates = rates_from_json(read_json(opt.rates_path), in.messages);
  try {
    const Schedule s = schedule(in.graph, in.messages, rates, opt.max_size);
    if (auto problem = check_schedule(in.graph, in.messages, rates, s)) {
      throw std::logic_error("synthesized schedule failed verification: " + *problem);
    }
    emit(out, to_json(s), opt);
    return kOk;
  } catch (const InfeasibleSchedule& e) {
    Json diag;
    diag["error"] = "infeasible";
    diag["chordal"] = e.chordal();
    diag["required_time"] = to_json(e.required_time());
    diag["gap"] = to_json(e.gap());
    emit(out, diag, opt);
    err << "error: " << e.what() << (e.chordal() ? " (rates lie outside the capacity region)" : "") << '\n';
    return kInfeasible;
  }
}

int cmd_certify(const Options& opt, std::ostream& out) {
  const Input in = load(opt);
  emit(out, to_json(certify_suboptimality(in.graph)), opt);
  return kOk;
}

int cmd_gen_cycle(const Options& opt, std::ostream& out) {
  emit(out, to_json(gen_cycle(opt.cycle_n)), opt);
  return kOk;
}

int cmd_gen_convex1d(const Options& opt, std::ostream& out) {
  const Convex1dInstance inst = gen_convex1d(opt.seed, opt.num_sources, opt.num_destinations);
  Json j = to_json(inst.graph);
  j["layout"] = to_json(inst.layout);
  emit(out, j, opt);
  return kOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const Input in = load(opt);
  Json report;
  bool failed = false;

  if (is_chordal(in.graph)) {
    const auto r = verify_clique_demand_acyclicity(in.graph, opt.max_size);
    failed |= !r.passed;
    report["clique_demand"] = to_json(r);
  } else {
    Json na;
    na["status"] = "not_applicable";
    na["reason"] = "topology not chordal";
    report["clique_demand"] = std::move(na);
  }

  std::optional<LineLayout> layout;
  if (!opt.layout_path.empty()) {
    layout = layout_from_json(read_json(opt.layout_path));
  } else if (in.document.contains("layout")) {
    layout = layout_from_json(in.document["layout"]);
  }
  if (layout) {
    const ConvexityReport r = convexity_implies_chordal_check(in.graph, *layout);
    failed |= r.status == ConvexityReport::Status::fail;
    report["convexity"] = to_json(r);
  }

  if (!opt.schedule_path.empty()) {
    const Schedule s = schedule_from_json(read_json(opt.schedule_path));
    const RateTuple rates =
        opt.rates_path.empty() ? RateTuple{} : rates_from_json(read_json(opt.rates_path), in.messages);
    const auto problem = check_schedule(in.graph, in.messages, rates, s);
    Json sj;
    sj["valid"] = !problem.has_value();
    if (problem) sj["reason"] = *problem;
    failed |= problem.has_value();
    report["schedule"] = std::move(sj);
  }

  emit(out, report, opt);
  return failed ? kVerificationFailed : kOk;
}

void add_common(CLI::App* cmd, Options& opt, bool with_topology = true) {
  if (with_topology) cmd->add_option("topology", opt.topology_path, "Topology JSON file")->required();
  cmd->add_option("--max-size", opt.max_size, "Cap on message count for exhaustive routines")
      ->capture_default_str()
      ->each([&opt](const std::string&) { opt.max_size_given = true; });
  cmd->add_flag("--pretty", opt.pretty, "Indented JSON output");
  cmd->add_flag("--json", opt.json, "JSON output (default)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Chordality, capacity regions and orthogonal-access schedules for TIM / index coding topologies",
               "chordtim"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Chordality decision and conflict-graph statistics");
  add_common(analyze, opt);
  analyze->add_option("--messages", opt.messages_path, "Message-set JSON (default: all-unicast)");
  analyze->add_flag("--certify", opt.certify, "Attach a suboptimality certificate when not chordal");

  auto* region = app.add_subcommand("region", "Clique-inequality rate region");
  add_common(region, opt);
  region->add_option("--messages", opt.messages_path, "Message-set JSON (default: all-unicast)");
  region->add_flag("--all-cliques", opt.all_cliques, "Emit one inequality per clique, not just maximal ones");
  region->add_flag("--vertices", opt.vertices, "Enumerate vertices exactly and report integrality");

  auto* sched = app.add_subcommand("schedule", "Orthogonal-access schedule for a rate tuple");
  add_common(sched, opt);
  sched->add_option("--messages", opt.messages_path, "Message-set JSON (default: all-unicast)");
  sched->add_option("--rates", opt.rates_path, "Rates JSON (rational strings)")->required();

  auto* certify = app.add_subcommand("certify", "Certificate that orthogonal access is suboptimal");
  add_common(certify, opt);

  auto* gen = app.add_subcommand("gen", "Generate topologies");
  gen->require_subcommand(1);
  auto* gen_cyc = gen->add_subcommand("cycle", "Cyclic network: a chordless 2n-cycle");
  add_common(gen_cyc, opt, false);
  gen_cyc->add_option("-n,--n", opt.cycle_n, "Number of sources (= destinations)")->required();
  auto* gen_cvx = gen->add_subcommand("convex1d", "Random one-dimensional source-convex network");
  add_common(gen_cvx, opt, false);
  gen_cvx->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  gen_cvx->add_option("--sources", opt.num_sources, "Number of sources")->capture_default_str();
  gen_cvx->add_option("--destinations", opt.num_destinations, "Number of destinations")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Clique demand-graph acyclicity, convexity and schedule checks");
  add_common(verify, opt);
  verify->add_option("--messages", opt.messages_path, "Message-set JSON for --schedule (default: all-unicast)");
  verify->add_option("--layout", opt.layout_path, "Layout JSON (default: the topology file's \"layout\")");
  verify->add_option("--schedule", opt.schedule_path, "Schedule JSON to check");
  verify->add_option("--rates", opt.rates_path, "Rates the schedule must deliver");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(opt, out);
    if (*region) return cmd_region(opt, out, err);
    if (*sched) return cmd_schedule(opt, out, err);
    if (*certify) return cmd_certify(opt, out);
    if (*gen_cyc) return cmd_gen_cycle(opt, out);
    if (*gen_cvx) return cmd_gen_convex1d(opt, out);
    if (*verify) return cmd_verify(opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const CertificateError& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace chordtim::cli
