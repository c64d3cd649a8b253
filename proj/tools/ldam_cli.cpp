// Command-line surface over the labeling library: family generators, the
// cataloged constructions, the verifier, exact solvers, and the sweep that
// re-checks every cataloged chromatic value and reports discrepancies.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ldam/constructions.hpp"
#include "ldam/families.hpp"
#include "ldam/io.hpp"
#include "ldam/solver.hpp"
#include "ldam/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiscrepancy = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

struct Range {
  int lo = 0, hi = 0;
};

// "5" or "2..30"
Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected an integer or lo..hi range, got \"" + text + "\"");
  }
}

struct SpecFlags {
  std::string family;
  std::string n, m, k, parts;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& flags, bool required_family = true) {
  auto* fam = cmd->add_option("--family", flags.family,
                              "family name (Star, Bistar, DoubleStar, Turan, ...)");
  if (required_family) fam->required();
  cmd->add_option("--n", flags.n, "n parameter (or lo..hi range for sweep)");
  cmd->add_option("--m", flags.m, "m parameter (or range)");
  cmd->add_option("--k", flags.k, "k parameter (or range)");
  cmd->add_option("--parts", flags.parts, "part sizes x,y,z (or one range applied to each)");
}

std::vector<int> parse_parts_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_range(item).lo);
  return out;
}

ldam::FamilySpec single_spec(const SpecFlags& flags) {
  auto family = ldam::family_from_name(flags.family);
  if (!family) throw CLI::ValidationError("unknown family \"" + flags.family + "\"");
  auto need = [&](const std::string& value, const char* name) {
    if (value.empty())
      throw CLI::ValidationError(std::string("family ") + flags.family + " needs --" + name);
    return parse_range(value).lo;
  };
  switch (*family) {
    case ldam::Family::double_star:
    case ldam::Family::complete_bipartite:
      return {*family, {need(flags.m, "m"), need(flags.n, "n")}};
    case ldam::Family::complete_tripartite: {
      if (flags.parts.empty()) throw CLI::ValidationError("CompleteTripartite needs --parts x,y,z");
      auto parts = parse_parts_list(flags.parts);
      if (parts.size() != 3) throw CLI::ValidationError("--parts must list exactly x,y,z");
      return {*family, parts};
    }
    case ldam::Family::complete_multipartite_equal:
      return {*family, {need(flags.k, "k"), need(flags.n, "n")}};
    case ldam::Family::turan:
      return {*family, {need(flags.n, "n"), need(flags.k, "k")}};
    case ldam::Family::star_corona_null:
    case ldam::Family::complete_corona_null:
    case ldam::Family::friendship_corona_null:
      return {*family, {need(flags.n, "n"), need(flags.m, "m")}};
    default:
      return {*family, {need(flags.n, "n")}};
  }
}

std::vector<ldam::FamilySpec> sweep_specs(const SpecFlags& flags) {
  if (flags.family.empty()) return ldam::default_sweep_specs();
  auto family = ldam::family_from_name(flags.family);
  if (!family) throw CLI::ValidationError("unknown family \"" + flags.family + "\"");
  auto range_of = [&](const std::string& value, const char* name) {
    if (value.empty())
      throw CLI::ValidationError(std::string("family ") + flags.family + " needs --" + name);
    return parse_range(value);
  };
  std::vector<ldam::FamilySpec> specs;
  switch (*family) {
    case ldam::Family::double_star:
    case ldam::Family::complete_bipartite: {
      Range rm = range_of(flags.m, "m"), rn = range_of(flags.n, "n");
      for (int m = rm.lo; m <= rm.hi; ++m)
        for (int n = rn.lo; n <= rn.hi; ++n) specs.push_back({*family, {m, n}});
      break;
    }
    case ldam::Family::complete_tripartite: {
      if (flags.parts.empty()) throw CLI::ValidationError("CompleteTripartite needs --parts");
      Range r = parse_range(flags.parts);
      for (int x = r.lo; x <= r.hi; ++x)
        for (int y = r.lo; y <= r.hi; ++y)
          for (int z = r.lo; z <= r.hi; ++z) specs.push_back({*family, {x, y, z}});
      break;
    }
    case ldam::Family::complete_multipartite_equal: {
      Range rk = range_of(flags.k, "k"), rn = range_of(flags.n, "n");
      for (int k = rk.lo; k <= rk.hi; ++k)
        for (int n = rn.lo; n <= rn.hi; ++n) specs.push_back({*family, {k, n}});
      break;
    }
    case ldam::Family::turan: {
      Range rn = range_of(flags.n, "n"), rk = range_of(flags.k, "k");
      for (int n = rn.lo; n <= rn.hi; ++n)
        for (int k = rk.lo; k <= rk.hi; ++k) specs.push_back({*family, {n, k}});
      break;
    }
    case ldam::Family::star_corona_null:
    case ldam::Family::complete_corona_null:
    case ldam::Family::friendship_corona_null: {
      Range rn = range_of(flags.n, "n"), rm = range_of(flags.m, "m");
      for (int n = rn.lo; n <= rn.hi; ++n)
        for (int m = rm.lo; m <= rm.hi; ++m) specs.push_back({*family, {n, m}});
      break;
    }
    default: {
      Range rn = range_of(flags.n, "n");
      for (int n = rn.lo; n <= rn.hi; ++n) specs.push_back({*family, {n}});
    }
  }
  return specs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local distance antimagic labelings: generators, constructions, verifier, solver"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a family graph as an edge list");
  SpecFlags gen_flags;
  std::string gen_out, gen_layout;
  add_spec_flags(gen, gen_flags);
  gen->add_option("--out", gen_out, "output path (default stdout)");
  gen->add_option("--layout", gen_layout, "also write the role layout to this path");

  // construct
  auto* con = app.add_subcommand("construct", "run the cataloged labeling construction");
  SpecFlags con_flags;
  std::string con_out;
  add_spec_flags(con, con_flags);
  con->add_option("--out", con_out, "write the labeling file here (claim record goes to stdout)");

  // verify
  auto* ver = app.add_subcommand("verify", "check a labeling against a graph");
  std::string ver_graph, ver_labeling;
  ver->add_option("--graph", ver_graph, "edge-list file")->required();
  ver->add_option("--labeling", ver_labeling, "labeling file")->required();

  // chi-ld
  auto* cld = app.add_subcommand("chi-ld", "exact chi_ld by exhaustive pruned search");
  std::string cld_graph;
  ldam::SearchLimits cld_limits;
  std::uint64_t cld_nodes = 0;
  long cld_time_ms = 0;
  cld->add_option("--graph", cld_graph, "edge-list file")->required();
  cld->add_option("--max-vertices", cld_limits.max_vertices, "exhaustive cap (default 10)");
  cld->add_option("--node-budget", cld_nodes, "abort after this many search nodes");
  cld->add_option("--time-budget-ms", cld_time_ms, "abort after this many milliseconds");
  cld->add_option("--workers", cld_limits.workers, "parallel workers (default 1)");
  cld->add_flag("--twin-reduction", cld_limits.twin_reduction,
                "canonical label order inside false-twin classes");

  // chi
  auto* chi = app.add_subcommand("chi", "exact chromatic number");
  std::string chi_graph;
  chi->add_option("--graph", chi_graph, "edge-list file")->required();

  // sweep
  auto* swp = app.add_subcommand("sweep", "verify cataloged claims over parameter grids");
  SpecFlags swp_flags;
  std::string swp_out;
  bool swp_solver = false, swp_no_repair = false;
  int swp_max_vertices = 10;
  add_spec_flags(swp, swp_flags, /*required_family=*/false);
  bool swp_twin = false;
  swp->add_option("--out", swp_out, "report path (default $LDAM_REPORT_DIR/sweep.json or stdout)");
  swp->add_flag("--solver", swp_solver, "also solve exactly where the graph fits the cap");
  swp->add_option("--max-vertices", swp_max_vertices, "solver cap when --solver is given");
  swp->add_flag("--twin-reduction", swp_twin, "solver symmetry reduction over false-twin classes");
  swp->add_flag("--no-repair", swp_no_repair, "skip attainability search on discrepancy rows");

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "render a graph (optionally labeled) as DOT");
  std::string dot_graph, dot_labeling, dot_out;
  SpecFlags dot_flags;
  bool dot_construct = false;
  dot->add_option("--graph", dot_graph, "edge-list file");
  dot->add_option("--labeling", dot_labeling, "labeling file");
  add_spec_flags(dot, dot_flags, /*required_family=*/false);
  dot->add_flag("--construct", dot_construct, "label a family graph with its construction");
  dot->add_option("--out", dot_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      ldam::BuiltGraph built = ldam::build_graph(single_spec(gen_flags));
      write_output(gen_out, ldam::write_edge_list(built.graph));
      if (!gen_layout.empty()) write_output(gen_layout, ldam::write_layout(built.layout));
      return kExitOk;
    }

    if (con->parsed()) {
      ldam::FamilySpec spec = single_spec(con_flags);
      ldam::ConstructionResult result = ldam::construct(spec);
      ldam::BuiltGraph built = ldam::build_graph(spec);
      ldam::ColorReport report = ldam::verify_local(built.graph, result.labeling);
      if (!con_out.empty()) write_output(con_out, ldam::write_labeling(result.labeling));
      nlohmann::json j = ldam::spec_json(spec);
      j["claim"] = ldam::claim_json(result.claim);
      j["case_tag"] = result.case_tag;
      j["labeling"] = result.labeling;
      j["color_count"] = report.color_count;
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    }

    if (ver->parsed()) {
      ldam::Graph g = ldam::parse_edge_list(read_file(ver_graph));
      ldam::Labeling f = ldam::parse_labeling(read_file(ver_labeling));
      ldam::ColorReport report = ldam::verify_local(g, f);
      std::cout << ldam::color_report_json(report).dump(2) << '\n';
      return report.valid ? kExitOk : kExitDiscrepancy;
    }

    if (cld->parsed()) {
      ldam::Graph g = ldam::parse_edge_list(read_file(cld_graph));
      if (cld_nodes > 0) cld_limits.node_budget = cld_nodes;
      if (cld_time_ms > 0) cld_limits.time_budget = std::chrono::milliseconds(cld_time_ms);
      ldam::SolveResult result = ldam::chi_ld_exact(g, cld_limits);
      std::cout << ldam::solve_result_json(result).dump(2) << '\n';
      return kExitOk;
    }

    if (chi->parsed()) {
      ldam::Graph g = ldam::parse_edge_list(read_file(chi_graph));
      std::cout << ldam::chi_exact(g) << '\n';
      return kExitOk;
    }

    if (swp->parsed()) {
      ldam::SweepOptions options;
      options.use_solver = swp_solver;
      options.limits.max_vertices = swp_max_vertices;
      options.limits.twin_reduction = swp_twin;
      options.attempt_repair = !swp_no_repair;
      ldam::SweepReport report = ldam::run_sweep(sweep_specs(swp_flags), options);
      std::string out = swp_out;
      if (out.empty()) {
        if (const char* dir = std::getenv("LDAM_REPORT_DIR"))
          out = std::string(dir) + "/sweep.json";
      }
      write_output(out, ldam::sweep_report_json(report).dump(2) + "\n");
      std::cerr << "sweep: " << report.count(ldam::SweepStatus::confirmed) << " confirmed, "
                << report.count(ldam::SweepStatus::upper_bound_only) << " upper-bound-only, "
                << report.count(ldam::SweepStatus::discrepancy) << " discrepancies\n";
      return report.any_discrepancy() ? kExitDiscrepancy : kExitOk;
    }

    if (dot->parsed()) {
      if (!dot_graph.empty()) {
        ldam::Graph g = ldam::parse_edge_list(read_file(dot_graph));
        if (!dot_labeling.empty()) {
          ldam::Labeling f = ldam::parse_labeling(read_file(dot_labeling));
          write_output(dot_out, ldam::export_dot(g, &f));
        } else {
          write_output(dot_out, ldam::export_dot(g));
        }
        return kExitOk;
      }
      if (dot_flags.family.empty())
        throw CLI::ValidationError("export-dot needs --graph or --family");
      ldam::FamilySpec spec = single_spec(dot_flags);
      ldam::BuiltGraph built = ldam::build_graph(spec);
      if (dot_construct) {
        ldam::Labeling f = ldam::construct(spec).labeling;
        write_output(dot_out, ldam::export_dot(built.graph, &f));
      } else {
        write_output(dot_out, ldam::export_dot(built.graph));
      }
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ldam::DiscrepancyError& e) {
    nlohmann::json j = ldam::spec_json(e.spec());
    j["claim"] = ldam::claim_json(e.claim());
    j["labeling"] = e.labeling();
    j["color_report"] = ldam::color_report_json(e.report());
    j["error"] = e.what();
    std::cout << j.dump(2) << '\n';
    std::cerr << "discrepancy: " << e.what() << '\n';
    return kExitDiscrepancy;
  } catch (const ldam::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ldam::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
