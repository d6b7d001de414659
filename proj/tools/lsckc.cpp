// lsckc: constrained k-center command line front end.
//
// Exit codes: 0 ok, 1 internal error, 2 bad input, 3 invalid instance,
// 4 infeasible, 5 solution with constraint violations.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsckc/baselines.hpp"
#include "lsckc/driver.hpp"
#include "lsckc/errors.hpp"
#include "lsckc/io.hpp"
#include "lsckc/solver.hpp"
#include "lsckc/synthgen.hpp"

using namespace lsckc;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInternal = 1, kInput = 2, kInvalid = 3, kInfeasible = 4, kViolations = 5 };

struct Source {
  std::string instance;
  std::string points;
  std::string constraints;
  int k = 0;
  std::string metric = "euclidean";
};

void add_source_options(CLI::App* cmd, Source& src) {
  auto* inst = cmd->add_option("--instance", src.instance, "instance JSON");
  auto* pts = cmd->add_option("--points", src.points, "points CSV");
  cmd->add_option("--constraints", src.constraints, "constraint file (CL/ML lines)")->needs(pts);
  cmd->add_option("--k", src.k, "number of centers (with --points)")->needs(pts);
  cmd->add_option("--metric", src.metric, "euclidean | manhattan | chebyshev")->needs(pts);
  inst->excludes(pts);
}

Instance load(const Source& src) {
  if (!src.instance.empty()) return load_instance_json(src.instance);
  if (src.points.empty()) throw InputError("one of --instance or --points is required");
  const auto metric = parse_metric(src.metric);
  if (!metric) throw InputError("unknown metric '" + src.metric + "'");
  return load_instance(src.points, src.constraints, src.k, *metric);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_text_file(out, text);
}

void fail_line(const char* category, const std::string& message, const json& extra = {}) {
  json j{{"error", category}, {"message", message}};
  if (extra.is_object()) j.update(extra);
  std::cerr << j.dump() << '\n';
}

struct Run {
  Solution solution;
  std::optional<double> wall_ms;
};

Run run_solver(const Instance& inst, const std::string& solver, SearchStrategy strategy,
               std::optional<double> eta, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  Run r;
  if (solver == "greedy")
    r.solution = greedy_constrained(inst);
  else if (solver == "gonzalez")
    r.solution = gonzalez_solution(inst);
  else if (eta)
    r.solution = solution_from_probe(inst, solve_with_threshold(inst, *eta), 1);
  else
    r.solution = solve(inst, strategy);
  if (timing)
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

int exit_for(const Solution& s) {
  if (s.guarantee == Guarantee::infeasible) return kInfeasible;
  return s.violations.empty() ? kOk : kViolations;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw InputError("not a number in list: '" + item + "'");
    }
  }
  return out;
}

std::vector<std::string> parse_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void check_solver(const std::string& name) {
  if (name != "lsckc" && name != "greedy" && name != "gonzalez")
    throw InputError("unknown solver '" + name + "'");
}

struct BenchOptions {
  std::string mode = "disjoint";
  std::string ratios = "2,4,6,8,10";
  std::string repetitions = "0,10,20,30,40,50";
  double intersect_ratio = 10;
  int seeds = 20;
  std::uint64_t seed = 1;
  std::size_t n = 1500;
  int k = 50;
  std::size_t dim = 2;
  std::string solvers = "lsckc,greedy";
  std::string out;
  bool timing = false;
};

struct Group {
  std::size_t runs = 0;
  std::size_t infeasible = 0;
  std::size_t violating = 0;
  double sum_radius = 0;
  double sum_ratio = 0;
  double max_ratio = 0;
};

int bench(const BenchOptions& o) {
  const auto solvers = parse_names(o.solvers);
  for (const auto& s : solvers) check_solver(s);
  if (o.mode != "disjoint" && o.mode != "intersected" && o.mode != "both")
    throw InputError("unknown bench mode '" + o.mode + "'");
  if (o.seeds < 1) throw InputError("--seeds must be at least 1");

  struct Cell {
    std::string mode;
    double ratio;
    double repetition;
  };
  std::vector<Cell> cells;
  if (o.mode != "intersected")
    for (double r : parse_list(o.ratios)) cells.push_back({"disjoint", r, 0});
  if (o.mode != "disjoint")
    for (double rep : parse_list(o.repetitions)) cells.push_back({"intersected", o.intersect_ratio, rep});

  std::ostringstream csv;
  csv << "# mode,constraint_ratio,repetition,seed," << csv_header() << '\n';
  std::map<std::tuple<std::string, double, double, std::string>, Group> groups;
  int status = kOk;
  for (const auto& cell : cells) {
    for (int s = 0; s < o.seeds; ++s) {
      GenParams prm;
      prm.n = o.n;
      prm.k = o.k;
      prm.dim = o.dim;
      prm.cl_ratio = cell.ratio / 100.0;
      prm.ml_ratio = cell.ratio / 100.0;
      prm.intersect_repetition = cell.repetition / 100.0;
      prm.seed = o.seed + static_cast<std::uint64_t>(s);
      const auto inst = generate(prm).instance;
      for (const auto& solver : solvers) {
        const auto run = run_solver(inst, solver, SearchStrategy::binary, std::nullopt, o.timing);
        const auto rep = make_report(inst, run.solution, solver, run.wall_ms);
        csv << cell.mode << ',' << format_number(cell.ratio) << ',' << format_number(cell.repetition) << ','
            << prm.seed << ',' << csv_row(rep) << '\n';
        auto& g = groups[{cell.mode, cell.ratio, cell.repetition, solver}];
        ++g.runs;
        if (!rep.radius) {
          ++g.infeasible;
          continue;
        }
        if (rep.violations > 0) {
          ++g.violating;
          if (solver == "lsckc") status = kViolations;
        }
        g.sum_radius += *rep.radius;
        if (rep.ratio) {
          g.sum_ratio += *rep.ratio;
          g.max_ratio = std::max(g.max_ratio, *rep.ratio);
        }
      }
    }
  }
  if (!o.out.empty()) write_text_file(o.out, csv.str());

  std::printf("%-12s %6s %6s %-9s %5s %10s %10s %10s %5s %5s\n", "mode", "ratio", "rep", "solver", "runs",
              "mean_r", "mean_rat", "max_rat", "inf", "viol");
  for (const auto& [key, g] : groups) {
    const auto& [mode, ratio, repetition, solver] = key;
    const double solved = static_cast<double>(g.runs - g.infeasible);
    std::printf("%-12s %6g %6g %-9s %5zu %10.6g %10.6g %10.6g %5zu %5zu\n", mode.c_str(), ratio, repetition,
                solver.c_str(), g.runs, solved > 0 ? g.sum_radius / solved : 0.0,
                solved > 0 ? g.sum_ratio / solved : 0.0, g.max_ratio, g.infeasible, g.violating);
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained k-center with cannot-link and must-link sets"};
  app.require_subcommand(1);

  Source solve_src;
  std::string solver = "lsckc", search = "binary", solve_out, format = "json";
  std::optional<double> eta;
  bool emit_assignment = false, solve_timing = false;
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance");
  add_source_options(solve_cmd, solve_src);
  solve_cmd->add_option("--solver", solver, "lsckc | greedy | gonzalez");
  solve_cmd->add_option("--search", search, "binary | linear");
  solve_cmd->add_option("--eta", eta, "run a single threshold probe at this eta");
  solve_cmd->add_option("--out", solve_out, "report path (stdout when absent)");
  solve_cmd->add_option("--format", format, "json | csv");
  solve_cmd->add_flag("--emit-assignment", emit_assignment, "include the per-point assignment");
  solve_cmd->add_flag("--timing", solve_timing, "record wall time (makes reports nondeterministic)");

  GenParams gen;
  std::string metric_name = "euclidean", gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "generate a planted instance");
  gen_cmd->add_option("--n", gen.n);
  gen_cmd->add_option("--k", gen.k);
  gen_cmd->add_option("--dim", gen.dim);
  gen_cmd->add_option("--r-plant", gen.r_plant);
  gen_cmd->add_option("--separation", gen.separation, "anchor spacing in units of r-plant (>= 4)");
  gen_cmd->add_option("--cl-ratio", gen.cl_ratio, "fraction of points in CL sets");
  gen_cmd->add_option("--ml-ratio", gen.ml_ratio, "fraction of points in ML sets");
  gen_cmd->add_option("--cl-size-min", gen.cl_size_min);
  gen_cmd->add_option("--cl-size-max", gen.cl_size_max);
  gen_cmd->add_option("--ml-size-min", gen.ml_size_min);
  gen_cmd->add_option("--ml-size-max", gen.ml_size_max);
  gen_cmd->add_option("--intersect-repetition", gen.intersect_repetition,
                      "fraction of CL points re-drawn into overlapping sets");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--metric", metric_name);
  gen_cmd->add_option("--out", gen_out, "instance JSON path (stdout when absent)");

  Source oracle_src;
  std::string oracle_out;
  auto* oracle_cmd = app.add_subcommand("oracle", "exact optimum by enumeration (tiny instances only)");
  add_source_options(oracle_cmd, oracle_src);
  oracle_cmd->add_option("--out", oracle_out);

  BenchOptions bo;
  auto* bench_cmd = app.add_subcommand("bench", "run solvers over generated instances");
  bench_cmd->add_option("--mode", bo.mode, "disjoint | intersected | both");
  bench_cmd->add_option("--ratios", bo.ratios, "constraint ratios in percent");
  bench_cmd->add_option("--repetitions", bo.repetitions, "intersect repetitions in percent");
  bench_cmd->add_option("--intersect-ratio", bo.intersect_ratio, "constraint ratio for intersected runs");
  bench_cmd->add_option("--seeds", bo.seeds, "instances per setting");
  bench_cmd->add_option("--seed", bo.seed, "first seed");
  bench_cmd->add_option("--n", bo.n);
  bench_cmd->add_option("--k", bo.k);
  bench_cmd->add_option("--dim", bo.dim);
  bench_cmd->add_option("--solvers", bo.solvers, "comma separated");
  bench_cmd->add_option("--out", bo.out, "CSV path");
  bench_cmd->add_flag("--timing", bo.timing);

  Source val_src;
  auto* val_cmd = app.add_subcommand("validate", "check an instance");
  add_source_options(val_cmd, val_src);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    fail_line("usage", e.what());
    return kInput;
  }

  try {
    if (*solve_cmd) {
      check_solver(solver);
      const auto strategy = parse_strategy(search);
      if (!strategy) throw InputError("unknown search '" + search + "'");
      if (format != "json" && format != "csv") throw InputError("unknown format '" + format + "'");
      Instance inst;
      try {
        inst = load(solve_src);
      } catch (const ValidationError& e) {
        fail_line("validation", e.what(), {{"errors", e.errors()}});
        return kInvalid;
      }
      const auto run = run_solver(inst, solver, *strategy, eta, solve_timing);
      const auto rep = make_report(inst, run.solution, solver, run.wall_ms, emit_assignment);
      if (format == "json") {
        emit(dump_json(report_to_json(rep)), solve_out);
      } else if (solve_out.empty() || solve_out == "-") {
        std::cout << "# " << csv_header() << '\n' << csv_row(rep) << '\n';
      } else {
        write_report(rep, solve_out, ReportFormat::csv_row);
      }
      return exit_for(run.solution);
    }
    if (*gen_cmd) {
      const auto m = parse_metric(metric_name);
      if (!m) throw InputError("unknown metric '" + metric_name + "'");
      gen.metric = *m;
      emit(dump_json(instance_to_json(generate(gen).instance)), gen_out);
      return kOk;
    }
    if (*oracle_cmd) {
      const auto inst = load(oracle_src);
      const auto r = exact_opt(inst);
      json j{{"feasible", r.feasible}, {"n", inst.data.size()}, {"k", inst.k}};
      j["radius"] = r.feasible ? json(r.radius) : json(nullptr);
      j["centers"] = r.centers;
      if (r.feasible) j["assignment"] = r.assignment.center_of;
      j["errors"] = r.errors;
      emit(dump_json(j), oracle_out);
      return r.feasible ? kOk : kInfeasible;
    }
    if (*bench_cmd) return bench(bo);
    if (*val_cmd) {
      try {
        const auto inst = load(val_src);
        const auto d = digest(inst);
        std::cout << dump_json(json{{"valid", true},
                                    {"n", d.n},
                                    {"k", d.k},
                                    {"dim", d.dim},
                                    {"metric", d.metric},
                                    {"num_cl", d.num_cl},
                                    {"num_ml", d.num_ml},
                                    {"disjoint_cl", d.disjoint_cl}});
        return kOk;
      } catch (const ValidationError& e) {
        std::cout << dump_json(json{{"valid", false}, {"errors", e.errors()}});
        return kInvalid;
      }
    }
  } catch (const ParseError& e) {
    fail_line("parse", e.what(), e.line() > 0 ? json{{"line", e.line()}} : json{});
    return kInput;
  } catch (const ValidationError& e) {
    fail_line("validation", e.what(), {{"errors", e.errors()}});
    return kInvalid;
  } catch (const InfeasibleError& e) {
    fail_line("infeasible", e.what());
    return kInfeasible;
  } catch (const InputError& e) {
    fail_line("input", e.what());
    return kInput;
  } catch (const std::exception& e) {
    fail_line("internal", e.what());
    return kInternal;
  }
  return kInternal;
}
