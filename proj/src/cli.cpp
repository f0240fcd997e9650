#include "blmp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "blmp/bounds.hpp"
#include "blmp/instance_io.hpp"
#include "blmp/reductions.hpp"
#include "blmp/refine.hpp"

namespace blmp {

namespace {

constexpr std::string_view kHeuristics[] = {"rand", "sort", "swm", "epx", "repx", "qepx", "tsp"};

bool is_stochastic(std::string_view algo) { return algo == "epx" || algo == "qepx"; }

template <typename F>
auto timed(F&& f, double& seconds) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text.front() == '-') {
    throw ValidationError(std::string("invalid ") + what + " '" + text + "'");
  }
  return v;
}

struct HeuristicFlags {
  HeuristicConfig config;
  std::string tour_method = "mst_double";

  void attach(CLI::App& cmd) {
    cmd.add_option("--swm-window", config.swm_window, "SWM window side")->capture_default_str();
    cmd.add_option("--swm-step", config.swm_step, "SWM window step")->capture_default_str();
    cmd.add_option("--repx-lookahead", config.repx_lookahead_rows, "REPX look-ahead rows")
        ->capture_default_str();
    cmd.add_flag("--qepx-orientations", config.qepx_orientations,
                 "let QEPX also rotate quadrant blocks");
    const std::map<std::string, QepxSplit> splits{{"input", QepxSplit::input}, {"sorted", QepxSplit::sorted}};
    cmd.add_option("--qepx-split", config.qepx_split, "QEPX quarters from input|sorted order")
        ->transform(CLI::CheckedTransformer(splits).description(""))
        ->type_name("TEXT:{input,sorted}")
        ->default_str("sorted");
    cmd.add_option("--tsp-method", tour_method, "tour construction for --algo tsp")
        ->check(CLI::IsMember({"mst_double", "nn_2opt"}))
        ->capture_default_str();
  }
};

std::optional<Cost> maybe_lower_bound(bool wanted, const Instance& inst, const DistanceOracle& dist) {
  if (!wanted || inst.side < 2) return std::nullopt;
  return lower_bound(inst.probes, inst.side, dist);
}

void print_report(std::ostream& out, const SolveReport& r) {
  out << kReportHeader << '\n' << format_report_row(r) << '\n';
}

// --- generate --------------------------------------------------------------

struct GenerateArgs {
  std::optional<std::size_t> side;
  std::optional<std::string> reduction;
  std::size_t length = 25;
  std::string alphabet = "ACGT";
  std::optional<std::uint64_t> seed;
  std::size_t n = 4;
  std::size_t htsp_length = 1;
  std::string out_path;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  if (a.side.has_value() == a.reduction.has_value()) {
    throw ValidationError("generate needs exactly one of --side or --reduction");
  }
  if (a.side) {
    if (!a.seed) throw ValidationError("--seed is required for random instances");
    if (*a.side == 0) throw ValidationError("--side must be positive");
    if (a.length == 0) throw ValidationError("--length must be positive");
    Alphabet alphabet(a.alphabet);
    ProbeSet probes = random_probes(*a.side * *a.side, a.length, alphabet, *a.seed);
    write_instance(a.out_path, probes, *a.side);
    out << "wrote " << probes.size() << " probes of length " << a.length << " to " << a.out_path << '\n';
    return kExitOk;
  }
  const ReductionKind kind = parse_reduction_kind(*a.reduction);
  std::optional<ReductionInstance> inst;
  switch (kind) {
    case ReductionKind::alternate_special:
      inst = build_alternate_special(a.n);
      break;
    case ReductionKind::main_blmp:
    case ReductionKind::alternate_blmp: {
      if (!a.seed) throw ValidationError("--seed is required: the HTSP input strings are random");
      ProbeSet htsp = random_binary_strings(a.n, a.htsp_length, *a.seed);
      inst = kind == ReductionKind::main_blmp ? build_main_blmp(htsp) : build_alternate_blmp(htsp);
      break;
    }
    case ReductionKind::padded_4n_htsp:
    case ReductionKind::four_segment_htsp:
      throw ValidationError(std::string(reduction_kind_name(kind)) +
                            " produces a tour instance, not a grid instance; use the library API");
  }
  const auto side = static_cast<std::size_t>(inst->param("side"));
  write_instance(a.out_path, inst->probes, side);
  out << "wrote " << reduction_kind_name(kind) << " instance: " << inst->probes.size()
      << " probes of length " << inst->probes.length() << " to " << a.out_path << '\n';
  return kExitOk;
}

// --- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string in_path;
  std::string algo;
  std::string out_path;
  std::string report_path;
  std::optional<std::uint64_t> seed;
  std::string test_case = "-";
  bool with_lower_bound = false;
  bool no_timing = false;
  HeuristicFlags flags;
};

int cmd_solve(SolveArgs& a, std::ostream& out) {
  if (!is_known_heuristic(a.algo)) throw ValidationError("unknown algorithm '" + a.algo + "'");
  if (is_stochastic(a.algo) && !a.seed) throw ValidationError("--seed is required for --algo " + a.algo);
  a.flags.config.seed = a.seed.value_or(0);
  a.flags.config.validate();
  const Instance inst = read_instance(a.in_path);
  const DistanceOracle dist(inst.probes);

  SolveReport report;
  report.test_case = a.test_case;
  report.probes = inst.probes.size();
  report.lower_bound = maybe_lower_bound(a.with_lower_bound, inst, dist);
  report.init_cost = placement_cost(Placement::identity(inst.side), dist);
  report.algorithm = a.algo;
  report.seed = a.flags.config.seed;
  double seconds = 0;
  const Placement placed = timed(
      [&] {
        return run_heuristic(a.algo, inst.probes, inst.side, dist, a.flags.config,
                             parse_tour_method(a.flags.tour_method));
      },
      seconds);
  validate_placement(placed, inst.probes.size());
  report.final_cost = placement_cost(placed, dist);
  if (!a.no_timing) report.wall_time_seconds = seconds;

  if (!a.out_path.empty()) write_placement(a.out_path, placed);
  if (!a.report_path.empty()) append_report(a.report_path, {report});
  print_report(out, report);
  return kExitOk;
}

// --- refine ----------------------------------------------------------------

// "hra+rhra" runs RHRA on the HRA output.
RefineResult refine_by_mode(const std::string& mode, const Placement& start, const ProbeSet& probes,
                            const DistanceOracle& dist, const RefinementConfig& config) {
  if (mode == "hra") return hra(start, probes, dist, config);
  if (mode == "rhra") return rhra(start, probes, dist, config);
  if (mode == "hra+rhra") {
    RefineResult first = hra(start, probes, dist, config);
    RefineResult second = rhra(first.placement, probes, dist, config);
    second.initial_cost = first.initial_cost;
    second.trace.insert(second.trace.begin(), first.trace.begin(), first.trace.end() - 1);
    second.evaluations += first.evaluations;
    return second;
  }
  throw ValidationError("unknown refinement mode '" + mode + "' (expected hra, rhra or hra+rhra)");
}

struct RefineArgs {
  std::string in_path;
  std::string placement_path;
  std::string mode = "rhra";
  std::size_t degree = 2;
  std::size_t iterations = 350;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string report_path;
  std::string test_case = "-";
  bool with_lower_bound = false;
  bool no_timing = false;
};

int cmd_refine(const RefineArgs& a, std::ostream& out) {
  if (a.mode != "hra" && !a.seed) throw ValidationError("--seed is required for --mode " + a.mode);
  const Instance inst = read_instance(a.in_path);
  const Placement start = read_placement(a.placement_path, inst.side);
  const DistanceOracle dist(inst.probes);
  RefinementConfig config;
  config.degree = a.degree;
  config.rhra_iterations = a.iterations;
  config.seed = a.seed.value_or(0);

  SolveReport report;
  report.test_case = a.test_case;
  report.probes = inst.probes.size();
  report.lower_bound = maybe_lower_bound(a.with_lower_bound, inst, dist);
  report.algorithm = a.mode;
  report.seed = config.seed;
  double seconds = 0;
  const RefineResult result =
      timed([&] { return refine_by_mode(a.mode, start, inst.probes, dist, config); }, seconds);
  validate_placement(result.placement, inst.probes.size());
  report.init_cost = result.initial_cost;
  report.final_cost = placement_cost(result.placement, dist);
  if (!a.no_timing) report.wall_time_seconds = seconds;

  if (!a.out_path.empty()) write_placement(a.out_path, result.placement);
  if (!a.report_path.empty()) append_report(a.report_path, {report});
  print_report(out, report);
  return kExitOk;
}

// --- bench -----------------------------------------------------------------

struct BenchArgs {
  std::string sizes;
  std::string algos;
  std::string seeds;
  std::string out_path;
  std::size_t length = 25;
  std::string alphabet = "ACGT";
  std::string refine = "none";
  std::size_t degree = 2;
  std::size_t iterations = 350;
  std::size_t lower_bound_max = 16384;
  bool no_timing = false;
  HeuristicFlags flags;
};

int cmd_bench(BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::size_t> sizes;
  for (const auto& s : split_list(a.sizes)) {
    const auto probes = static_cast<std::size_t>(parse_u64(s, "size"));
    grid_side_for(probes);
    sizes.push_back(probes);
  }
  const auto algos = split_list(a.algos);
  for (const auto& algo : algos) {
    if (!is_known_heuristic(algo)) throw ValidationError("unknown algorithm '" + algo + "'");
  }
  std::vector<std::uint64_t> seeds;
  for (const auto& s : split_list(a.seeds)) seeds.push_back(parse_u64(s, "seed"));
  if (sizes.empty() || algos.empty() || seeds.empty()) {
    throw ValidationError("--sizes, --algos and --seeds must each name at least one value");
  }
  if (a.refine != "none" && a.refine != "hra" && a.refine != "rhra" && a.refine != "hra+rhra") {
    throw ValidationError("--refine must be none, hra, rhra or hra+rhra");
  }
  a.flags.config.validate();
  const Alphabet alphabet(a.alphabet);
  const TourMethod tour_method = parse_tour_method(a.flags.tour_method);

  std::vector<SolveReport> rows;
  std::size_t failures = 0;
  for (std::size_t probes_count : sizes) {
    const std::size_t side = grid_side_for(probes_count);
    for (std::uint64_t seed : seeds) {
      const ProbeSet probes = random_probes(probes_count, a.length, alphabet, seed);
      const DistanceOracle dist(probes);
      std::optional<Cost> lb;
      if (side >= 2 && probes_count <= a.lower_bound_max) lb = lower_bound(probes, side, dist);
      const Cost init = placement_cost(Placement::identity(side), dist);
      for (const auto& algo : algos) {
        SolveReport row;
        row.test_case = "t-" + std::to_string(seed);
        row.probes = probes_count;
        row.lower_bound = lb;
        row.init_cost = init;
        row.algorithm = a.refine == "none" ? algo : algo + "+" + a.refine;
        row.seed = seed;
        try {
          HeuristicConfig config = a.flags.config;
          config.seed = seed;
          double seconds = 0;
          Placement placed = timed([&] { return run_heuristic(algo, probes, side, dist, config, tour_method); },
                                   seconds);
          if (a.refine != "none") {
            RefinementConfig rc;
            rc.degree = a.degree;
            rc.rhra_iterations = a.iterations;
            rc.seed = seed;
            row.init_cost = placement_cost(placed, dist);
            double refine_seconds = 0;
            placed = timed([&] { return refine_by_mode(a.refine, placed, probes, dist, rc).placement; },
                           refine_seconds);
            seconds = refine_seconds;
          }
          validate_placement(placed, probes_count);
          row.final_cost = placement_cost(placed, dist);
          if (!a.no_timing) row.wall_time_seconds = seconds;
        } catch (const std::exception& e) {
          ++failures;
          err << "bench: " << row.algorithm << " on " << probes_count << " probes, seed " << seed
              << " failed: " << e.what() << '\n';
        }
        rows.push_back(std::move(row));
      }
    }
  }

  std::ofstream file(a.out_path, std::ios::trunc);
  if (!file) throw ValidationError("cannot open '" + a.out_path + "' for writing");
  file << kReportHeader << '\n';
  for (const auto& r : rows) file << format_report_row(r) << '\n';
  if (!file) throw ValidationError("failed writing '" + a.out_path + "'");
  out << "wrote " << rows.size() << " rows to " << a.out_path;
  if (failures > 0) out << " (" << failures << " failed runs)";
  out << '\n';
  return kExitOk;
}

// --- bound -----------------------------------------------------------------

struct BoundArgs {
  std::string in_path;
  bool exact = false;
};

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  const Instance inst = read_instance(a.in_path);
  const DistanceOracle dist(inst.probes);
  if (inst.side >= 2) {
    out << "lower_bound " << lower_bound(inst.probes, inst.side, dist) << '\n';
  } else {
    out << "lower_bound 0\n";
  }
  if (a.exact) {
    const ExactPlacement opt = brute_force_opt(inst.probes, inst.side, dist);
    out << "exact " << opt.cost << '\n';
    out << "placement";
    for (ProbeId id : opt.placement.cells()) out << ' ' << id;
    out << '\n';
  }
  return kExitOk;
}

}  // namespace

bool is_known_heuristic(std::string_view algo) {
  return std::find(std::begin(kHeuristics), std::end(kHeuristics), algo) != std::end(kHeuristics);
}

Placement run_heuristic(std::string_view algo, const ProbeSet& probes, std::size_t side,
                        const DistanceOracle& dist, const HeuristicConfig& config,
                        TourMethod tour_method) {
  if (algo == "rand") return place_rand(probes, side);
  if (algo == "sort") return place_sort(probes, side);
  if (algo == "epx") return place_epx(probes, side, dist, config);
  if (algo == "qepx") return place_qepx(probes, side, dist, config);
  if (algo == "swm") return place_swm(probes, side, place_sort(probes, side), dist, config);
  if (algo == "repx") return place_repx(probes, side, place_sort(probes, side), dist, config);
  if (algo == "tsp") return approx_solve(probes, side, dist, tour_method, config.seed).placement;
  throw ValidationError("unknown algorithm '" + std::string(algo) + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Border length minimization: instance generation, placement, refinement, bounds"};
  app.name(args.empty() ? "blmp" : args.front());
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "write a random or gadget instance file");
  generate->add_option("--side", gen.side, "grid side N of a random instance");
  generate->add_option("--reduction", gen.reduction, "gadget kind: main_blmp, alternate_blmp, alternate_special");
  generate->add_option("--length", gen.length, "probe length of a random instance")->capture_default_str();
  generate->add_option("--alphabet", gen.alphabet, "symbols of a random instance")->capture_default_str();
  generate->add_option("--seed", gen.seed, "random seed");
  generate->add_option("--n", gen.n, "gadget size: HTSP string count, or n for alternate_special")
      ->capture_default_str();
  generate->add_option("--htsp-length", gen.htsp_length, "length of the random HTSP strings")
      ->capture_default_str();
  generate->add_option("--out", gen.out_path, "instance file to write")->required();

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "run a placement heuristic");
  solve_cmd->add_option("--in", solve.in_path, "instance file")->required();
  solve_cmd->add_option("--algo", solve.algo, "rand|sort|swm|epx|repx|qepx|tsp")->required();
  solve_cmd->add_option("--out", solve.out_path, "placement file to write");
  solve_cmd->add_option("--report", solve.report_path, "CSV report to append to");
  solve_cmd->add_option("--seed", solve.seed, "random seed");
  solve_cmd->add_option("--test-case", solve.test_case, "test case label")->capture_default_str();
  solve_cmd->add_flag("--lower-bound", solve.with_lower_bound, "compute the smallest-edges lower bound");
  solve_cmd->add_flag("--no-timing", solve.no_timing, "report '-' instead of wall time");
  solve.flags.attach(*solve_cmd);

  RefineArgs refine;
  auto* refine_cmd = app.add_subcommand("refine", "refine a placement with HRA or RHRA");
  refine_cmd->add_option("--in", refine.in_path, "instance file")->required();
  refine_cmd->add_option("--placement", refine.placement_path, "placement file to refine")->required();
  refine_cmd->add_option("--mode", refine.mode, "hra|rhra|hra+rhra")
      ->check(CLI::IsMember({"hra", "rhra", "hra+rhra"}))
      ->capture_default_str();
  refine_cmd->add_option("--degree", refine.degree, "degree of refinement d")->capture_default_str();
  refine_cmd->add_option("--iterations", refine.iterations, "RHRA iterations")->capture_default_str();
  refine_cmd->add_option("--seed", refine.seed, "random seed");
  refine_cmd->add_option("--out", refine.out_path, "placement file to write");
  refine_cmd->add_option("--report", refine.report_path, "CSV report to append to");
  refine_cmd->add_option("--test-case", refine.test_case, "test case label")->capture_default_str();
  refine_cmd->add_flag("--lower-bound", refine.with_lower_bound, "compute the smallest-edges lower bound");
  refine_cmd->add_flag("--no-timing", refine.no_timing, "report '-' instead of wall time");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "cross-product benchmark over random instances");
  bench_cmd->add_option("--sizes", bench.sizes, "comma-separated probe counts (perfect squares)")->required();
  bench_cmd->add_option("--algos", bench.algos, "comma-separated heuristics")->required();
  bench_cmd->add_option("--seeds", bench.seeds, "comma-separated seeds")->required();
  bench_cmd->add_option("--out", bench.out_path, "CSV file to write")->required();
  bench_cmd->add_option("--length", bench.length, "probe length")->capture_default_str();
  bench_cmd->add_option("--alphabet", bench.alphabet, "probe alphabet")->capture_default_str();
  bench_cmd->add_option("--refine", bench.refine, "none|hra|rhra|hra+rhra applied after each heuristic")
      ->capture_default_str();
  bench_cmd->add_option("--degree", bench.degree, "degree of refinement")->capture_default_str();
  bench_cmd->add_option("--iterations", bench.iterations, "RHRA iterations")->capture_default_str();
  bench_cmd->add_option("--lower-bound-max", bench.lower_bound_max,
                        "largest probe count that gets a lower bound")
      ->capture_default_str();
  bench_cmd->add_flag("--no-timing", bench.no_timing, "report '-' instead of wall time");
  bench.flags.attach(*bench_cmd);

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "lower bound, and the exact optimum on tiny instances");
  bound_cmd->add_option("--in", bound.in_path, "instance file")->required();
  bound_cmd->add_flag("--exact", bound.exact, "exhaustive optimum (refused beyond the search budget)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen, out);
    if (solve_cmd->parsed()) return cmd_solve(solve, out);
    if (refine_cmd->parsed()) return cmd_refine(refine, out);
    if (bench_cmd->parsed()) return cmd_bench(bench, out, err);
    if (bound_cmd->parsed()) return cmd_bound(bound, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace blmp
