// bichroma command-line front end.
//
// Exit codes: 0 success, 1 usage or parse error, 2 infeasible input or
// failed validation, 3 oracle mismatch.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bichroma/bench.hpp"
#include "bichroma/errors.hpp"
#include "bichroma/gen.hpp"
#include "bichroma/hampath.hpp"
#include "bichroma/io.hpp"
#include "bichroma/matching.hpp"
#include "bichroma/mst.hpp"
#include "bichroma/oracle.hpp"
#include "bichroma/render.hpp"
#include "bichroma/tsp_circle.hpp"

namespace {

using namespace bichroma;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;
constexpr int kMismatch = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BICHROMA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("BICHROMA_SEED is not an integer: ") + env);
    }
  }
  return 1;
}

Instance load(const std::string& path) {
  try {
    return read_instance(path);
  } catch (const InvalidInput& e) {
    throw UsageError(e.what());
  }
}

const CollinearInstance& collinear(const Instance& inst, const char* problem) {
  if (const auto* c = std::get_if<CollinearInstance>(&inst)) return *c;
  throw InvalidInput(std::string(problem) + " needs a collinear instance");
}

const CircleInstance& circle(const Instance& inst) {
  if (const auto* c = std::get_if<CircleInstance>(&inst)) return *c;
  throw InvalidInput("tsp needs a circle instance");
}

std::string weight_str(double w) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", w);
  return buf;
}

int emit(const SolveReport& r) {
  std::cout << report_to_json(r, 2) << "\n";
  std::cerr << r.problem << " (" << r.algorithm << "): " << r.edges.size() << " edges, weight "
            << weight_str(r.total_weight) << (r.valid ? ", valid" : ", INVALID")
            << (r.noncrossing ? ", non-crossing" : ", " + std::to_string(r.crossings) + " crossings") << "\n";
  for (const auto& v : r.violations) std::cerr << "  violation: " << v << "\n";
  return r.valid ? kOk : kFailed;
}

struct SolveArgs {
  std::string file;
  std::string algo = "linear";
  std::string mode = "crossing";
  std::string mutate;
};

NoncrossingMstOptions mst_options(const SolveArgs& a) {
  NoncrossingMstOptions opt;
  if (a.mutate.empty()) return opt;
  if (a.mutate != "inner-fill-heavier") throw UsageError("unknown mutation '" + a.mutate + "'");
  if (a.mode != "noncrossing") throw UsageError("--mutate applies to --mode noncrossing only");
  opt.rule = InnerFillRule::Heavier;
  return opt;
}

SolveReport solve(const std::string& problem, const Instance& inst, const SolveArgs& a) {
  if (problem == "hampath") {
    const auto& c = collinear(inst, "hampath");
    if (a.algo == "linear") return hampath_linear(c);
    if (a.algo == "blocks") return hampath_blocks(c);
    throw UsageError("--algo must be linear or blocks");
  }
  if (problem == "mst") {
    const auto& c = collinear(inst, "mst");
    if (a.mode == "crossing") return mst_crossing(c);
    if (a.mode == "noncrossing") return mst_noncrossing(c, mst_options(a));
    throw UsageError("--mode must be crossing or noncrossing");
  }
  if (problem == "matching") return matching_min(collinear(inst, "matching"));
  if (problem == "tsp") return tsp_solve(circle(inst));
  throw UsageError("unknown problem '" + problem + "'");
}

bool weights_agree(double a, double b) {
  return a == b || std::fabs(a - b) <= 1e-9 * std::max(std::fabs(a), std::fabs(b));
}

int verify(const std::string& problem, const Instance& inst, const SolveArgs& a) {
  auto report = solve(problem, inst, a);
  bool pass = report.valid && report.noncrossing;
  if (problem == "mst" && a.mode == "crossing") pass = report.valid;
  if (problem == "tsp") pass = report.valid;

  if (problem == "hampath") {
    const bool exists = oracle::hampath_exists(collinear(inst, "hampath"), oracle::PageSet::Two);
    std::cerr << "solver path " << (pass ? "valid" : "invalid") << ", oracle path "
              << (exists ? "exists" : "does not exist") << "\n";
    pass = pass && exists;
  } else {
    double oracle_weight = 0;
    if (problem == "matching") {
      oracle_weight = oracle::matching(collinear(inst, "matching")).weight;
    } else if (problem == "mst") {
      const auto& c = collinear(inst, "mst");
      oracle_weight = a.mode == "crossing" ? oracle::mst_crossing(c) : oracle::mst_noncrossing(c).weight;
    } else {
      oracle_weight = static_cast<double>(oracle::tsp_circle(circle(inst)));
    }
    report.oracle_weight = oracle_weight;
    std::cerr << "solver weight " << weight_str(report.total_weight) << ", oracle weight " << weight_str(oracle_weight)
              << "\n";
    pass = pass && weights_agree(report.total_weight, oracle_weight);
  }
  std::cout << report_to_json(report, 2) << "\n";
  std::cerr << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kOk : kMismatch;
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw UsageError("bad size '" + item + "'");
    }
    if (out.back() == 0 || (out.size() > 1 && out.back() <= out[out.size() - 2])) {
      throw UsageError("sizes must be positive and ascending");
    }
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Bichromatic non-crossing structures on collinear and circle points"};
  app.require_subcommand(1);

  SolveArgs sa;
  std::string problem;

  auto* solve_cmd = app.add_subcommand("solve", "Run a fast solver and print its report as JSON");
  solve_cmd->require_subcommand(1);
  auto add_problem = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* sub = parent->add_subcommand(name, help);
    sub->add_option("instance", sa.file, "Instance file")->required();
    sub->callback([&, name] { problem = name; });
    return sub;
  };
  add_problem(solve_cmd, "hampath", "Non-crossing Hamiltonian path")
      ->add_option("--algo", sa.algo, "linear or blocks")
      ->check(CLI::IsMember({"linear", "blocks"}));
  auto* solve_mst = add_problem(solve_cmd, "mst", "Minimum spanning tree");
  solve_mst->add_option("--mode", sa.mode, "crossing or noncrossing")->check(CLI::IsMember({"crossing", "noncrossing"}));
  add_problem(solve_cmd, "matching", "Minimum non-crossing perfect matching");
  add_problem(solve_cmd, "tsp", "Tour on chunked circle points");

  auto* verify_cmd = app.add_subcommand("verify", "Compare a fast solver with its brute-force oracle");
  verify_cmd->add_option("problem", problem, "hampath, mst, matching or tsp")
      ->required()
      ->check(CLI::IsMember({"hampath", "mst", "matching", "tsp"}));
  verify_cmd->add_option("instance", sa.file, "Instance file")->required();
  verify_cmd->add_option("--algo", sa.algo, "hampath: linear or blocks")->check(CLI::IsMember({"linear", "blocks"}));
  verify_cmd->add_option("--mode", sa.mode, "mst: crossing or noncrossing")
      ->check(CLI::IsMember({"crossing", "noncrossing"}));
  verify_cmd->add_option("--mutate", sa.mutate, "Deliberately perturb the solver (inner-fill-heavier)");

  std::string family, out_path, format = "auto";
  std::size_t size = 8, k = 1;
  std::optional<std::uint64_t> seed;
  std::string spacing = "unit";
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("family", family, "alternating, chunked, random-balanced, random-unbalanced, one-page-blocked, circle")
      ->required();
  gen_cmd->add_option("--size", size, "Point count (n per color for circle)");
  gen_cmd->add_option("--k", k, "Chunk size");
  gen_cmd->add_option("--seed", seed, "RNG seed (default BICHROMA_SEED or 1)");
  gen_cmd->add_option("--spacing", spacing, "unit or random")->check(CLI::IsMember({"unit", "random"}));
  gen_cmd->add_option("--format", format, "text, json or auto (by extension)")
      ->check(CLI::IsMember({"text", "json", "auto"}));
  gen_cmd->add_option("-o,--output", out_path, "Output file (default stdout)");

  std::string solution;
  auto* render_cmd = app.add_subcommand("render", "Draw an instance and optional solution as SVG");
  render_cmd->add_option("instance", sa.file, "Instance file")->required();
  render_cmd->add_option("--solution", solution, "Report JSON from solve");
  render_cmd->add_option("-o,--output", out_path, "Output SVG (default stdout)");

  std::string bench_problem, sizes_arg;
  std::size_t trials = 5;
  auto* bench_cmd = app.add_subcommand("bench", "Time a solver over doubling sizes and fit the log-log slope");
  bench_cmd->add_option("problem", bench_problem,
                        "hampath-linear, hampath-blocks, mst-crossing, mst-noncrossing, matching, tsp")
      ->required();
  bench_cmd->add_option("--sizes", sizes_arg, "Comma-separated ascending point counts");
  bench_cmd->add_option("--trials", trials, "Trials per size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", seed, "RNG seed (default BICHROMA_SEED or 1)");

  std::string formula_problem;
  std::int64_t fn = 0, fk = 0;
  auto* formula_cmd = app.add_subcommand("formula", "Closed-form optimum");
  formula_cmd->add_option("problem", formula_problem, "tsp")->required()->check(CLI::IsMember({"tsp"}));
  formula_cmd->add_option("n", fn, "Points per color")->required();
  formula_cmd->add_option("k", fk, "Chunk size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (solve_cmd->parsed()) return emit(solve(problem, load(sa.file), sa));
    if (verify_cmd->parsed()) return verify(problem, load(sa.file), sa);

    if (gen_cmd->parsed()) {
      GenSpec spec;
      try {
        spec = {family_from_string(family), size, k, seed.value_or(default_seed()), spacing_from_string(spacing)};
      } catch (const InvalidInput& e) {
        throw UsageError(e.what());
      }
      const Instance inst = generate(spec);
      const bool json = format == "json" || (format == "auto" && out_path.size() > 5 &&
                                             out_path.compare(out_path.size() - 5, 5, ".json") == 0);
      const std::string text = json ? instance_to_json(inst, 2) + "\n" : instance_to_text(inst);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        write_file(out_path, text);
        std::cerr << "wrote " << out_path << "\n";
      }
      return kOk;
    }

    if (render_cmd->parsed()) {
      const Instance inst = load(sa.file);
      std::vector<ArcEdge> edges;
      if (!solution.empty()) {
        try {
          edges = report_from_json(read_file(solution)).edges;
        } catch (const InvalidInput& e) {
          throw UsageError(e.what());
        }
      }
      const std::string svg = std::visit(
          [&](const auto& c) {
            const ArcGraph g(c, edges);
            if constexpr (std::is_same_v<std::decay_t<decltype(c)>, CollinearInstance>) {
              return render_collinear(c, g);
            } else {
              return render_circle(c, g);
            }
          },
          inst);
      if (out_path.empty()) {
        std::cout << svg;
      } else {
        write_file(out_path, svg);
        std::cerr << "wrote " << out_path << "\n";
      }
      return kOk;
    }

    if (bench_cmd->parsed()) {
      BenchProblem p;
      std::vector<std::size_t> sizes;
      try {
        p = bench_problem_from_string(bench_problem);
        sizes = sizes_arg.empty() ? default_bench_sizes(p) : parse_sizes(sizes_arg);
      } catch (const InvalidInput& e) {
        throw UsageError(e.what());
      }
      const auto report = run_bench(p, sizes, trials, seed.value_or(default_seed()));
      std::cout << bench_to_json(report, 2) << "\n";
      for (const auto& pt : report.points) {
        std::fprintf(stderr, "%10zu points  %.6e s\n", pt.size, pt.median_seconds);
      }
      std::fprintf(stderr, "%s: log-log slope %.3f\n", std::string(to_string(p)).c_str(), report.slope);
      return kOk;
    }

    if (formula_cmd->parsed()) {
      try {
        std::cout << tsp_formula(fn, fk) << "\n";
      } catch (const InvalidInput& e) {
        throw UsageError(e.what());
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
