#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bichroma {

enum class BenchProblem { HamPathLinear, HamPathBlocks, MstCrossing, MstNoncrossing, Matching, Tsp };

std::string_view to_string(BenchProblem p) noexcept;
BenchProblem bench_problem_from_string(std::string_view s);

/// Doubling point counts used when none are given.
std::vector<std::size_t> default_bench_sizes(BenchProblem p);

struct BenchPoint {
  std::size_t size = 0;  ///< point count
  double median_seconds = 0.0;
  std::vector<double> trial_seconds;
};

struct BenchReport {
  BenchProblem problem = BenchProblem::HamPathLinear;
  std::string family;
  std::vector<BenchPoint> points;
  double slope = 0.0;
};

/// Least-squares slope of log(time) against log(size).
double fit_loglog_slope(std::span<const BenchPoint> points);

/// Times only the solver call; instances are generated up front. Each trial
/// repeats the call enough times to last at least `min_trial_seconds` and
/// records the per-call mean, and each size reports the median trial.
BenchReport run_bench(BenchProblem problem, std::span<const std::size_t> sizes, std::size_t trials,
                      std::uint64_t seed, double min_trial_seconds = 2e-3);

std::string bench_to_json(const BenchReport& report, int indent = -1);

}  // namespace bichroma
