#include "bichroma/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "bichroma/errors.hpp"
#include "bichroma/gen.hpp"
#include "bichroma/hampath.hpp"
#include "bichroma/matching.hpp"
#include "bichroma/mst.hpp"
#include "bichroma/tsp_circle.hpp"
#include "json.hpp"

namespace bichroma {
namespace {

using Clock = std::chrono::steady_clock;

// Circle benchmarks keep the chunk size fixed and grow n.
constexpr std::size_t kCircleChunk = 4;

GenSpec spec_for(BenchProblem p, std::size_t size, std::uint64_t seed) {
  switch (p) {
    case BenchProblem::MstNoncrossing:
      // Four long chunks: every adjacent chunk pair fills a quadratic table.
      return {Family::Chunked, size, std::max<std::size_t>(1, size / 4), seed, Spacing::RandomPositive};
    case BenchProblem::Tsp:
      return {Family::CircleChunked, size / 2, kCircleChunk, seed, Spacing::Unit};
    default:
      return {Family::RandomBalanced, size, 1, seed, Spacing::RandomPositive};
  }
}

std::string family_for(BenchProblem p) {
  switch (p) {
    case BenchProblem::MstNoncrossing:
      return "chunked(k=size/4), random spacing";
    case BenchProblem::Tsp:
      return "circle(k=" + std::to_string(kCircleChunk) + ")";
    default:
      return "random-balanced, random spacing";
  }
}

std::function<std::size_t()> solver_for(BenchProblem p, const Instance& inst) {
  if (p == BenchProblem::Tsp) {
    const auto& c = std::get<CircleInstance>(inst);
    return [&c] { return tsp_tour_edges(c).size(); };
  }
  const auto& c = std::get<CollinearInstance>(inst);
  switch (p) {
    case BenchProblem::HamPathLinear:
      return [&c] { return hampath_linear_edges(c).size(); };
    case BenchProblem::HamPathBlocks:
      return [&c] { return hampath_blocks_edges(c).size(); };
    case BenchProblem::MstCrossing:
      return [&c] { return mst_crossing_edges(c).size(); };
    case BenchProblem::MstNoncrossing:
      return [&c] { return mst_noncrossing_edges(c).size(); };
    case BenchProblem::Matching:
      return [&c] { return matching_min_edges(c).size(); };
    case BenchProblem::Tsp:
      break;
  }
  throw InternalError("unhandled bench problem");
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

std::string_view to_string(BenchProblem p) noexcept {
  switch (p) {
    case BenchProblem::HamPathLinear:
      return "hampath-linear";
    case BenchProblem::HamPathBlocks:
      return "hampath-blocks";
    case BenchProblem::MstCrossing:
      return "mst-crossing";
    case BenchProblem::MstNoncrossing:
      return "mst-noncrossing";
    case BenchProblem::Matching:
      return "matching";
    case BenchProblem::Tsp:
      return "tsp";
  }
  return "?";
}

BenchProblem bench_problem_from_string(std::string_view s) {
  for (auto p : {BenchProblem::HamPathLinear, BenchProblem::HamPathBlocks, BenchProblem::MstCrossing,
                 BenchProblem::MstNoncrossing, BenchProblem::Matching, BenchProblem::Tsp}) {
    if (to_string(p) == s) return p;
  }
  throw InvalidInput("unknown bench problem '" + std::string(s) + "'");
}

std::vector<std::size_t> default_bench_sizes(BenchProblem p) {
  std::size_t lo = 1u << 14, hi = 1u << 20;
  if (p == BenchProblem::MstNoncrossing) lo = 1u << 7, hi = 1u << 12;
  if (p == BenchProblem::HamPathBlocks) lo = 1u << 7, hi = 1u << 11;
  std::vector<std::size_t> out;
  for (auto s = lo; s <= hi; s *= 2) out.push_back(s);
  return out;
}

double fit_loglog_slope(std::span<const BenchPoint> points) {
  if (points.size() < 2) throw InvalidInput("slope fit needs at least two sizes");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : points) {
    if (p.size == 0 || !(p.median_seconds > 0)) throw InvalidInput("slope fit needs positive sizes and times");
    const double x = std::log(static_cast<double>(p.size));
    const double y = std::log(p.median_seconds);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  const double m = static_cast<double>(points.size());
  const double den = m * sxx - sx * sx;
  if (den == 0) throw InvalidInput("slope fit needs distinct sizes");
  return (m * sxy - sx * sy) / den;
}

BenchReport run_bench(BenchProblem problem, std::span<const std::size_t> sizes, std::size_t trials,
                      std::uint64_t seed, double min_trial_seconds) {
  if (trials == 0) throw InvalidInput("bench needs at least one trial");
  if (!std::is_sorted(sizes.begin(), sizes.end())) throw InvalidInput("bench sizes must be ascending");
  BenchReport report;
  report.problem = problem;
  report.family = family_for(problem);
  volatile std::size_t sink = 0;
  for (const auto size : sizes) {
    const Instance inst = generate(spec_for(problem, size, seed + size));
    const auto solve = solver_for(problem, inst);

    // Calibrate repetitions so a trial is long enough for the clock.
    std::size_t reps = 1;
    for (;;) {
      const auto t0 = Clock::now();
      for (std::size_t r = 0; r < reps; ++r) sink = sink + solve();
      if (seconds_since(t0) >= min_trial_seconds || reps >= (std::size_t{1} << 20)) break;
      reps *= 2;
    }

    BenchPoint pt;
    pt.size = size;
    for (std::size_t t = 0; t < trials; ++t) {
      const auto t0 = Clock::now();
      for (std::size_t r = 0; r < reps; ++r) sink = sink + solve();
      pt.trial_seconds.push_back(seconds_since(t0) / static_cast<double>(reps));
    }
    auto sorted = pt.trial_seconds;
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 2), sorted.end());
    pt.median_seconds = sorted[sorted.size() / 2];
    report.points.push_back(std::move(pt));
  }
  report.slope = report.points.size() >= 2 ? fit_loglog_slope(report.points) : 0.0;
  return report;
}

std::string bench_to_json(const BenchReport& report, int indent) {
  nlohmann::json j;
  j["problem"] = std::string(to_string(report.problem));
  j["family"] = report.family;
  j["slope"] = report.slope;
  j["points"] = nlohmann::json::array();
  for (const auto& p : report.points) {
    j["points"].push_back({{"size", p.size}, {"median_seconds", p.median_seconds}, {"trial_seconds", p.trial_seconds}});
  }
  return j.dump(indent);
}

}  // namespace bichroma
