#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bichroma/arc_graph.hpp"
#include "bichroma/instance.hpp"

namespace bichroma {

/// Two adjacent opposite-colored runs straddling a chunk boundary.
///
/// `leading` is met first in clockwise order and ends at the boundary;
/// `trailing` starts at the boundary. Both runs have the same length. The
/// special points are leading.front() and trailing.back().
struct Group {
  std::vector<std::size_t> leading;
  std::vector<std::size_t> trailing;

  std::size_t first_special() const { return leading.front(); }
  std::size_t last_special() const { return trailing.back(); }
};

/// One group per chunk boundary, enumerated clockwise starting with the
/// boundary between the last and the first chunk.
///
/// Even k: each run holds k/2 points and groups are disjoint. Odd k: each
/// run holds (k+1)/2 points, the chunk middle belongs to both runs that touch
/// its chunk, so consecutive groups share one point.
struct GroupDecomposition {
  std::vector<Group> groups;
  std::size_t run_length = 0;
};

GroupDecomposition decompose_groups(const CircleInstance& inst);

/// The zigzag path between the two special points of a group. For runs
/// a_1..a_q (clockwise, a_q at the boundary) and b_q..b_1 it joins a_q to
/// b_q and b_{q-1}, each a_j (q > j > 1) to b_{j+1} and b_{j-1}, and a_1 to
/// b_2. A run of one point gives the single edge (a_1, b_1).
std::vector<ArcEdge> group_path_edges(const Group& group);

/// Even chunk size: group paths joined by connecting the red special point
/// of every group to the blue special point of the next one.
/// Throws InvalidInput for odd k, Infeasible when fewer than four points.
std::vector<ArcEdge> tsp_even_edges(const CircleInstance& inst);

/// Odd chunk size (including k = 1): group paths chained through the shared
/// chunk middles. Throws InvalidInput for even k, Infeasible when fewer than
/// four points.
std::vector<ArcEdge> tsp_odd_edges(const CircleInstance& inst);

/// Dispatches on the parity of k.
std::vector<ArcEdge> tsp_tour_edges(const CircleInstance& inst);

SolveReport tsp_even(const CircleInstance& inst);
SolveReport tsp_odd(const CircleInstance& inst);
SolveReport tsp_solve(const CircleInstance& inst);

/// Closed-form optimum tour length under the point-count metric:
/// n(k+2+2/k) for even k and n(k+2+1/k) for odd k. Always an integer when k
/// divides n; throws InvalidInput otherwise.
std::int64_t tsp_formula(std::int64_t n, std::int64_t k);

}  // namespace bichroma
