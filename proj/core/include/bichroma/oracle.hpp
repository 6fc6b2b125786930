#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bichroma/arc_graph.hpp"
#include "bichroma/instance.hpp"

// Exhaustive ground-truth solvers for small instances. Nothing here calls
// into the fast solvers; the oracle library depends only on instances and
// the arc-graph primitives.

namespace bichroma::oracle {

/// Enumeration limits. Exceeding either throws BudgetExceeded; an oracle
/// never returns a partial answer.
struct OracleBudget {
  std::size_t max_points = 12;
  std::uint64_t max_states = 10'000'000;
};

struct MatchingResult {
  double weight = 0.0;
  std::vector<ArcEdge> edges;        ///< one minimizer
  std::uint64_t feasible_count = 0;  ///< non-crossing perfect matchings seen
};

/// Calls `visit` with every one-page non-crossing perfect bichromatic
/// matching, built by recursive block splitting: the first point of a range
/// pairs with an opposite-colored point j that leaves both sides balanced.
void enumerate_noncrossing_matchings(const CollinearInstance& inst, const OracleBudget& budget,
                                     const std::function<void(std::span<const ArcEdge>)>& visit);

/// Minimum over enumerate_noncrossing_matchings(). Throws Infeasible when
/// unbalanced.
MatchingResult matching(const CollinearInstance& inst, const OracleBudget& budget = {});

/// Minimum over every perfect bichromatic matching (crossing or not) that
/// has no crossing pair, by plain pairing enumeration. Exponential; meant
/// to cross-check matching() on tiny inputs.
MatchingResult matching_by_pairings(const CollinearInstance& inst, const OracleBudget& budget = {});

/// Minimum bichromatic spanning tree of the complete bipartite graph,
/// Kruskal. Throws Infeasible for a single-color instance.
double mst_crossing(const CollinearInstance& inst);

/// Edge universe for the non-crossing tree enumeration.
enum class CandidateEdges {
  ConsecutiveChunks,  ///< only arcs between adjacent monochromatic runs
  All,                ///< every bichromatic arc
};

struct TreeResult {
  double weight = 0.0;
  std::vector<ArcEdge> edges;
  std::uint64_t tree_count = 0;
};

/// Every non-crossing one-page spanning tree over a color sequence, as edge
/// lists. Depends only on colors, so one catalog serves every spacing.
class NoncrossingTreeCatalog {
 public:
  NoncrossingTreeCatalog(std::span<const Color> colors, CandidateEdges candidates, const OracleBudget& budget = {});

  std::size_t tree_count() const noexcept { return tree_count_; }
  std::size_t point_count() const noexcept { return colors_.size(); }

  /// Cheapest catalogued tree under the coordinates of `inst`, whose colors
  /// must match the catalog.
  TreeResult minimum(const CollinearInstance& inst) const;

  /// Calls `visit` with every catalogued tree.
  void for_each(const std::function<void(std::span<const ArcEdge>)>& visit) const;

 private:
  std::vector<Color> colors_;
  std::vector<ArcEdge> edges_;               ///< candidate arcs
  std::vector<std::uint32_t> tree_members_;  ///< (n-1) candidate indices per tree
  std::size_t tree_count_ = 0;
};

TreeResult mst_noncrossing(const CollinearInstance& inst, CandidateEdges candidates = CandidateEdges::ConsecutiveChunks,
                           const OracleBudget& budget = {});

/// Minimum tour length over every bichromatic Hamiltonian cycle of points
/// equally spaced on a circle with the given clockwise colors, under the
/// point-count metric.
std::int64_t tsp_cycle(std::span<const Color> circle_colors, const OracleBudget& budget = {});

std::int64_t tsp_circle(const CircleInstance& inst, const OracleBudget& budget = {});

enum class PageSet { OneAbove, Two };

/// Whether a non-crossing bichromatic Hamiltonian path exists with arcs on
/// the allowed pages, by backtracking.
bool hampath_exists(const CollinearInstance& inst, PageSet pages, const OracleBudget& budget = {});

/// Calls `visit` with every non-crossing bichromatic Hamiltonian path (each
/// path once, from its lower-indexed end) with arcs on the allowed pages.
void enumerate_hampaths(const CollinearInstance& inst, PageSet pages, const OracleBudget& budget,
                        const std::function<void(std::span<const ArcEdge>)>& visit);

}  // namespace bichroma::oracle
