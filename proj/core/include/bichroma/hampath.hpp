#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "bichroma/arc_graph.hpp"
#include "bichroma/instance.hpp"

namespace bichroma {

// ---------------------------------------------------------------------------
// Linear three-pointer construction
// ---------------------------------------------------------------------------

/// Pointer state at the top of one iteration of the linear construction.
struct LinearStep {
  std::size_t current = 0;                  ///< p, moves right
  std::optional<std::size_t> last_red;      ///< rightmost active red point
  std::optional<std::size_t> last_blue;     ///< rightmost active blue point
  std::size_t edges_before = 0;             ///< edges emitted by earlier iterations
};

struct LinearTrace {
  std::vector<LinearStep> steps;
};

/// Non-crossing Hamiltonian path in O(n).
///
/// Sweeps p left to right; the successor of p is the next active point.
/// When p and its successor differ in color a small arc joins them above the
/// spine. Otherwise p is joined through the rightmost active point of the
/// other color, which is also joined to the successor: both arcs go above
/// when p is red and below when p is blue. An arc that jumps over inactive
/// points instead takes the page those points do not use. Stops when no
/// active point is left right of p.
///
/// Throws Infeasible for an unbalanced instance. Edges are returned in
/// emission order; `trace`, when given, receives one entry per iteration.
std::vector<ArcEdge> hampath_linear_edges(const CollinearInstance& inst, LinearTrace* trace = nullptr);

SolveReport hampath_linear(const CollinearInstance& inst);

// ---------------------------------------------------------------------------
// Block construction
// ---------------------------------------------------------------------------

using IndexPair = std::pair<std::size_t, std::size_t>;

/// A bichromatic perfect matching whose edges are pairwise nested or disjoint.
struct HierMatching {
  std::vector<IndexPair> edges;  ///< sorted by left endpoint, each with first < second
  std::vector<int> level;        ///< level[i] belongs to edges[i]; 1 = contains no edge
  int max_level = 0;
};

/// True iff no two pairs properly interleave.
bool is_hierarchical(std::span<const IndexPair> edges);

/// Uncrosses a bichromatic perfect matching.
///
/// Interleaved pairs u < w < v < x become (u,x),(w,v) when u and w share a
/// color and (u,w),(v,x) otherwise. Pairs are scanned by left endpoint and
/// the scan restarts after every rewrite. Throws InvalidInput unless the
/// input is a bichromatic perfect matching of `inst`.
HierMatching hierarchify(const CollinearInstance& inst, std::vector<IndexPair> matching);

/// Path over a contiguous, color-balanced index range.
struct BlockPath {
  std::size_t lo = 0;   ///< first index of the block
  std::size_t hi = 0;   ///< last index of the block
  std::vector<ArcEdge> edges;
  std::size_t first = 0;  ///< path endpoint equal to lo
  std::size_t other = 0;  ///< the other path endpoint
};

/// Checks both block invariants: `lo` is a path endpoint, and a path endpoint
/// strictly inside the block is not spanned by arcs on both pages.
bool satisfies_block_invariants(const BlockPath& path);

/// Called after every merge and every enclosing-edge attachment.
using BlockObserver = std::function<void(const BlockPath&)>;

/// Non-crossing Hamiltonian path by bottom-up block merging.
///
/// Starts from the matching that pairs the i-th red with the i-th blue point,
/// uncrosses it with hierarchify(), builds a path per block from the
/// innermost level outwards and chains sibling blocks left to right. Every
/// intermediate path is checked against the block invariants; a violation
/// throws InternalError. Throws Infeasible for an unbalanced instance.
std::vector<ArcEdge> hampath_blocks_edges(const CollinearInstance& inst, const BlockObserver& observer = {});

SolveReport hampath_blocks(const CollinearInstance& inst);

}  // namespace bichroma
