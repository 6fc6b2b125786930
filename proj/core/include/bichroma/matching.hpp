#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bichroma/arc_graph.hpp"
#include "bichroma/instance.hpp"

namespace bichroma {

/// A color-balanced block [begin, end] that is the first balanced prefix of
/// the points starting at `begin` within its enclosing block.
struct BalancedPrefix {
  std::size_t begin = 0;
  std::size_t end = 0;                 ///< inclusive
  std::optional<std::size_t> parent;   ///< index into the returned list
  std::size_t depth = 0;
};

/// Recursive decomposition of a balanced instance into balanced blocks, in
/// preorder. A signed counter (+1 red, -1 blue) walked from a block start
/// first returns to zero at the block end; each block's interior is
/// decomposed the same way. O(n). Throws Infeasible if unbalanced.
std::vector<BalancedPrefix> balanced_prefixes(const CollinearInstance& inst);

/// Minimum-weight non-crossing perfect matching, all arcs above, in O(n).
///
/// One pass with a stack: push the point if the stack is empty or its top
/// has the same color, otherwise pop the top and match it with the point.
/// Throws Infeasible if unbalanced.
std::vector<ArcEdge> matching_min_edges(const CollinearInstance& inst);

SolveReport matching_min(const CollinearInstance& inst);

}  // namespace bichroma
