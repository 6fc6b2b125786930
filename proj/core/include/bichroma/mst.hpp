#pragma once

#include <cstddef>
#include <vector>

#include "bichroma/arc_graph.hpp"
#include "bichroma/instance.hpp"

namespace bichroma {

/// Maximal monochromatic run [begin, end).
struct Chunk {
  std::size_t begin = 0;
  std::size_t end = 0;
  Color color = Color::Red;
  std::size_t size() const noexcept { return end - begin; }
  std::size_t last() const noexcept { return end - 1; }
};

/// Alternating chunks P_1..P_m, left to right.
struct ChunkDecomposition {
  std::vector<Chunk> chunks;
  std::vector<std::size_t> chunk_of;  ///< chunk index of every point
};

ChunkDecomposition decompose_chunks(const CollinearInstance& inst);

// ---------------------------------------------------------------------------
// Spanning tree with crossings allowed
// ---------------------------------------------------------------------------

/// Why an edge was added: the cut [cut_begin, cut_end) against the rest of
/// the points for which it is a lightest bichromatic edge.
struct CutWitness {
  ArcEdge edge;
  int stage = 1;  ///< 1: nearest opposite color, 2: joins consecutive components
  std::size_t cut_begin = 0;
  std::size_t cut_end = 0;
};

struct MstCrossingTrace {
  std::vector<CutWitness> steps;
  std::size_t components_after_stage1 = 0;
};

/// Minimum bichromatic spanning tree in O(n), crossings allowed.
///
/// Stage 1 links every point to its nearest opposite-colored point (ties go
/// left). Stage 2 joins each pair of consecutive components by the adjacent
/// boundary pair when it is bichromatic, and otherwise by the shorter of the
/// two nearest opposite-color links across the boundary (ties go to the left
/// component's boundary point). All arcs are drawn above. The color counts
/// need not be equal; a single-color instance throws Infeasible.
std::vector<ArcEdge> mst_crossing_edges(const CollinearInstance& inst, MstCrossingTrace* trace = nullptr);

SolveReport mst_crossing(const CollinearInstance& inst);

// ---------------------------------------------------------------------------
// Non-crossing spanning tree, one page
// ---------------------------------------------------------------------------

/// Which of the two inward branches inner_fill keeps. Heavier exists only
/// to build a deliberately wrong solver for mutation tests.
enum class InnerFillRule { Lighter, Heavier };

struct InnerFill {
  std::vector<ArcEdge> edges;
  double cost = 0.0;
};

/// Cheapest non-crossing completion below an outer arc (lo, hi).
///
/// The points strictly inside must be a run colored like lo followed by a
/// run colored like hi. While both runs are non-empty the tree keeps
/// (lo, hi-1) or (lo+1, hi) as the new outer arc, and the dropped endpoint
/// becomes a leaf. Comparing the two arcs alone is not enough, so the choice
/// compares each arc plus the best fill under it (ties keep (lo, hi-1)).
/// Once one run is empty its points attach to the outer endpoint of the
/// opposite color. O(a*b) for runs of a and b points.
///
/// Throws InvalidInput if the outer arc is not bichromatic or the inside
/// points are not two runs as described.
InnerFill inner_fill(const CollinearInstance& inst, const ArcEdge& outer, InnerFillRule rule = InnerFillRule::Lighter);

struct NoncrossingMstOptions {
  InnerFillRule rule = InnerFillRule::Lighter;
};

/// Minimum non-crossing bichromatic spanning tree with every arc above the
/// spine, in O(n^2).
///
/// Dynamic program over the umbrella, the chain of outermost arcs from the
/// first to the last point with one vertex per chunk. best(s) is the cheapest
/// tree of the points up to s whose last umbrella arc ends at s; extending to
/// a point q of the next chunk costs best(s) + w(s,q) + fill(s,q), where the
/// fill table for a pair of chunks is the one inner_fill uses, so each
/// pair of chunks costs O(|P||Q|).
std::vector<ArcEdge> mst_noncrossing_edges(const CollinearInstance& inst, const NoncrossingMstOptions& options = {});

SolveReport mst_noncrossing(const CollinearInstance& inst, const NoncrossingMstOptions& options = {});

}  // namespace bichroma
