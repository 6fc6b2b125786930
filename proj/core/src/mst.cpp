#include "bichroma/mst.hpp"

#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "bichroma/errors.hpp"

namespace bichroma {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_bichromatic(const CollinearInstance& inst) {
  if (!inst.bichromatic()) throw Infeasible("instance has a single color; no bichromatic spanning tree exists");
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Row-major |P| x |Q| table of fill costs for outer arcs (lo, hi) with lo in
// P and hi in the next chunk Q. An outer arc with both runs inside non-empty
// keeps (lo, hi-1) or (lo+1, hi), and the far endpoint of the dropped side
// is then a leaf, so the cost is the better of the two branches.
class FillTable {
 public:
  FillTable(const CollinearInstance& inst, const Chunk& p, const Chunk& q, InnerFillRule rule, const WeightOrder& order)
      : inst_(inst), p_(p), q_(q), rule_(rule), order_(order), cost_(p.size() * q.size(), 0.0) {
    // Inside points all colored like hi: attach to lo.
    const std::size_t last = p.last();
    for (std::size_t hi = q.begin + 1; hi < q.end; ++hi) at(last, hi) = at(last, hi - 1) + (inst.x(hi - 1) - inst.x(last));

    for (std::size_t lo = last; lo-- > p.begin;) {
      // Inside points all colored like lo: attach to hi.
      at(lo, q.begin) = at(lo + 1, q.begin) + (inst.x(q.begin) - inst.x(lo + 1));
      for (std::size_t hi = q.begin + 1; hi < q.end; ++hi) {
        const auto [left, right] = branches(lo, hi);
        at(lo, hi) = keeps_left(lo, hi) ? left : right;
      }
    }
  }

  double operator()(std::size_t lo, std::size_t hi) const { return cost_[(lo - p_.begin) * q_.size() + (hi - q_.begin)]; }

  /// Whether the fill under (lo, hi) keeps (lo, hi-1); both runs inside must be non-empty.
  bool keeps_left(std::size_t lo, std::size_t hi) const {
    const auto [left, right] = branches(lo, hi);
    return rule_ == InnerFillRule::Lighter ? !order_.less(right, left) : order_.less(right, left);
  }

 private:
  double& at(std::size_t lo, std::size_t hi) { return cost_[(lo - p_.begin) * q_.size() + (hi - q_.begin)]; }

  std::pair<double, double> branches(std::size_t lo, std::size_t hi) const {
    return {inst_.x(hi - 1) - inst_.x(lo) + (*this)(lo, hi - 1), inst_.x(hi) - inst_.x(lo + 1) + (*this)(lo + 1, hi)};
  }

  const CollinearInstance& inst_;
  Chunk p_;
  Chunk q_;
  InnerFillRule rule_;
  WeightOrder order_;
  std::vector<double> cost_;
};

}  // namespace

ChunkDecomposition decompose_chunks(const CollinearInstance& inst) {
  ChunkDecomposition out;
  out.chunk_of.resize(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (i == 0 || inst.color(i) != inst.color(i - 1)) out.chunks.push_back({i, i, inst.color(i)});
    out.chunks.back().end = i + 1;
    out.chunk_of[i] = out.chunks.size() - 1;
  }
  return out;
}

std::vector<ArcEdge> mst_crossing_edges(const CollinearInstance& inst, MstCrossingTrace* trace) {
  require_bichromatic(inst);
  const std::size_t n = inst.size();
  const WeightOrder order(inst.integral());

  std::vector<std::size_t> prev_opp(n, kNone);
  std::vector<std::size_t> next_opp(n, kNone);
  {
    std::size_t last[2] = {kNone, kNone};
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = static_cast<std::size_t>(inst.color(i));
      prev_opp[i] = last[1 - c];
      last[c] = i;
    }
    last[0] = last[1] = kNone;
    for (std::size_t i = n; i-- > 0;) {
      const auto c = static_cast<std::size_t>(inst.color(i));
      next_opp[i] = last[1 - c];
      last[c] = i;
    }
  }

  std::vector<std::size_t> nearest(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t l = prev_opp[i];
    const std::size_t r = next_opp[i];
    if (l == kNone) {
      nearest[i] = r;
    } else if (r == kNone) {
      nearest[i] = l;
    } else {
      const double dl = inst.x(i) - inst.x(l);
      const double dr = inst.x(r) - inst.x(i);
      nearest[i] = order.less(dr, dl) ? r : l;
    }
  }

  std::vector<ArcEdge> edges;
  edges.reserve(n - 1);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = nearest[i];
    if (nearest[j] == i && j < i) continue;  // mutual pair, already added from j
    edges.emplace_back(i, j, Page::Above);
    if (trace) trace->steps.push_back({edges.back(), 1, i, i + 1});
    parent[find_root(parent, i)] = find_root(parent, j);
  }

  // Components are contiguous runs; record [begin, end) of each.
  std::vector<std::pair<std::size_t, std::size_t>> comps;
  {
    std::vector<std::size_t> root_seen_at(n, kNone);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t root = find_root(parent, i);
      if (i > 0 && find_root(parent, i - 1) == root) {
        comps.back().second = i + 1;
        continue;
      }
      if (root_seen_at[root] != kNone) throw InternalError("nearest-neighbor components are not contiguous");
      root_seen_at[root] = i;
      comps.emplace_back(i, i + 1);
    }
  }
  if (trace) trace->components_after_stage1 = comps.size();

  for (std::size_t c = 0; c + 1 < comps.size(); ++c) {
    const auto [a, r] = std::pair{comps[c].first, comps[c].second - 1};
    const auto [l, z] = std::pair{comps[c + 1].first, comps[c + 1].second - 1};
    ArcEdge link;
    if (inst.color(r) != inst.color(l)) {
      link = ArcEdge(r, l, Page::Above);
    } else {
      std::size_t right_opp = l;
      while (right_opp <= z && inst.color(right_opp) == inst.color(r)) ++right_opp;
      std::size_t left_opp = r;
      while (left_opp > a && inst.color(left_opp) == inst.color(l)) --left_opp;
      if (right_opp > z || inst.color(left_opp) == inst.color(l)) throw InternalError("component without both colors");
      const double from_left = inst.x(right_opp) - inst.x(r);
      const double from_right = inst.x(l) - inst.x(left_opp);
      link = order.less(from_right, from_left) ? ArcEdge(left_opp, l, Page::Above) : ArcEdge(r, right_opp, Page::Above);
    }
    edges.push_back(link);
    if (trace) trace->steps.push_back({link, 2, 0, r + 1});
  }
  if (edges.size() != n - 1) throw InternalError("crossing MST does not have n-1 edges");
  return edges;
}

SolveReport mst_crossing(const CollinearInstance& inst) {
  return make_report(inst, mst_crossing_edges(inst), StructureKind::SpanningTree, "mst", "crossing");
}

InnerFill inner_fill(const CollinearInstance& inst, const ArcEdge& outer, InnerFillRule rule) {
  std::size_t lo = outer.u;
  std::size_t hi = outer.v;
  if (hi >= inst.size()) throw InvalidInput("outer arc out of range");
  if (inst.color(lo) == inst.color(hi)) throw InvalidInput("outer arc is not bichromatic");
  std::size_t mid = lo + 1;
  while (mid < hi && inst.color(mid) == inst.color(lo)) ++mid;
  std::size_t end = mid;
  while (end < hi && inst.color(end) == inst.color(hi)) ++end;
  if (end != hi) throw InvalidInput("points under the outer arc span more than two chunks");

  const FillTable fill(inst, Chunk{lo, mid, inst.color(lo)}, Chunk{mid, hi + 1, inst.color(hi)}, rule,
                       WeightOrder(inst.integral()));
  InnerFill out;
  out.cost = fill(lo, hi);
  // Inside: [lo+1, mid) colored like lo, [mid, hi) colored like hi.
  while (lo + 1 < mid && mid < hi) {
    if (fill.keeps_left(lo, hi)) {
      out.edges.emplace_back(lo, hi - 1, Page::Above);
      --hi;
    } else {
      out.edges.emplace_back(lo + 1, hi, Page::Above);
      ++lo;
    }
  }
  for (std::size_t j = lo + 1; j < mid; ++j) out.edges.emplace_back(j, hi, Page::Above);
  for (std::size_t j = mid; j < hi; ++j) out.edges.emplace_back(lo, j, Page::Above);
  return out;
}

std::vector<ArcEdge> mst_noncrossing_edges(const CollinearInstance& inst, const NoncrossingMstOptions& options) {
  require_bichromatic(inst);
  const std::size_t n = inst.size();
  const WeightOrder order(inst.integral());
  const auto chunks = decompose_chunks(inst).chunks;

  std::vector<double> best(n, kInf);
  std::vector<std::size_t> pred(n, kNone);
  best[0] = 0.0;
  for (std::size_t t = 0; t + 1 < chunks.size(); ++t) {
    const Chunk& p = chunks[t];
    const Chunk& q = chunks[t + 1];
    const FillTable fill(inst, p, q, options.rule, order);
    for (std::size_t s = p.begin; s < p.end; ++s) {
      if (best[s] == kInf) continue;
      for (std::size_t j = q.begin; j < q.end; ++j) {
        const double cost = best[s] + (inst.x(j) - inst.x(s)) + fill(s, j);
        if (best[j] == kInf || order.less(cost, best[j])) {
          best[j] = cost;
          pred[j] = s;
        }
      }
    }
  }

  std::vector<ArcEdge> edges;
  edges.reserve(n - 1);
  for (std::size_t j = n - 1; j != 0; j = pred[j]) {
    if (pred[j] == kNone) throw InternalError("umbrella chain is broken");
    const ArcEdge arc(pred[j], j, Page::Above);
    edges.push_back(arc);
    auto inside = inner_fill(inst, arc, options.rule);
    edges.insert(edges.end(), inside.edges.begin(), inside.edges.end());
  }
  if (edges.size() != n - 1) throw InternalError("non-crossing MST does not have n-1 edges");
  if (!order.tied(total_weight(inst, edges), best[n - 1])) {
    throw InternalError("reconstructed tree weight disagrees with the dynamic program");
  }
  return edges;
}

SolveReport mst_noncrossing(const CollinearInstance& inst, const NoncrossingMstOptions& options) {
  return make_report(inst, mst_noncrossing_edges(inst, options), StructureKind::SpanningTree, "mst",
                     options.rule == InnerFillRule::Lighter ? "noncrossing" : "noncrossing-mutated");
}

}  // namespace bichroma
