#include "bichroma/hampath.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "bichroma/errors.hpp"

namespace bichroma {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void require_balanced(const CollinearInstance& inst) {
  if (!inst.balanced()) {
    throw Infeasible("instance is unbalanced: " + std::to_string(inst.red_count()) + " red vs " +
                     std::to_string(inst.blue_count()) + " blue");
  }
}

// Page shared by the arcs that strictly span p, if any.
std::optional<Page> spanning_page(std::span<const ArcEdge> edges, std::size_t p) {
  bool above = false;
  bool below = false;
  for (const auto& e : edges) {
    if (e.u < p && p < e.v) (e.page == Page::Below ? below : above) = true;
  }
  if (above && below) throw InternalError("point " + std::to_string(p) + " is spanned on both pages");
  if (above) return Page::Above;
  if (below) return Page::Below;
  return std::nullopt;
}

bool crosses_any(const ArcEdge& e, std::span<const ArcEdge> edges) {
  return std::any_of(edges.begin(), edges.end(), [&](const ArcEdge& f) { return arcs_cross(e, f); });
}

void reflect(std::vector<ArcEdge>& edges) {
  for (auto& e : edges) e.page = opposite(e.page.value_or(Page::Above));
}

void check_block(const BlockPath& path, const BlockObserver& observer) {
  if (!satisfies_block_invariants(path)) {
    throw InternalError("block [" + std::to_string(path.lo) + "," + std::to_string(path.hi) +
                        "] violates the block invariants");
  }
  if (count_crossings(path.edges, path.hi + 1) != 0) {
    throw InternalError("block [" + std::to_string(path.lo) + "," + std::to_string(path.hi) + "] has crossing arcs");
  }
  if (observer) observer(path);
}

// Joins the path of the blocks so far with the path of the next sibling block.
BlockPath chain(const CollinearInstance& inst, BlockPath left, BlockPath right, const BlockObserver& observer) {
  const std::size_t u1 = left.first;
  const std::size_t v1 = left.other;
  const std::size_t u2 = right.first;
  const std::size_t v2 = right.other;
  const bool same_start_color = inst.color(u1) == inst.color(u2);

  // Same start colors: bridge (v1,u2), the path keeps v2 as its far end.
  // Different: bridge (v1,v2), the far end becomes u2.
  ArcEdge bridge(v1, same_start_color ? u2 : v2, Page::Above);
  auto fits = [&](Page pg) {
    bridge.page = pg;
    return !crosses_any(bridge, left.edges) && !crosses_any(bridge, right.edges);
  };
  const auto preferred = spanning_page(left.edges, v1);
  const Page first_try = preferred ? opposite(*preferred) : Page::Above;
  if (!fits(first_try) && !fits(opposite(first_try))) {
    reflect(right.edges);
    if (!fits(first_try) && !fits(opposite(first_try))) {
      throw InternalError("no crossing-free page for bridge (" + std::to_string(bridge.u) + "," +
                          std::to_string(bridge.v) + ")");
    }
  }

  BlockPath out;
  out.lo = left.lo;
  out.hi = right.hi;
  out.edges = std::move(left.edges);
  out.edges.insert(out.edges.end(), right.edges.begin(), right.edges.end());
  out.edges.push_back(bridge);
  out.first = u1;
  out.other = same_start_color ? v2 : u2;
  check_block(out, observer);
  return out;
}

// Closes a block [u,v] around the chained path of its children.
BlockPath enclose(const CollinearInstance& inst, std::size_t u, std::size_t v, std::optional<BlockPath> inner,
                  const BlockObserver& observer) {
  BlockPath out;
  out.lo = u;
  out.hi = v;
  out.first = u;
  if (!inner) {
    out.edges.emplace_back(u, v, Page::Above);
    out.other = v;
    check_block(out, observer);
    return out;
  }
  const std::size_t u1 = inner->first;
  const std::size_t v1 = inner->other;
  const auto side = spanning_page(inner->edges, v1);
  out.edges = std::move(inner->edges);
  if (inst.color(u1) == inst.color(u)) {
    // u - v - u1 ... v1, both new arcs on the page already spanning v1.
    const Page pg = side.value_or(Page::Above);
    out.edges.emplace_back(u1, v, pg);
    out.edges.emplace_back(u, v, pg);
    out.other = v1;
  } else {
    // u - v - v1 ... u1.
    const Page pg = side ? opposite(*side) : Page::Above;
    out.edges.emplace_back(v1, v, pg);
    out.edges.emplace_back(u, v, Page::Above);
    out.other = u1;
  }
  check_block(out, observer);
  return out;
}

}  // namespace

std::vector<ArcEdge> hampath_linear_edges(const CollinearInstance& inst, LinearTrace* trace) {
  require_balanced(inst);
  const std::size_t n = inst.size();
  std::vector<char> active(n, 1);
  std::vector<ArcEdge> edges;
  edges.reserve(n - 1);

  std::size_t last_red = n - 1;
  std::size_t last_blue = n - 1;
  auto settle = [&](std::size_t& ptr, Color c) {
    while (ptr != kNone && (!active[ptr] || inst.color(ptr) != c)) ptr = ptr == 0 ? kNone : ptr - 1;
  };
  auto opt = [](std::size_t i) { return i == kNone ? std::nullopt : std::optional<std::size_t>(i); };

  // Successor is the next active point: points already used through a long
  // arc are skipped, otherwise the sweep would stop early (RBBRRB).
  std::size_t succ = 1;
  auto advance = [&] {
    while (succ < n && !active[succ]) ++succ;
  };
  std::size_t p = 0;
  for (advance(); succ < n; advance()) {
    settle(last_red, Color::Red);
    settle(last_blue, Color::Blue);
    if (trace) trace->steps.push_back({p, opt(last_red), opt(last_blue), edges.size()});

    const std::size_t next = succ;
    // Skipped points all have the color opposite to `next` and carry arcs on
    // one page only: Above for blue, Below for red. New arcs over them take
    // the other page.
    const bool skipped = next > p + 1;
    const Page free_page = inst.color(next) == Color::Red ? Page::Below : Page::Above;
    if (inst.color(p) != inst.color(next)) {
      edges.emplace_back(p, next, skipped ? free_page : Page::Above);
      active[p] = 0;
    } else {
      const bool red = inst.color(p) == Color::Red;
      const std::size_t via = red ? last_blue : last_red;
      if (via == kNone || via <= next) throw InternalError("no active point of the opposite color right of p");
      const Page pg = skipped ? free_page : red ? Page::Above : Page::Below;
      edges.emplace_back(p, via, pg);
      edges.emplace_back(via, next, pg);
      active[p] = 0;
      active[via] = 0;
    }
    p = next;
    succ = next + 1;
  }
  if (edges.size() != n - 1) {
    throw InternalError("linear construction stopped after " + std::to_string(edges.size()) + " of " +
                        std::to_string(n - 1) + " edges");
  }
  return edges;
}

SolveReport hampath_linear(const CollinearInstance& inst) {
  return make_report(inst, hampath_linear_edges(inst), StructureKind::HamPath, "hampath", "linear");
}

bool is_hierarchical(std::span<const IndexPair> edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      const auto [a, b] = edges[i];
      const auto [c, d] = edges[j];
      if (a < c && c < b && b < d) return false;
    }
  }
  return true;
}

HierMatching hierarchify(const CollinearInstance& inst, std::vector<IndexPair> matching) {
  const std::size_t n = inst.size();
  if (matching.size() * 2 != n) throw InvalidInput("matching is not perfect");
  std::vector<char> seen(n, 0);
  for (auto& [a, b] : matching) {
    if (a > b) std::swap(a, b);
    if (b >= n || a == b) throw InvalidInput("matching pair out of range");
    if (seen[a] || seen[b]) throw InvalidInput("point matched twice");
    seen[a] = seen[b] = 1;
    if (inst.color(a) == inst.color(b)) throw InvalidInput("matching pair is not bichromatic");
  }

  // Terminates: a different-color rewrite shortens the total length, and a
  // same-color rewrite keeps it while growing the sum of squared lengths.
  auto& edges = matching;
  for (bool rewrote = true; rewrote;) {
    rewrote = false;
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size() && !rewrote; ++i) {
      const auto [u, v] = edges[i];
      for (std::size_t j = i + 1; j < edges.size() && edges[j].first < v; ++j) {
        const auto [w, x] = edges[j];
        if (x < v) continue;  // nested
        IndexPair a;
        IndexPair b;
        if (inst.color(u) == inst.color(w)) {
          a = {u, x};
          b = {w, v};
        } else {
          a = {u, w};
          b = {v, x};
        }
        edges[i] = a;
        edges[j] = b;
        rewrote = true;
        break;
      }
    }
  }

  HierMatching out;
  std::sort(edges.begin(), edges.end());
  out.edges = edges;
  out.level.assign(edges.size(), 1);
  std::vector<std::size_t> parent(edges.size(), kNone);
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    while (!stack.empty() && edges[stack.back()].second < edges[i].first) stack.pop_back();
    if (!stack.empty()) parent[i] = stack.back();
    stack.push_back(i);
  }
  for (std::size_t i = edges.size(); i-- > 0;) {
    if (parent[i] != kNone) out.level[parent[i]] = std::max(out.level[parent[i]], out.level[i] + 1);
  }
  out.max_level = out.level.empty() ? 0 : *std::max_element(out.level.begin(), out.level.end());
  return out;
}

bool satisfies_block_invariants(const BlockPath& path) {
  if (path.first != path.lo) return false;
  if (path.other < path.lo || path.other > path.hi) return false;
  for (const std::size_t p : {path.first, path.other}) {
    if (p == path.lo || p == path.hi) continue;
    bool above = false;
    bool below = false;
    for (const auto& e : path.edges) {
      if (e.u < p && p < e.v) (e.page == Page::Below ? below : above) = true;
    }
    if (above && below) return false;
  }
  return true;
}

std::vector<ArcEdge> hampath_blocks_edges(const CollinearInstance& inst, const BlockObserver& observer) {
  require_balanced(inst);
  const std::size_t n = inst.size();

  // i-th red with i-th blue, left to right.
  std::vector<std::size_t> reds;
  std::vector<std::size_t> blues;
  for (std::size_t i = 0; i < n; ++i) (inst.color(i) == Color::Red ? reds : blues).push_back(i);
  std::vector<IndexPair> initial;
  initial.reserve(reds.size());
  for (std::size_t i = 0; i < reds.size(); ++i) initial.emplace_back(reds[i], blues[i]);

  const HierMatching hm = hierarchify(inst, std::move(initial));
  const auto& edges = hm.edges;
  const std::size_t m = edges.size();

  std::vector<std::size_t> parent(m, kNone);
  std::vector<std::vector<std::size_t>> children(m);
  std::vector<std::size_t> roots;
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < m; ++i) {
    while (!stack.empty() && edges[stack.back()].second < edges[i].first) stack.pop_back();
    if (stack.empty()) {
      roots.push_back(i);
    } else {
      parent[i] = stack.back();
      children[parent[i]].push_back(i);
    }
    stack.push_back(i);
  }

  auto chain_all = [&](const std::vector<std::size_t>& ids, std::vector<std::optional<BlockPath>>& built) {
    std::optional<BlockPath> acc;
    for (const std::size_t id : ids) {
      BlockPath next = std::move(*built[id]);
      built[id].reset();
      acc = acc ? chain(inst, std::move(*acc), std::move(next), observer) : std::move(next);
    }
    return acc;
  };

  // Children sort after their parent, so a reverse sweep builds bottom-up.
  std::vector<std::optional<BlockPath>> built(m);
  for (std::size_t i = m; i-- > 0;) {
    auto inner = chain_all(children[i], built);
    built[i] = enclose(inst, edges[i].first, edges[i].second, std::move(inner), observer);
  }
  auto whole = chain_all(roots, built);
  if (!whole || whole->edges.size() != n - 1) throw InternalError("block construction did not span all points");
  return std::move(whole->edges);
}

SolveReport hampath_blocks(const CollinearInstance& inst) {
  return make_report(inst, hampath_blocks_edges(inst), StructureKind::HamPath, "hampath", "blocks");
}

}  // namespace bichroma
