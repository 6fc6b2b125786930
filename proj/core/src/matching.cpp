#include "bichroma/matching.hpp"

#include <string>

#include "bichroma/errors.hpp"

namespace bichroma {
namespace {

void require_balanced(const CollinearInstance& inst) {
  if (!inst.balanced()) {
    throw Infeasible("instance is unbalanced: " + std::to_string(inst.red_count()) + " red vs " +
                     std::to_string(inst.blue_count()) + " blue");
  }
}

}  // namespace

std::vector<BalancedPrefix> balanced_prefixes(const CollinearInstance& inst) {
  require_balanced(inst);
  const std::size_t n = inst.size();

  // counter[i] = (#red - #blue) over points [0, i), offset by n.
  // next_same[i] = smallest j > i with counter[j] == counter[i].
  std::vector<std::size_t> counter(n + 1);
  counter[0] = n;
  for (std::size_t i = 0; i < n; ++i) counter[i + 1] = inst.color(i) == Color::Red ? counter[i] + 1 : counter[i] - 1;
  std::vector<std::size_t> next_same(n + 1, n + 1);
  std::vector<std::size_t> seen(2 * n + 1, n + 1);
  for (std::size_t i = n + 1; i-- > 0;) {
    next_same[i] = seen[counter[i]];
    seen[counter[i]] = i;
  }

  // Containers are decomposed into blocks; a block is emitted and its
  // interior pushed as a container. Reversed pushes keep preorder.
  struct Item {
    bool block;
    std::size_t lo, hi;  // [lo, hi)
    std::optional<std::size_t> parent;
    std::size_t depth;
  };
  std::vector<BalancedPrefix> out;
  out.reserve(n / 2);
  std::vector<Item> pending{{false, 0, n, std::nullopt, 0}};
  std::vector<std::size_t> starts;
  while (!pending.empty()) {
    const Item it = pending.back();
    pending.pop_back();
    if (!it.block) {
      starts.clear();
      for (std::size_t s = it.lo; s < it.hi; s = next_same[s]) starts.push_back(s);
      for (auto s = starts.rbegin(); s != starts.rend(); ++s) {
        pending.push_back({true, *s, next_same[*s], it.parent, it.depth});
      }
      continue;
    }
    if (it.hi > n || it.hi - it.lo < 2 || inst.color(it.lo) == inst.color(it.hi - 1)) {
      throw InternalError("balanced block decomposition failed");
    }
    out.push_back({it.lo, it.hi - 1, it.parent, it.depth});
    if (it.hi - it.lo > 2) pending.push_back({false, it.lo + 1, it.hi - 1, out.size() - 1, it.depth + 1});
  }
  return out;
}

std::vector<ArcEdge> matching_min_edges(const CollinearInstance& inst) {
  require_balanced(inst);
  const std::size_t n = inst.size();
  std::vector<ArcEdge> edges;
  edges.reserve(n / 2);
  std::vector<std::size_t> stack;
  stack.reserve(n);
  std::size_t on_stack[2] = {0, 0};  // per color; one of them is always zero
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<std::size_t>(inst.color(i));
    if (stack.empty() || inst.color(stack.back()) == inst.color(i)) {
      stack.push_back(i);
      ++on_stack[c];
    } else {
      edges.emplace_back(stack.back(), i, Page::Above);
      stack.pop_back();
      --on_stack[1 - c];
    }
    if (on_stack[0] != 0 && on_stack[1] != 0) throw InternalError("matching stack is not monochromatic");
  }
  if (!stack.empty()) throw InternalError("stack not empty after a balanced sweep");
  return edges;
}

SolveReport matching_min(const CollinearInstance& inst) {
  return make_report(inst, matching_min_edges(inst), StructureKind::Matching, "matching", "greedy-stack");
}

}  // namespace bichroma
