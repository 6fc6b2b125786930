#include "bichroma/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "bichroma/errors.hpp"

namespace bichroma::oracle {
namespace {

class StateCounter {
 public:
  explicit StateCounter(std::uint64_t max) : max_(max) {}
  void tick() {
    if (++count_ > max_) throw BudgetExceeded("oracle exceeded its budget of " + std::to_string(max_) + " states");
  }

 private:
  std::uint64_t count_ = 0;
  std::uint64_t max_;
};

void check_points(std::size_t n, const OracleBudget& budget) {
  if (n > budget.max_points) {
    throw BudgetExceeded("instance has " + std::to_string(n) + " points, oracle budget is " +
                         std::to_string(budget.max_points));
  }
}

void require_balanced(const CollinearInstance& inst) {
  if (!inst.balanced()) throw Infeasible("instance is unbalanced");
}

// Union-find without path compression so unions can be undone.
class RollbackSets {
 public:
  explicit RollbackSets(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }
  void undo() {
    const std::size_t b = history_.back();
    history_.pop_back();
    size_[parent_[b]] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> history_;
};

bool crosses_any(const ArcEdge& e, std::span<const ArcEdge> edges) {
  return std::any_of(edges.begin(), edges.end(), [&](const ArcEdge& f) { return arcs_cross(e, f); });
}

std::int64_t circle_weight(std::size_t a, std::size_t b, std::size_t total) {
  const std::size_t d = a > b ? a - b : b - a;
  return static_cast<std::int64_t>(std::min(d, total - d)) + 1;
}

}  // namespace

void enumerate_noncrossing_matchings(const CollinearInstance& inst, const OracleBudget& budget,
                                     const std::function<void(std::span<const ArcEdge>)>& visit) {
  require_balanced(inst);
  check_points(inst.size(), budget);
  const std::size_t n = inst.size();
  std::vector<int> reds_before(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) reds_before[i + 1] = reds_before[i] + (inst.color(i) == Color::Red ? 1 : 0);
  auto balanced = [&](std::size_t lo, std::size_t hi) {  // [lo, hi)
    return 2 * (reds_before[hi] - reds_before[lo]) == static_cast<int>(hi - lo);
  };

  StateCounter states(budget.max_states);
  std::vector<std::pair<std::size_t, std::size_t>> todo{{0, n}};
  std::vector<ArcEdge> current;
  std::function<void()> recurse = [&]() {
    states.tick();
    if (todo.empty()) {
      visit(current);
      return;
    }
    const auto range = todo.back();
    todo.pop_back();
    const auto [lo, hi] = range;
    if (lo >= hi) {
      recurse();
    } else {
      for (std::size_t j = lo + 1; j < hi; j += 2) {
        if (inst.color(j) == inst.color(lo) || !balanced(lo + 1, j) || !balanced(j + 1, hi)) continue;
        current.emplace_back(lo, j, Page::Above);
        todo.emplace_back(j + 1, hi);
        todo.emplace_back(lo + 1, j);
        recurse();
        todo.pop_back();
        todo.pop_back();
        current.pop_back();
      }
    }
    todo.push_back(range);
  };
  recurse();
}

MatchingResult matching(const CollinearInstance& inst, const OracleBudget& budget) {
  MatchingResult best;
  best.weight = std::numeric_limits<double>::infinity();
  enumerate_noncrossing_matchings(inst, budget, [&](std::span<const ArcEdge> edges) {
    ++best.feasible_count;
    const double w = total_weight(inst, edges);
    if (w < best.weight) {
      best.weight = w;
      best.edges.assign(edges.begin(), edges.end());
    }
  });
  if (best.feasible_count == 0) throw InternalError("balanced instance without a non-crossing matching");
  return best;
}

MatchingResult matching_by_pairings(const CollinearInstance& inst, const OracleBudget& budget) {
  require_balanced(inst);
  check_points(inst.size(), budget);
  const std::size_t n = inst.size();
  StateCounter states(budget.max_states);
  std::vector<char> used(n, 0);
  std::vector<ArcEdge> current;
  MatchingResult best;
  best.weight = std::numeric_limits<double>::infinity();
  std::function<void()> recurse = [&]() {
    states.tick();
    std::size_t first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      for (std::size_t i = 0; i < current.size(); ++i) {
        for (std::size_t j = i + 1; j < current.size(); ++j) {
          if (arcs_cross(current[i], current[j])) return;
        }
      }
      ++best.feasible_count;
      const double w = total_weight(inst, current);
      if (w < best.weight) {
        best.weight = w;
        best.edges = current;
      }
      return;
    }
    used[first] = 1;
    for (std::size_t j = first + 1; j < n; ++j) {
      if (used[j] || inst.color(j) == inst.color(first)) continue;
      used[j] = 1;
      current.emplace_back(first, j, Page::Above);
      recurse();
      current.pop_back();
      used[j] = 0;
    }
    used[first] = 0;
  };
  recurse();
  if (best.feasible_count == 0) throw InternalError("balanced instance without a non-crossing matching");
  return best;
}

double mst_crossing(const CollinearInstance& inst) {
  if (!inst.bichromatic()) throw Infeasible("single-color instance has no bichromatic spanning tree");
  const std::size_t n = inst.size();
  struct Candidate {
    double w;
    std::size_t a, b;
  };
  std::vector<Candidate> all;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (inst.color(a) != inst.color(b)) all.push_back({inst.x(b) - inst.x(a), a, b});
    }
  }
  std::sort(all.begin(), all.end(), [](const Candidate& l, const Candidate& r) { return l.w < r.w; });
  RollbackSets sets(n);
  double total = 0.0;
  std::size_t taken = 0;
  for (const auto& c : all) {
    if (sets.unite(c.a, c.b)) {
      total += c.w;
      if (++taken == n - 1) break;
    }
  }
  if (taken != n - 1) throw InternalError("complete bipartite graph is disconnected");
  return total;
}

NoncrossingTreeCatalog::NoncrossingTreeCatalog(std::span<const Color> colors, CandidateEdges candidates,
                                               const OracleBudget& budget)
    : colors_(colors.begin(), colors.end()) {
  const std::size_t n = colors_.size();
  check_points(n, budget);
  if (n < 2) throw InvalidInput("need at least two points");
  if (std::all_of(colors_.begin(), colors_.end(), [&](Color c) { return c == colors_.front(); })) {
    throw Infeasible("single-color instance has no bichromatic spanning tree");
  }
  std::vector<std::size_t> run(n, 0);
  for (std::size_t i = 1; i < n; ++i) run[i] = run[i - 1] + (colors_[i] != colors_[i - 1] ? 1 : 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (colors_[a] == colors_[b]) continue;
      if (candidates == CandidateEdges::ConsecutiveChunks && run[b] - run[a] != 1) continue;
      edges_.emplace_back(a, b, Page::Above);
    }
  }

  StateCounter states(budget.max_states);
  RollbackSets sets(n);
  std::vector<ArcEdge> chosen;
  std::vector<std::uint32_t> chosen_ids;
  std::function<void(std::size_t)> recurse = [&](std::size_t next) {
    states.tick();
    if (chosen.size() == n - 1) {
      tree_members_.insert(tree_members_.end(), chosen_ids.begin(), chosen_ids.end());
      ++tree_count_;
      return;
    }
    if (chosen.size() + (edges_.size() - next) < n - 1) return;
    const ArcEdge& e = edges_[next];
    if (!crosses_any(e, chosen) && sets.unite(e.u, e.v)) {
      chosen.push_back(e);
      chosen_ids.push_back(static_cast<std::uint32_t>(next));
      recurse(next + 1);
      chosen_ids.pop_back();
      chosen.pop_back();
      sets.undo();
    }
    recurse(next + 1);
  };
  recurse(0);
}

TreeResult NoncrossingTreeCatalog::minimum(const CollinearInstance& inst) const {
  if (inst.colors() != colors_) throw InvalidInput("instance colors do not match the tree catalog");
  std::vector<double> w(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) w[i] = edge_weight(inst, edges_[i]);
  const std::size_t per_tree = colors_.size() - 1;
  TreeResult best;
  best.weight = std::numeric_limits<double>::infinity();
  best.tree_count = tree_count_;
  std::size_t arg = 0;
  for (std::size_t t = 0; t < tree_count_; ++t) {
    double sum = 0.0;
    for (std::size_t j = 0; j < per_tree; ++j) sum += w[tree_members_[t * per_tree + j]];
    if (sum < best.weight) {
      best.weight = sum;
      arg = t;
    }
  }
  if (tree_count_ == 0) throw InternalError("no non-crossing spanning tree found");
  for (std::size_t j = 0; j < per_tree; ++j) best.edges.push_back(edges_[tree_members_[arg * per_tree + j]]);
  return best;
}

void NoncrossingTreeCatalog::for_each(const std::function<void(std::span<const ArcEdge>)>& visit) const {
  const std::size_t per_tree = colors_.size() - 1;
  std::vector<ArcEdge> tree(per_tree);
  for (std::size_t t = 0; t < tree_count_; ++t) {
    for (std::size_t j = 0; j < per_tree; ++j) tree[j] = edges_[tree_members_[t * per_tree + j]];
    visit(tree);
  }
}

TreeResult mst_noncrossing(const CollinearInstance& inst, CandidateEdges candidates, const OracleBudget& budget) {
  const auto colors = inst.colors();
  return NoncrossingTreeCatalog(colors, candidates, budget).minimum(inst);
}

std::int64_t tsp_cycle(std::span<const Color> colors, const OracleBudget& budget) {
  const std::size_t n = colors.size();
  check_points(n, budget);
  if (n < 4) throw Infeasible("a bichromatic tour needs at least four points");
  if (2 * static_cast<std::size_t>(std::count(colors.begin(), colors.end(), Color::Red)) != n) {
    throw Infeasible("unbalanced circle");
  }
  StateCounter states(budget.max_states);
  std::vector<char> used(n, 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::function<void(std::size_t, std::size_t, std::int64_t)> recurse = [&](std::size_t at, std::size_t depth,
                                                                            std::int64_t length) {
    states.tick();
    if (depth == n) {
      best = std::min(best, length + circle_weight(at, 0, n));
      return;
    }
    for (std::size_t next = 1; next < n; ++next) {
      if (used[next] || colors[next] == colors[at]) continue;
      used[next] = 1;
      recurse(next, depth + 1, length + circle_weight(at, next, n));
      used[next] = 0;
    }
  };
  used[0] = 1;
  recurse(0, 1, 0);
  return best;
}

std::int64_t tsp_circle(const CircleInstance& inst, const OracleBudget& budget) {
  const auto colors = inst.colors();
  return tsp_cycle(colors, budget);
}

void enumerate_hampaths(const CollinearInstance& inst, PageSet pages, const OracleBudget& budget,
                        const std::function<void(std::span<const ArcEdge>)>& visit) {
  check_points(inst.size(), budget);
  const std::size_t n = inst.size();
  StateCounter states(budget.max_states);
  std::vector<char> used(n, 0);
  std::vector<ArcEdge> path;
  const std::vector<Page> allowed = pages == PageSet::Two ? std::vector<Page>{Page::Above, Page::Below}
                                                          : std::vector<Page>{Page::Above};
  std::size_t start = 0;
  std::function<void(std::size_t, std::size_t)> recurse = [&](std::size_t at, std::size_t depth) {
    states.tick();
    if (depth == n) {
      if (start < at) visit(path);
      return;
    }
    for (std::size_t next = 0; next < n; ++next) {
      if (used[next] || inst.color(next) == inst.color(at)) continue;
      for (const Page pg : allowed) {
        const ArcEdge e(at, next, pg);
        if (crosses_any(e, path)) continue;
        used[next] = 1;
        path.push_back(e);
        recurse(next, depth + 1);
        path.pop_back();
        used[next] = 0;
      }
    }
  };
  for (start = 0; start < n; ++start) {
    used[start] = 1;
    recurse(start, 1);
    used[start] = 0;
  }
}

bool hampath_exists(const CollinearInstance& inst, PageSet pages, const OracleBudget& budget) {
  if (!inst.balanced()) {
    // An alternating path over m+1 and m points exists combinatorially, but
    // the collinear problem is posed for balanced sets only.
    throw Infeasible("instance is unbalanced");
  }
  struct Found {};
  try {
    enumerate_hampaths(inst, pages, budget, [](std::span<const ArcEdge>) { throw Found{}; });
  } catch (const Found&) {
    return true;
  }
  return false;
}

}  // namespace bichroma::oracle
