#include "bichroma/arc_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "bichroma/errors.hpp"

namespace bichroma {
namespace {

class Fenwick {
 public:
  explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {}
  void add(std::size_t i) {
    for (++i; i < tree_.size(); i += i & (~i + 1)) ++tree_[i];
  }
  // Sum over [0, i).
  std::size_t prefix(std::size_t i) const {
    std::size_t s = 0;
    for (; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
  }

 private:
  std::vector<std::size_t> tree_;
};

using Interval = std::pair<std::size_t, std::size_t>;

// Pairs (a, b) with a.u < b.u < a.v < b.v.
std::size_t count_interleaving(std::vector<Interval>& iv, std::size_t point_count) {
  std::sort(iv.begin(), iv.end());
  Fenwick ends(point_count);
  std::size_t total = 0;
  for (std::size_t i = 0; i < iv.size();) {
    std::size_t j = i;
    while (j < iv.size() && iv[j].first == iv[i].first) ++j;
    for (std::size_t t = i; t < j; ++t) {
      const auto [u, v] = iv[t];
      if (v > u + 1) total += ends.prefix(v) - ends.prefix(u + 1);
    }
    for (std::size_t t = i; t < j; ++t) ends.add(iv[t].second);
    i = j;
  }
  return total;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

Validation validate_structure(std::size_t n, std::span<const ArcEdge> edges, StructureKind kind,
                              bool respect_pages) {
  Validation out;
  std::vector<std::size_t> degree(n, 0);
  DisjointSets sets(n);
  std::size_t components = n;
  bool acyclic = true;
  for (const auto& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
    if (sets.unite(e.u, e.v)) {
      --components;
    } else {
      acyclic = false;
    }
  }
  auto fail = [&](std::string msg) { out.violations.push_back(std::move(msg)); };
  const std::size_t e_count = edges.size();

  switch (kind) {
    case StructureKind::HamPath: {
      if (e_count != n - 1) fail("path needs " + std::to_string(n - 1) + " edges, found " + std::to_string(e_count));
      const auto ends = std::count(degree.begin(), degree.end(), std::size_t{1});
      for (std::size_t i = 0; i < n; ++i) {
        if (degree[i] == 0 || degree[i] > 2) fail("point " + std::to_string(i) + " has degree " + std::to_string(degree[i]));
      }
      if (ends != 2) fail("path must have exactly two endpoints, found " + std::to_string(ends));
      if (components != 1) fail("path is disconnected");
      if (!acyclic) fail("path contains a cycle");
      break;
    }
    case StructureKind::SpanningTree:
      if (e_count != n - 1) fail("tree needs " + std::to_string(n - 1) + " edges, found " + std::to_string(e_count));
      if (components != 1) fail("tree is disconnected");
      if (!acyclic) fail("tree contains a cycle");
      break;
    case StructureKind::Matching:
      for (std::size_t i = 0; i < n; ++i) {
        if (degree[i] != 1) fail("point " + std::to_string(i) + " has degree " + std::to_string(degree[i]));
      }
      break;
    case StructureKind::Tour:
      if (n < 4) fail("a bichromatic tour needs at least four points");
      for (std::size_t i = 0; i < n; ++i) {
        if (degree[i] != 2) fail("point " + std::to_string(i) + " has degree " + std::to_string(degree[i]));
      }
      if (components != 1) fail("tour is not a single cycle");
      break;
  }
  out.crossings = count_crossings(edges, n, respect_pages);
  out.noncrossing = out.crossings == 0;
  out.ok = out.violations.empty();
  return out;
}

template <class Inst>
SolveReport report_impl(const Inst& inst, std::vector<ArcEdge> edges, StructureKind kind,
                        std::string problem, std::string algorithm) {
  SolveReport r;
  r.problem = std::move(problem);
  r.algorithm = std::move(algorithm);
  r.kind = kind;
  const ArcGraph g(inst, std::move(edges));
  auto v = validate(inst, g, kind);
  r.edges.assign(g.edges().begin(), g.edges().end());
  r.total_weight = static_cast<double>(total_weight(inst, r.edges));
  r.valid = v.ok;
  r.noncrossing = v.noncrossing;
  r.crossings = v.crossings;
  r.violations = std::move(v.violations);
  return r;
}

}  // namespace

std::string_view to_string(Page p) noexcept { return p == Page::Above ? "above" : "below"; }

Page page_from_string(std::string_view s) {
  if (s == "above" || s == "A" || s == "Above") return Page::Above;
  if (s == "below" || s == "B" || s == "Below") return Page::Below;
  throw InvalidInput("invalid page '" + std::string(s) + "'");
}

ArcEdge::ArcEdge(std::size_t a, std::size_t b, std::optional<Page> pg)
    : u(std::min(a, b)), v(std::max(a, b)), page(pg) {
  if (a == b) throw InvalidInput("self-loop at point " + std::to_string(a));
}

double edge_weight(const CollinearInstance& inst, const ArcEdge& e) {
  if (e.u == e.v) throw InvalidInput("self-loop at point " + std::to_string(e.u));
  if (e.v >= inst.size()) throw InvalidInput("edge index out of range");
  return std::fabs(inst.x(e.v) - inst.x(e.u));
}

std::int64_t edge_weight(const CircleInstance& inst, const ArcEdge& e) {
  if (e.u == e.v) throw InvalidInput("self-loop at point " + std::to_string(e.u));
  if (e.u >= inst.size() || e.v >= inst.size()) throw InvalidInput("edge index out of range");
  const auto total = static_cast<std::int64_t>(inst.size());
  const auto d = static_cast<std::int64_t>(e.v > e.u ? e.v - e.u : e.u - e.v);
  return std::min(d, total - d) + 1;
}

double chord_length(const CircleInstance& inst, const ArcEdge& e) {
  const double d = static_cast<double>(e.v > e.u ? e.v - e.u : e.u - e.v);
  return 2.0 * std::sin(std::numbers::pi * d / static_cast<double>(inst.size()));
}

bool arcs_cross(const ArcEdge& a, const ArcEdge& b) noexcept {
  if (a.page != b.page) return false;
  return (a.u < b.u && b.u < a.v && a.v < b.v) || (b.u < a.u && a.u < b.v && b.v < a.v);
}

std::size_t count_crossings(std::span<const ArcEdge> edges, std::size_t point_count, bool respect_pages) {
  // Buckets: no page, above, below.
  std::vector<Interval> buckets[3];
  for (const auto& e : edges) {
    std::size_t slot = 0;
    if (respect_pages && e.page) slot = *e.page == Page::Above ? 1 : 2;
    buckets[slot].emplace_back(e.u, e.v);
  }
  std::size_t total = 0;
  for (auto& b : buckets) total += count_interleaving(b, point_count);
  return total;
}

bool WeightOrder::tied(double a, double b) const noexcept {
  if (exact_) return a == b;
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= kRelativeTolerance * scale;
}

std::string_view to_string(StructureKind k) noexcept {
  switch (k) {
    case StructureKind::HamPath: return "HamPath";
    case StructureKind::SpanningTree: return "SpanningTree";
    case StructureKind::Matching: return "Matching";
    case StructureKind::Tour: return "Tour";
  }
  return "?";
}

StructureKind structure_kind_from_string(std::string_view s) {
  if (s == "HamPath") return StructureKind::HamPath;
  if (s == "SpanningTree") return StructureKind::SpanningTree;
  if (s == "Matching") return StructureKind::Matching;
  if (s == "Tour") return StructureKind::Tour;
  throw InvalidInput("unknown structure kind '" + std::string(s) + "'");
}

template <class Inst>
void ArcGraph::check(const Inst& inst) {
  point_count_ = inst.size();
  fingerprint_ = inst.fingerprint();
  for (const auto& e : edges_) {
    if (e.u == e.v) throw InvalidInput("self-loop at point " + std::to_string(e.u));
    if (e.u > e.v) throw InvalidInput("edge endpoints not normalized");
    if (e.v >= point_count_) throw InvalidInput("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
    if (inst.color(e.u) == inst.color(e.v)) {
      throw InvalidInput("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not bichromatic");
    }
  }
  std::vector<Interval> keys;
  keys.reserve(edges_.size());
  for (const auto& e : edges_) keys.emplace_back(e.u, e.v);
  std::sort(keys.begin(), keys.end());
  const auto dup = std::adjacent_find(keys.begin(), keys.end());
  if (dup != keys.end()) {
    throw InvalidInput("duplicate edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
  }
}

ArcGraph::ArcGraph(const CollinearInstance& inst, std::vector<ArcEdge> edges) : edges_(std::move(edges)) {
  check(inst);
}

ArcGraph::ArcGraph(const CircleInstance& inst, std::vector<ArcEdge> edges) : edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.page) throw InvalidInput("circle chords carry no page");
  }
  check(inst);
}

Validation validate(const CollinearInstance& inst, const ArcGraph& g, StructureKind kind) {
  if (g.instance_fingerprint() != inst.fingerprint()) throw InvalidInput("graph belongs to a different instance");
  return validate_structure(inst.size(), g.edges(), kind, true);
}

Validation validate(const CircleInstance& inst, const ArcGraph& g, StructureKind kind) {
  if (g.instance_fingerprint() != inst.fingerprint()) throw InvalidInput("graph belongs to a different instance");
  return validate_structure(inst.size(), g.edges(), kind, false);
}

double total_weight(const CollinearInstance& inst, std::span<const ArcEdge> edges) {
  double sum = 0.0;
  for (const auto& e : edges) sum += edge_weight(inst, e);
  return sum;
}

std::int64_t total_weight(const CircleInstance& inst, std::span<const ArcEdge> edges) {
  std::int64_t sum = 0;
  for (const auto& e : edges) sum += edge_weight(inst, e);
  return sum;
}

SolveReport make_report(const CollinearInstance& inst, std::vector<ArcEdge> edges, StructureKind kind,
                        std::string problem, std::string algorithm) {
  return report_impl(inst, std::move(edges), kind, std::move(problem), std::move(algorithm));
}

SolveReport make_report(const CircleInstance& inst, std::vector<ArcEdge> edges, StructureKind kind,
                        std::string problem, std::string algorithm) {
  auto r = report_impl(inst, std::move(edges), kind, std::move(problem), std::move(algorithm));
  double chords = 0.0;
  for (const auto& e : r.edges) chords += chord_length(inst, e);
  r.chord_length = chords;
  return r;
}

}  // namespace bichroma
