#include "bichroma/tsp_circle.hpp"

#include <string>

#include "bichroma/errors.hpp"

namespace bichroma {
namespace {

void require_tour_size(const CircleInstance& inst) {
  if (inst.size() < 4) throw Infeasible("a bichromatic tour needs at least four points");
}

std::size_t red_special(const CircleInstance& inst, const Group& g) {
  return inst.color(g.first_special()) == Color::Red ? g.first_special() : g.last_special();
}

std::size_t blue_special(const CircleInstance& inst, const Group& g) {
  return inst.color(g.first_special()) == Color::Blue ? g.first_special() : g.last_special();
}

}  // namespace

GroupDecomposition decompose_groups(const CircleInstance& inst) {
  const std::size_t total = inst.size();
  const std::size_t k = inst.k();
  const std::size_t q = k / 2 + (k % 2);  // run length: k/2 even, (k+1)/2 odd
  GroupDecomposition out;
  out.run_length = q;
  out.groups.reserve(inst.chunk_count());
  for (std::size_t g = 0; g < inst.chunk_count(); ++g) {
    const std::size_t boundary = g * k;
    Group grp;
    grp.leading.reserve(q);
    grp.trailing.reserve(q);
    for (std::size_t j = 0; j < q; ++j) grp.leading.push_back((boundary + total - q + j) % total);
    for (std::size_t j = 0; j < q; ++j) grp.trailing.push_back(boundary + j);
    out.groups.push_back(std::move(grp));
  }
  return out;
}

std::vector<ArcEdge> group_path_edges(const Group& group) {
  const std::size_t q = group.leading.size();
  // a(j), b(j) with 1-based j as in the zigzag description.
  auto a = [&](std::size_t j) { return group.leading[j - 1]; };
  auto b = [&](std::size_t j) { return group.trailing[q - j]; };
  std::vector<ArcEdge> edges;
  edges.reserve(2 * q - 1);
  if (q == 1) {
    edges.emplace_back(a(1), b(1));
    return edges;
  }
  edges.emplace_back(a(q), b(q));
  edges.emplace_back(a(q), b(q - 1));
  for (std::size_t j = q - 1; j >= 2; --j) {
    edges.emplace_back(a(j), b(j + 1));
    edges.emplace_back(a(j), b(j - 1));
  }
  edges.emplace_back(a(1), b(2));
  return edges;
}

std::vector<ArcEdge> tsp_even_edges(const CircleInstance& inst) {
  if (inst.k() % 2 != 0) throw InvalidInput("tsp_even needs an even chunk size, got k=" + std::to_string(inst.k()));
  require_tour_size(inst);
  const auto groups = decompose_groups(inst).groups;
  std::vector<ArcEdge> edges;
  edges.reserve(inst.size());
  for (const auto& g : groups) {
    const auto path = group_path_edges(g);
    edges.insert(edges.end(), path.begin(), path.end());
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const Group& next = groups[(i + 1) % groups.size()];
    edges.emplace_back(red_special(inst, groups[i]), blue_special(inst, next));
  }
  return edges;
}

std::vector<ArcEdge> tsp_odd_edges(const CircleInstance& inst) {
  if (inst.k() % 2 == 0) throw InvalidInput("tsp_odd needs an odd chunk size, got k=" + std::to_string(inst.k()));
  require_tour_size(inst);
  std::vector<ArcEdge> edges;
  edges.reserve(inst.size());
  for (const auto& g : decompose_groups(inst).groups) {
    const auto path = group_path_edges(g);
    edges.insert(edges.end(), path.begin(), path.end());
  }
  return edges;
}

std::vector<ArcEdge> tsp_tour_edges(const CircleInstance& inst) {
  return inst.k() % 2 == 0 ? tsp_even_edges(inst) : tsp_odd_edges(inst);
}

SolveReport tsp_even(const CircleInstance& inst) {
  return make_report(inst, tsp_even_edges(inst), StructureKind::Tour, "tsp", "chunked-even");
}

SolveReport tsp_odd(const CircleInstance& inst) {
  return make_report(inst, tsp_odd_edges(inst), StructureKind::Tour, "tsp", "chunked-odd");
}

SolveReport tsp_solve(const CircleInstance& inst) { return inst.k() % 2 == 0 ? tsp_even(inst) : tsp_odd(inst); }

std::int64_t tsp_formula(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw InvalidInput("tsp_formula needs n >= 1 and k >= 1");
  if (n % k != 0) throw InvalidInput("k=" + std::to_string(k) + " does not divide n=" + std::to_string(n));
  const std::int64_t chunks_per_color = n / k;
  return k % 2 == 0 ? n * (k + 2) + 2 * chunks_per_color : n * (k + 2) + chunks_per_color;
}

}  // namespace bichroma
