#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bichroma/instance.hpp"

namespace bichroma {

/// Halfplane of the spine an arc is drawn in.
enum class Page : std::uint8_t { Above, Below };

constexpr Page opposite(Page p) noexcept {
  return p == Page::Above ? Page::Below : Page::Above;
}

std::string_view to_string(Page p) noexcept;
Page page_from_string(std::string_view s);

/// An edge between two point indices, stored with u < v. Collinear edges
/// carry a page; circle chords do not.
struct ArcEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::optional<Page> page;

  ArcEdge() = default;
  /// Normalizes the endpoint order. Throws InvalidInput on a self-loop.
  ArcEdge(std::size_t a, std::size_t b, std::optional<Page> pg = std::nullopt);

  friend bool operator==(const ArcEdge&, const ArcEdge&) = default;
};

double edge_weight(const CollinearInstance& inst, const ArcEdge& e);

/// Point-count metric: the smaller number of points on the two circle arcs
/// between the endpoints, both endpoints included.
std::int64_t edge_weight(const CircleInstance& inst, const ArcEdge& e);

/// Euclidean chord length on a circle of unit radius.
double chord_length(const CircleInstance& inst, const ArcEdge& e);

/// True iff both arcs lie on the same page and their index intervals
/// properly interleave. Shared endpoints, nesting and disjointness never cross.
bool arcs_cross(const ArcEdge& a, const ArcEdge& b) noexcept;

/// Number of crossing pairs among `edges` over `point_count` points, in
/// O(E log N). With `respect_pages` false every edge is treated as lying on
/// one page, which is also the chord-crossing test for points on a circle.
std::size_t count_crossings(std::span<const ArcEdge> edges, std::size_t point_count,
                            bool respect_pages = true);

/// Compares weights: exactly when the instance has integral coordinates and
/// with a relative tolerance of 1e-9 otherwise.
class WeightOrder {
 public:
  explicit WeightOrder(bool exact) noexcept : exact_(exact) {}
  bool tied(double a, double b) const noexcept;
  bool less(double a, double b) const noexcept { return a < b && !tied(a, b); }
  bool exact() const noexcept { return exact_; }

 private:
  bool exact_;
};

inline constexpr double kRelativeTolerance = 1e-9;

enum class StructureKind : std::uint8_t { HamPath, SpanningTree, Matching, Tour };

std::string_view to_string(StructureKind k) noexcept;
StructureKind structure_kind_from_string(std::string_view s);

/// A set of bichromatic edges bound to one instance.
///
/// Construction checks index range, bichromaticity and duplicates (two edges
/// with the same endpoints are duplicates regardless of page).
class ArcGraph {
 public:
  ArcGraph(const CollinearInstance& inst, std::vector<ArcEdge> edges);
  ArcGraph(const CircleInstance& inst, std::vector<ArcEdge> edges);

  std::span<const ArcEdge> edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t point_count() const noexcept { return point_count_; }
  std::uint64_t instance_fingerprint() const noexcept { return fingerprint_; }

 private:
  template <class Inst>
  void check(const Inst& inst);

  std::vector<ArcEdge> edges_;
  std::size_t point_count_ = 0;
  std::uint64_t fingerprint_ = 0;
};

struct Validation {
  bool ok = false;
  bool noncrossing = false;
  std::size_t crossings = 0;
  std::vector<std::string> violations;
};

/// Structural check of `g` as the given kind, plus crossing-freeness.
/// Throws InvalidInput if `g` was built over a different instance.
Validation validate(const CollinearInstance& inst, const ArcGraph& g, StructureKind kind);
Validation validate(const CircleInstance& inst, const ArcGraph& g, StructureKind kind);

double total_weight(const CollinearInstance& inst, std::span<const ArcEdge> edges);
std::int64_t total_weight(const CircleInstance& inst, std::span<const ArcEdge> edges);

/// A solver result together with the checks run on it.
struct SolveReport {
  std::string problem;
  std::string algorithm;
  StructureKind kind = StructureKind::HamPath;
  std::vector<ArcEdge> edges;
  double total_weight = 0.0;
  bool valid = false;
  bool noncrossing = false;
  std::size_t crossings = 0;
  std::vector<std::string> violations;
  /// Circle tours only: sum of unit-radius chord lengths.
  std::optional<double> chord_length;
  /// Filled by verification runs.
  std::optional<double> oracle_weight;
};

SolveReport make_report(const CollinearInstance& inst, std::vector<ArcEdge> edges,
                        StructureKind kind, std::string problem, std::string algorithm);
SolveReport make_report(const CircleInstance& inst, std::vector<ArcEdge> edges,
                        StructureKind kind, std::string problem, std::string algorithm);

}  // namespace bichroma
