#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>
#include <vector>

#include "bichroma/instance.hpp"

namespace bichroma {

enum class Family {
  Alternating,       ///< RBRB...
  Chunked,           ///< collinear runs of k, starting red
  RandomBalanced,    ///< uniformly shuffled n red + n blue
  RandomUnbalanced,  ///< independent fair colors, both colors present
  OnePageBlocked,        ///< no one-page non-crossing Hamiltonian path
  CircleChunked,     ///< n red + n blue on a circle in chunks of k
};

enum class Spacing {
  Unit,            ///< x = 0, 1, 2, ...
  RandomPositive,  ///< gaps uniform in (0, 1]
};

std::string_view to_string(Family f) noexcept;
Family family_from_string(std::string_view s);
std::string_view to_string(Spacing s) noexcept;
Spacing spacing_from_string(std::string_view s);

/// Identical specs always give identical instances.
///
/// `size` is the point count for collinear families and n (points per
/// color) for CircleChunked. `k` is the chunk size of Chunked and
/// CircleChunked.
struct GenSpec {
  Family family = Family::Alternating;
  std::size_t size = 2;
  std::size_t k = 1;
  std::uint64_t seed = 0;
  Spacing spacing = Spacing::Unit;
};

/// Throws InvalidInput for an unusable spec (odd size for a balanced family,
/// k not dividing n for a circle, ...).
Instance generate(const GenSpec& spec);

/// Convenience for the collinear families; throws for CircleChunked.
CollinearInstance generate_collinear(const GenSpec& spec);

/// Places `colors` on the line with the requested spacing.
CollinearInstance place(std::span<const Color> colors, Spacing spacing, std::mt19937_64& rng);

/// R BBBB RRRRRR BBBB R: a balanced sequence with no non-crossing
/// Hamiltonian path using only arcs above the spine (two pages suffice).
/// No balanced sequence shorter than 16 points has this property; the 32
/// sequences of length 16 that do are the rotations and color swaps of the
/// cyclic run pattern 6,4,2,4. This is the palindromic one.
std::vector<Color> one_page_blocked_colors();

enum class SequenceFilter { All, BalancedOnly };

/// Calls `visit` with every color sequence of exactly `size` points at unit
/// spacing, in lexicographic order (R before B), with its balance flag.
/// size must be in [2, 16].
void for_each_color_sequence(std::size_t size, SequenceFilter filter,
                             const std::function<void(const CollinearInstance&, bool balanced)>& visit);

std::vector<CollinearInstance> color_sequences(std::size_t size, SequenceFilter filter);

}  // namespace bichroma
