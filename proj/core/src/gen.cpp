#include "bichroma/gen.hpp"

#include <algorithm>
#include <string>

#include "bichroma/errors.hpp"

namespace bichroma {
namespace {

std::vector<Color> alternating(std::size_t size) {
  std::vector<Color> c(size);
  for (std::size_t i = 0; i < size; ++i) c[i] = i % 2 == 0 ? Color::Red : Color::Blue;
  return c;
}

std::vector<Color> chunked(std::size_t size, std::size_t k) {
  if (k == 0) throw InvalidInput("chunk size must be positive");
  std::vector<Color> c(size);
  for (std::size_t i = 0; i < size; ++i) c[i] = (i / k) % 2 == 0 ? Color::Red : Color::Blue;
  return c;
}

}  // namespace

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::Alternating: return "alternating";
    case Family::Chunked: return "chunked";
    case Family::RandomBalanced: return "random-balanced";
    case Family::RandomUnbalanced: return "random-unbalanced";
    case Family::OnePageBlocked: return "one-page-blocked";
    case Family::CircleChunked: return "circle";
  }
  return "?";
}

Family family_from_string(std::string_view s) {
  for (const Family f : {Family::Alternating, Family::Chunked, Family::RandomBalanced, Family::RandomUnbalanced,
                         Family::OnePageBlocked, Family::CircleChunked}) {
    if (s == to_string(f)) return f;
  }
  throw InvalidInput("unknown family '" + std::string(s) + "'");
}

std::string_view to_string(Spacing s) noexcept { return s == Spacing::Unit ? "unit" : "random"; }

Spacing spacing_from_string(std::string_view s) {
  if (s == "unit") return Spacing::Unit;
  if (s == "random") return Spacing::RandomPositive;
  throw InvalidInput("unknown spacing '" + std::string(s) + "'");
}

CollinearInstance place(std::span<const Color> colors, Spacing spacing, std::mt19937_64& rng) {
  std::vector<Point> pts(colors.size());
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double x = 0.0;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (i > 0) x += spacing == Spacing::Unit ? 1.0 : 1.0 - unit(rng);  // (0, 1]
    pts[i] = {x, colors[i]};
  }
  return CollinearInstance(std::move(pts));
}

std::vector<Color> one_page_blocked_colors() { return colors_from_string("RBBBBRRRRRRBBBBR"); }

Instance generate(const GenSpec& spec) {
  if (spec.family == Family::CircleChunked) return CircleInstance(spec.size, spec.k, Color::Red);
  return generate_collinear(spec);
}

CollinearInstance generate_collinear(const GenSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<Color> colors;
  switch (spec.family) {
    case Family::Alternating:
      colors = alternating(spec.size);
      break;
    case Family::Chunked:
      colors = chunked(spec.size, spec.k);
      break;
    case Family::RandomBalanced: {
      if (spec.size % 2 != 0) throw InvalidInput("random-balanced needs an even size");
      colors = alternating(spec.size);
      std::shuffle(colors.begin(), colors.end(), rng);
      break;
    }
    case Family::RandomUnbalanced: {
      if (spec.size < 2) throw InvalidInput("random-unbalanced needs at least two points");
      std::bernoulli_distribution coin(0.5);
      colors.resize(spec.size);
      do {
        for (auto& c : colors) c = coin(rng) ? Color::Red : Color::Blue;
      } while (std::all_of(colors.begin(), colors.end(), [&](Color c) { return c == colors.front(); }));
      break;
    }
    case Family::OnePageBlocked:
      if (spec.size != 16) throw InvalidInput("one-page-blocked family has exactly 16 points");
      colors = one_page_blocked_colors();
      break;
    case Family::CircleChunked:
      throw InvalidInput("circle family does not produce a collinear instance");
  }
  return place(colors, spec.spacing, rng);
}

void for_each_color_sequence(std::size_t size, SequenceFilter filter,
                             const std::function<void(const CollinearInstance&, bool balanced)>& visit) {
  if (size < 2 || size > 16) throw InvalidInput("exhaustive color sequences support 2..16 points");
  std::vector<Color> colors(size);
  for (std::uint32_t mask = 0; mask < (1U << size); ++mask) {
    std::size_t blue = 0;
    // Most significant position first so R < B lexicographically.
    for (std::size_t i = 0; i < size; ++i) {
      const bool is_blue = (mask >> (size - 1 - i)) & 1U;
      colors[i] = is_blue ? Color::Blue : Color::Red;
      blue += is_blue ? 1 : 0;
    }
    const bool balanced = 2 * blue == size;
    if (filter == SequenceFilter::BalancedOnly && !balanced) continue;
    visit(CollinearInstance::unit(colors), balanced);
  }
}

std::vector<CollinearInstance> color_sequences(std::size_t size, SequenceFilter filter) {
  std::vector<CollinearInstance> out;
  for_each_color_sequence(size, filter, [&](const CollinearInstance& inst, bool) { out.push_back(inst); });
  return out;
}

}  // namespace bichroma
