#include "bichroma/instance.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "bichroma/errors.hpp"

namespace bichroma {
namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void mix(std::uint64_t& h, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xffU;
    h *= kFnvPrime;
  }
}

// 2^53: beyond this doubles no longer represent every integer.
constexpr double kExactIntegerLimit = 9007199254740992.0;

}  // namespace

char to_char(Color c) noexcept { return c == Color::Red ? 'R' : 'B'; }

Color color_from_char(char c) {
  switch (c) {
    case 'R':
    case 'r':
      return Color::Red;
    case 'B':
    case 'b':
      return Color::Blue;
    default:
      throw InvalidInput(std::string("invalid color '") + c + "', expected R or B");
  }
}

std::vector<Color> colors_from_string(std::string_view s) {
  std::vector<Color> out;
  out.reserve(s.size());
  for (char c : s) out.push_back(color_from_char(c));
  return out;
}

std::string colors_to_string(std::span<const Color> colors) {
  std::string s;
  s.reserve(colors.size());
  for (Color c : colors) s.push_back(to_char(c));
  return s;
}

CollinearInstance::CollinearInstance(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw InvalidInput("a collinear instance needs at least two points");
  std::uint64_t h = kFnvOffset;
  mix(h, points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const double x = points_[i].x;
    if (!std::isfinite(x)) throw InvalidInput("point " + std::to_string(i) + " has a non-finite coordinate");
    if (i > 0 && !(points_[i - 1].x < x)) {
      throw InvalidInput("coordinates must be strictly increasing (point " + std::to_string(i) + ")");
    }
    if (points_[i].color == Color::Red) ++red_count_;
    if (integral_ && (std::floor(x) != x || std::fabs(x) >= kExactIntegerLimit)) integral_ = false;
    mix(h, static_cast<std::uint64_t>(points_[i].color));
    mix(h, std::bit_cast<std::uint64_t>(x));
  }
  fingerprint_ = h;
}

CollinearInstance CollinearInstance::unit(std::span<const Color> colors) {
  std::vector<Point> pts;
  pts.reserve(colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i) pts.push_back({static_cast<double>(i), colors[i]});
  return CollinearInstance(std::move(pts));
}

CollinearInstance CollinearInstance::unit(std::string_view colors) {
  const auto cs = colors_from_string(colors);
  return unit(std::span<const Color>(cs));
}

std::vector<Color> CollinearInstance::colors() const {
  std::vector<Color> out;
  out.reserve(size());
  for (const auto& p : points_) out.push_back(p.color);
  return out;
}

std::string CollinearInstance::color_string() const {
  std::string s;
  s.reserve(size());
  for (const auto& p : points_) s.push_back(to_char(p.color));
  return s;
}

CircleInstance::CircleInstance(std::size_t n, std::size_t k, Color first_chunk_color)
    : n_(n), k_(k), first_(first_chunk_color) {
  if (n == 0) throw InvalidInput("circle instance needs n >= 1");
  if (k == 0) throw InvalidInput("circle instance needs chunk size k >= 1");
  if (n % k != 0) {
    throw InvalidInput("chunk size k=" + std::to_string(k) + " does not divide n=" + std::to_string(n));
  }
}

Color CircleInstance::color(std::size_t position) const {
  if (position >= size()) throw InvalidInput("circle position out of range");
  return chunk_of(position) % 2 == 0 ? first_ : complement(first_);
}

std::vector<Color> CircleInstance::colors() const {
  std::vector<Color> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(color(i));
  return out;
}

std::uint64_t CircleInstance::fingerprint() const noexcept {
  std::uint64_t h = kFnvOffset;
  mix(h, 0xc1c1eULL);
  mix(h, n_);
  mix(h, k_);
  mix(h, static_cast<std::uint64_t>(first_));
  return h;
}

}  // namespace bichroma
