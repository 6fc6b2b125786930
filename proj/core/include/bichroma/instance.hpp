#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bichroma {

enum class Color : std::uint8_t { Red, Blue };

constexpr Color complement(Color c) noexcept {
  return c == Color::Red ? Color::Blue : Color::Red;
}

/// 'R' or 'B'.
char to_char(Color c) noexcept;

/// Accepts 'R'/'r' and 'B'/'b'; throws InvalidInput otherwise.
Color color_from_char(char c);

/// Parses a string such as "RRBB" into colors.
std::vector<Color> colors_from_string(std::string_view s);

std::string colors_to_string(std::span<const Color> colors);

struct Point {
  double x = 0.0;
  Color color = Color::Red;
};

/// Colored points on the line y = 0, indexed left to right.
///
/// Point identity is the position in sorted order; coordinates only feed
/// weights. Construction rejects fewer than two points and coordinates that
/// are not strictly increasing.
class CollinearInstance {
 public:
  explicit CollinearInstance(std::vector<Point> points);

  /// Points at x = 0, 1, 2, ... with the given colors.
  static CollinearInstance unit(std::span<const Color> colors);
  static CollinearInstance unit(std::string_view colors);

  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  Color color(std::size_t i) const { return points_[i].color; }
  double x(std::size_t i) const { return points_[i].x; }
  std::span<const Point> points() const noexcept { return points_; }

  std::size_t red_count() const noexcept { return red_count_; }
  std::size_t blue_count() const noexcept { return size() - red_count_; }
  bool balanced() const noexcept { return red_count_ * 2 == size(); }
  bool bichromatic() const noexcept { return red_count_ != 0 && red_count_ != size(); }

  /// True when every coordinate is an integer that doubles represent exactly,
  /// so sums of distances are exact.
  bool integral() const noexcept { return integral_; }

  std::vector<Color> colors() const;
  std::string color_string() const;
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

 private:
  std::vector<Point> points_;
  std::size_t red_count_ = 0;
  bool integral_ = true;
  std::uint64_t fingerprint_ = 0;
};

/// n red and n blue equidistant points on a circle, in alternating chunks of
/// k consecutive same-colored points. Positions 0..2n-1 run clockwise and
/// chunk 0 starts at position 0.
class CircleInstance {
 public:
  CircleInstance(std::size_t n, std::size_t k, Color first_chunk_color = Color::Red);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  Color first_chunk_color() const noexcept { return first_; }

  std::size_t size() const noexcept { return 2 * n_; }
  std::size_t chunk_count() const noexcept { return 2 * n_ / k_; }
  std::size_t chunk_of(std::size_t position) const { return position / k_; }
  Color color(std::size_t position) const;

  std::vector<Color> colors() const;
  std::uint64_t fingerprint() const noexcept;

 private:
  std::size_t n_;
  std::size_t k_;
  Color first_;
};

using Instance = std::variant<CollinearInstance, CircleInstance>;

}  // namespace bichroma
