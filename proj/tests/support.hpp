#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "bichroma/arc_graph.hpp"
#include "bichroma/instance.hpp"

namespace bichroma::testkit {

/// Places colors with integer gaps in [1, 10] or real gaps in (0, 1].
inline CollinearInstance with_spacing(std::span<const Color> colors, std::mt19937_64& rng, bool integral) {
  std::vector<Point> pts;
  std::uniform_int_distribution<int> igap(1, 10);
  std::uniform_real_distribution<double> rgap(0.0, 1.0);
  double x = 0;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (i > 0) x += integral ? igap(rng) : 1.0 - rgap(rng);
    pts.push_back({x, colors[i]});
  }
  return CollinearInstance(std::move(pts));
}

/// Random colors, both present; balanced on request.
inline CollinearInstance random_instance(std::mt19937_64& rng, std::size_t size, bool balanced, bool integral) {
  std::vector<Color> colors(size);
  if (balanced) {
    for (std::size_t i = 0; i < size; ++i) colors[i] = i < size / 2 ? Color::Red : Color::Blue;
    std::shuffle(colors.begin(), colors.end(), rng);
  } else {
    std::bernoulli_distribution coin(0.5);
    for (auto& c : colors) c = coin(rng) ? Color::Red : Color::Blue;
    if (std::all_of(colors.begin(), colors.end(), [&](Color c) { return c == colors[0]; })) {
      colors[std::uniform_int_distribution<std::size_t>(0, size - 1)(rng)] = complement(colors[0]);
    }
  }
  return with_spacing(colors, rng, integral);
}

inline double plain_weight(const CollinearInstance& inst, std::span<const ArcEdge> edges) {
  double w = 0;
  for (const auto& e : edges) w += std::fabs(inst.x(e.v) - inst.x(e.u));
  return w;
}

inline bool close(double a, double b) { return std::fabs(a - b) <= 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)}); }

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bichroma_test_" + std::to_string(::getpid()) + "_" + name);
}

inline void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Runs the CLI with `args` (already shell-quoted) and captures both streams.
inline CliResult run_cli(const std::string& cli, const std::string& args, const std::string& env = "") {
  const auto err_path = temp_path("stderr.txt");
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + cli + "' " + args + " 2>'" + err_path.string() + "'";
  CliResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = read_text(err_path);
  std::filesystem::remove(err_path);
  return r;
}

}  // namespace bichroma::testkit
