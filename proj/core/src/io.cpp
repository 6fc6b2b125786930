#include "bichroma/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bichroma/errors.hpp"
#include "json.hpp"

namespace bichroma {
namespace {

using nlohmann::json;

Color parse_color(const std::string& s) {
  if (s.size() != 1) throw InvalidInput("bad color '" + s + "'");
  return color_from_char(s[0]);
}

std::string color_str(Color c) { return std::string(1, to_char(c)); }

Instance parse_json_instance(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("instance JSON: ") + e.what());
  }
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "collinear") {
      std::vector<Point> pts;
      for (const auto& p : j.at("points")) pts.push_back({p.at("x").get<double>(), parse_color(p.at("color"))});
      return CollinearInstance(std::move(pts));
    }
    if (kind == "circle") {
      const auto first = j.contains("first") ? parse_color(j["first"]) : Color::Red;
      return CircleInstance(j.at("n").get<std::size_t>(), j.at("k").get<std::size_t>(), first);
    }
    throw InvalidInput("unknown instance kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("instance JSON: ") + e.what());
  }
}

Instance parse_text_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind;
  if (!(in >> kind)) throw InvalidInput("empty instance");
  if (kind == "collinear") {
    long long m = 0;
    if (!(in >> m) || m < 0) throw InvalidInput("collinear: bad point count");
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
      std::string xs, cs;
      if (!(in >> xs >> cs)) throw InvalidInput("collinear: expected " + std::to_string(m) + " points");
      double x = 0;
      try {
        std::size_t used = 0;
        x = std::stod(xs, &used);
        if (used != xs.size()) throw InvalidInput("");
      } catch (const std::exception&) {
        throw InvalidInput("collinear: bad coordinate '" + xs + "'");
      }
      pts.push_back({x, parse_color(cs)});
    }
    std::string extra;
    if (in >> extra) throw InvalidInput("collinear: trailing data '" + extra + "'");
    return CollinearInstance(std::move(pts));
  }
  if (kind == "circle") {
    long long n = 0, k = 0;
    std::string cs;
    if (!(in >> n >> k >> cs) || n <= 0 || k <= 0) throw InvalidInput("circle: expected '<n> <k> <R|B>'");
    std::string extra;
    if (in >> extra) throw InvalidInput("circle: trailing data '" + extra + "'");
    return CircleInstance(static_cast<std::size_t>(n), static_cast<std::size_t>(k), parse_color(cs));
  }
  throw InvalidInput("unknown instance kind '" + kind + "'");
}

std::string fmt_double(double x) {
  if (std::nearbyint(x) == x && std::fabs(x) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", x);
    return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw InvalidInput("empty instance");
  if (text[first] == '{') return parse_json_instance(text);
  return parse_text_instance(text);
}

Instance read_instance(const std::filesystem::path& path) { return parse_instance(read_file(path)); }

std::string instance_to_text(const Instance& inst) {
  if (const auto* c = std::get_if<CollinearInstance>(&inst)) {
    std::string out = "collinear " + std::to_string(c->size()) + "\n";
    for (const auto& p : c->points()) out += fmt_double(p.x) + " " + to_char(p.color) + "\n";
    return out;
  }
  const auto& circle = std::get<CircleInstance>(inst);
  return "circle " + std::to_string(circle.n()) + " " + std::to_string(circle.k()) + " " +
         to_char(circle.first_chunk_color()) + "\n";
}

std::string instance_to_json(const Instance& inst, int indent) {
  json j;
  if (const auto* c = std::get_if<CollinearInstance>(&inst)) {
    j["kind"] = "collinear";
    j["points"] = json::array();
    for (const auto& p : c->points()) j["points"].push_back({{"x", p.x}, {"color", color_str(p.color)}});
  } else {
    const auto& circle = std::get<CircleInstance>(inst);
    j["kind"] = "circle";
    j["n"] = circle.n();
    j["k"] = circle.k();
    j["first"] = color_str(circle.first_chunk_color());
  }
  return j.dump(indent);
}

std::string report_to_json(const SolveReport& r, int indent) {
  json j;
  j["problem"] = r.problem;
  j["algorithm"] = r.algorithm;
  j["structure_kind"] = std::string(to_string(r.kind));
  j["edges"] = json::array();
  for (const auto& e : r.edges) {
    json ej = {{"u", e.u}, {"v", e.v}};
    if (e.page) ej["page"] = std::string(to_string(*e.page));
    j["edges"].push_back(std::move(ej));
  }
  j["total_weight"] = r.total_weight;
  j["valid"] = r.valid;
  j["noncrossing"] = r.noncrossing;
  j["crossings"] = r.crossings;
  j["violations"] = r.violations;
  if (r.chord_length) j["chord_length"] = *r.chord_length;
  if (r.oracle_weight) j["oracle_weight"] = *r.oracle_weight;
  return j.dump(indent);
}

SolveReport report_from_json(std::string_view text) {
  try {
    const auto j = json::parse(text);
    SolveReport r;
    r.problem = j.value("problem", "");
    r.algorithm = j.value("algorithm", "");
    r.kind = structure_kind_from_string(j.at("structure_kind").get<std::string>());
    for (const auto& ej : j.at("edges")) {
      std::optional<Page> page;
      if (ej.contains("page")) page = page_from_string(ej["page"].get<std::string>());
      r.edges.emplace_back(ej.at("u").get<std::size_t>(), ej.at("v").get<std::size_t>(), page);
    }
    r.total_weight = j.value("total_weight", 0.0);
    r.valid = j.value("valid", false);
    r.noncrossing = j.value("noncrossing", false);
    r.crossings = j.value("crossings", std::size_t{0});
    r.violations = j.value("violations", std::vector<std::string>{});
    if (j.contains("chord_length")) r.chord_length = j["chord_length"].get<double>();
    if (j.contains("oracle_weight")) r.oracle_weight = j["oracle_weight"].get<double>();
    return r;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("report JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw InvalidInput("write failed for '" + path.string() + "'");
}

}  // namespace bichroma
