#include "bichroma/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace bichroma {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string header(const RenderStyle& s) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(s.width) + "\" height=\"" + num(s.height) +
         "\" viewBox=\"0 0 " + num(s.width) + " " + num(s.height) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + num(s.width) + "\" height=\"" + num(s.height) + "\" fill=\"white\"/>\n";
  return out;
}

void point(std::string& out, double cx, double cy, Color c, const RenderStyle& s) {
  const double r = s.point_radius;
  if (c == Color::Red) {
    out += "<rect class=\"red\" x=\"" + num(cx - r) + "\" y=\"" + num(cy - r) + "\" width=\"" + num(2 * r) +
           "\" height=\"" + num(2 * r) + "\" fill=\"" + s.red_fill + "\"/>\n";
  } else {
    out += "<circle class=\"blue\" cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) + "\" fill=\"" +
           s.blue_fill + "\"/>\n";
  }
}

}  // namespace

std::string render_collinear(const CollinearInstance& inst, const ArcGraph& g, const RenderStyle& style) {
  const double x0 = inst.x(0);
  const double span = inst.x(inst.size() - 1) - x0;
  const double usable = style.width - 2 * style.margin;
  const double spine = style.height / 2;
  const double vscale = (spine - style.margin) / (usable / 2);
  auto sx = [&](std::size_t i) { return style.margin + (inst.x(i) - x0) / span * usable; };

  std::string out = header(style);
  out += "<line class=\"spine\" x1=\"" + num(style.margin) + "\" y1=\"" + num(spine) + "\" x2=\"" +
         num(style.width - style.margin) + "\" y2=\"" + num(spine) + "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  for (const auto& e : g.edges()) {
    const double a = sx(e.u);
    const double b = sx(e.v);
    const double rx = (b - a) / 2;
    const double ry = rx * vscale * style.page_gap;
    const bool above = e.page.value_or(Page::Above) == Page::Above;
    out += "<path class=\"arc " + std::string(above ? "above" : "below") + "\" d=\"M " + num(a) + " " + num(spine) +
           " A " + num(rx) + " " + num(ry) + " 0 0 " + (above ? "1 " : "0 ") + num(b) + " " + num(spine) +
           "\" fill=\"none\" stroke=\"" + style.arc_stroke + "\" stroke-width=\"" + num(style.stroke_width) + "\"/>\n";
  }
  for (std::size_t i = 0; i < inst.size(); ++i) point(out, sx(i), spine, inst.color(i), style);
  out += "</svg>\n";
  return out;
}

std::string render_circle(const CircleInstance& inst, const ArcGraph& g, const RenderStyle& style) {
  const double cx = style.width / 2;
  const double cy = style.height / 2;
  const double radius = std::min(style.width, style.height) / 2 - style.margin;
  const double total = static_cast<double>(inst.size());
  auto pos = [&](std::size_t i) {
    const double theta = -std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(i) / total;
    return std::pair{cx + radius * std::cos(theta), cy + radius * std::sin(theta)};
  };

  std::string out = header(style);
  out += "<circle class=\"rim\" cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(radius) +
         "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  for (const auto& e : g.edges()) {
    const auto [ax, ay] = pos(e.u);
    const auto [bx, by] = pos(e.v);
    out += "<line class=\"chord\" x1=\"" + num(ax) + "\" y1=\"" + num(ay) + "\" x2=\"" + num(bx) + "\" y2=\"" +
           num(by) + "\" stroke=\"" + style.arc_stroke + "\" stroke-width=\"" + num(style.stroke_width) + "\"/>\n";
  }
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const auto [x, y] = pos(i);
    point(out, x, y, inst.color(i), style);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace bichroma
