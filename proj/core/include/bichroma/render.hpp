#pragma once

#include <string>

#include "bichroma/arc_graph.hpp"
#include "bichroma/instance.hpp"

namespace bichroma {

/// Red points are drawn as squares and blue points as disks.
struct RenderStyle {
  double width = 800.0;
  double height = 400.0;
  double margin = 20.0;
  double point_radius = 5.0;
  std::string red_fill = "#d62728";
  std::string blue_fill = "#1f77b4";
  std::string arc_stroke = "#333333";
  double stroke_width = 1.5;
  /// Vertical scale of arcs relative to half their span. An arc across the
  /// whole spine reaches the margin at 1.0.
  double page_gap = 1.0;
};

/// Arc diagram: points on a horizontal spine, each edge as a half-ellipse
/// above or below it. Apex height is proportional to span, so nested arcs
/// are strictly taller. Byte-identical output for identical inputs.
std::string render_collinear(const CollinearInstance& inst, const ArcGraph& g, const RenderStyle& style = {});

/// Chord diagram: points equally spaced clockwise from the top, edges as
/// straight chords.
std::string render_circle(const CircleInstance& inst, const ArcGraph& g, const RenderStyle& style = {});

}  // namespace bichroma
