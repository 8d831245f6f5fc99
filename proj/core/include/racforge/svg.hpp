#pragma once

#include <string>
#include <vector>

#include "racforge/graph.hpp"
#include "racforge/optimizer.hpp"

namespace racforge {

struct SvgOptions {
  double scale = 20.0;  // pixels per drawing unit, > 0
  bool show_crossings = true;
  std::vector<std::string> highlight_roles;
  double edge_stroke_width = 1.5;
  double marker_stroke_width = 1.0;
};

/// Deterministic SVG document. Perpendicular crossings are marked with
/// right-angle glyphs when show_crossings is set; vertices named by a
/// highlighted role are colored per role. Rationals are converted to floats
/// at render time only.
std::string render_svg(const Drawing& d, const SvgOptions& opts, const RoleMap& roles = {});
std::string render_svg(const FloatDrawing& d, const SvgOptions& opts, const RoleMap& roles = {});

}  // namespace racforge
