#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyflow/polygon.hpp"

namespace polyflow::svg {

struct RenderOptions {
  double sample_stroke = 1.0;
  double initial_stroke = 2.0;
  double target_stroke = 1.5;
  bool dashed_target = true;
  double width_px = 600.0;
};

// Superimposes the samples on one canvas. The viewBox covers the union of
// everything drawn plus a 5% margin; there is no per-frame rescaling, so
// shrinking shapes stay visibly smaller. Polygons in R^p, p > 2, are drawn
// by their first two coordinates.
struct Figure {
  std::vector<Polygon> samples;
  std::optional<Polygon> initial;
  std::optional<Polygon> target;
};

std::string render(const Figure& figure, const RenderOptions& options = {});

}  // namespace polyflow::svg
