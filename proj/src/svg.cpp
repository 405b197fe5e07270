#include "polyflow/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "polyflow/io.hpp"

namespace polyflow::svg {

namespace {

struct Bounds {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void add(const Polygon& x) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      min_x = std::min(min_x, x(j, 0));
      max_x = std::max(max_x, x(j, 0));
      // SVG y grows downward; draw with y flipped.
      min_y = std::min(min_y, -x(j, 1));
      max_y = std::max(max_y, -x(j, 1));
    }
  }
};

// Avoid "-0" in the output.
std::string coord(double v) { return io::format_double(v == 0.0 ? 0.0 : v); }

std::string points(const Polygon& x) {
  std::string out;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j) out += ' ';
    out += coord(x(j, 0));
    out += ',';
    out += coord(-x(j, 1));
  }
  return out;
}

void draw(std::ostringstream& out, const Polygon& x, const char* stroke, double width,
          const char* dash, const char* css_class) {
  out << "  <polygon class=\"" << css_class << "\" points=\"" << points(x)
      << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << io::format_double(width)
      << "\" vector-effect=\"non-scaling-stroke\" stroke-linejoin=\"round\"";
  if (dash) out << " stroke-dasharray=\"" << dash << '"';
  out << "/>\n";
}

}  // namespace

std::string render(const Figure& figure, const RenderOptions& options) {
  Bounds b;
  for (const auto& s : figure.samples) b.add(s);
  if (figure.initial) b.add(*figure.initial);
  if (figure.target) b.add(*figure.target);
  if (!std::isfinite(b.min_x)) b = Bounds{-1.0, -1.0, 1.0, 1.0};

  double w = b.max_x - b.min_x;
  double h = b.max_y - b.min_y;
  const double extent = std::max({w, h, 1e-9});
  const double margin = 0.05 * extent;
  // Degenerate (point or segment) drawings still get a visible square canvas.
  if (w < 1e-9 * extent) w = 0.0;
  if (h < 1e-9 * extent) h = 0.0;
  const double vb_x = b.min_x - margin;
  const double vb_y = b.min_y - margin;
  const double vb_w = std::max(w, 1e-3 * extent) + 2.0 * margin;
  const double vb_h = std::max(h, 1e-3 * extent) + 2.0 * margin;
  const double height_px = std::round(options.width_px * vb_h / vb_w);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << io::format_double(options.width_px)
      << "\" height=\"" << io::format_double(height_px) << "\" viewBox=\"" << coord(vb_x) << ' '
      << coord(vb_y) << ' ' << coord(vb_w) << ' ' << coord(vb_h) << "\">\n"
      << "  <rect x=\"" << coord(vb_x) << "\" y=\"" << coord(vb_y) << "\" width=\"" << coord(vb_w)
      << "\" height=\"" << coord(vb_h) << "\" fill=\"white\"/>\n";
  if (figure.target) {
    draw(out, *figure.target, "#555555", options.target_stroke,
         options.dashed_target ? "6 4" : nullptr, "target");
  }
  for (const auto& s : figure.samples) draw(out, s, "#1f5fa8", options.sample_stroke, nullptr, "sample");
  if (figure.initial) draw(out, *figure.initial, "#c0392b", options.initial_stroke, nullptr, "initial");
  out << "</svg>\n";
  return out.str();
}

}  // namespace polyflow::svg
