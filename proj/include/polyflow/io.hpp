#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "polyflow/polygon.hpp"
#include "polyflow/trajectory.hpp"

namespace polyflow::io {

// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

// {"dim": p, "vertices": [[x1, ..., xp], ...]}
Polygon parse_polygon_json(std::string_view text);
std::string polygon_to_json(const Polygon& x);

// Header x1,...,xp then one vertex per row.
Polygon parse_polygon_csv(std::string_view text);
std::string polygon_to_csv(const Polygon& x);

// Format chosen by extension (.json / .csv), otherwise by content.
Polygon load_polygon(const std::filesystem::path& path);

// Columns t, vertex_index, x1..xp; one row per vertex per sample.
std::string trajectory_to_csv(const Trajectory& trajectory);

void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace polyflow::io
