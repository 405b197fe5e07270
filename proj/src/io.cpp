#include "polyflow/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "polyflow/errors.hpp"

namespace polyflow::io {

namespace {

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_number(std::string_view field, std::size_t line) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double v = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (ec != std::errc() || ptr != end || field.empty()) {
    throw ParseError("not a number: '" + std::string(field) + "'", line);
  }
  if (!std::isfinite(v)) throw ParseError("non-finite coordinate '" + std::string(field) + "'", line);
  return v;
}

Polygon finish(std::vector<std::vector<double>> rows, std::size_t dim, std::size_t line) {
  if (rows.empty()) throw ParseError("polygon has no vertices", line);
  if (dim < 2) throw ParseError("ambient dimension must be at least 2", line);
  return Polygon::from_rows(rows);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return std::to_string(v);
  return std::string(buf, ptr);
}

Polygon parse_polygon_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), line_of_offset(text, e.byte));
  }
  if (!doc.is_object()) throw ParseError("polygon JSON must be an object", 1);
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError("polygon JSON needs a \"vertices\" array", 1);
  }
  const auto& vertices = doc["vertices"];
  std::size_t dim = 0;
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 2) {
      throw ParseError("\"dim\" must be an integer >= 2", 1);
    }
    dim = doc["dim"].get<std::size_t>();
  } else if (!vertices.empty() && vertices[0].is_array()) {
    dim = vertices[0].size();
  }

  std::vector<std::vector<double>> rows;
  rows.reserve(vertices.size());
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    const auto& v = vertices[j];
    const std::string where = "vertex " + std::to_string(j);
    if (!v.is_array()) throw ParseError(where + " is not an array", 0);
    if (v.size() != dim) {
      throw ParseError(where + " has " + std::to_string(v.size()) + " coordinates, expected " +
                           std::to_string(dim),
                       0);
    }
    std::vector<double> row;
    row.reserve(dim);
    for (const auto& c : v) {
      if (!c.is_number()) throw ParseError(where + " has a non-numeric coordinate", 0);
      const double value = c.get<double>();
      if (!std::isfinite(value)) throw ParseError(where + " has a non-finite coordinate", 0);
      row.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  return finish(std::move(rows), dim, 0);
}

std::string polygon_to_json(const Polygon& x) {
  std::ostringstream out;
  out << "{\"dim\": " << x.dim() << ", \"vertices\": [";
  for (std::size_t j = 0; j < x.size(); ++j) {
    out << (j ? ", [" : "[");
    for (std::size_t i = 0; i < x.dim(); ++i) out << (i ? ", " : "") << format_double(x(j, i));
    out << "]";
  }
  out << "]}\n";
  return out.str();
}

Polygon parse_polygon_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t dim = 0;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_commas(line);
    if (!have_header) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i] != "x" + std::to_string(i + 1)) {
          throw ParseError("expected header x1,...,xp, found '" + std::string(line) + "'", line_no);
        }
      }
      dim = fields.size();
      if (dim < 2) throw ParseError("need at least two coordinate columns", line_no);
      have_header = true;
      continue;
    }
    if (fields.size() != dim) {
      throw ParseError("row has " + std::to_string(fields.size()) + " fields, expected " +
                           std::to_string(dim),
                       line_no);
    }
    std::vector<double> row;
    row.reserve(dim);
    for (auto f : fields) row.push_back(parse_number(f, line_no));
    rows.push_back(std::move(row));
  }
  if (!have_header) throw ParseError("missing header x1,...,xp", line_no);
  return finish(std::move(rows), dim, line_no);
}

std::string polygon_to_csv(const Polygon& x) {
  std::ostringstream out;
  for (std::size_t i = 0; i < x.dim(); ++i) out << (i ? ",x" : "x") << i + 1;
  out << '\n';
  for (std::size_t j = 0; j < x.size(); ++j) {
    for (std::size_t i = 0; i < x.dim(); ++i) out << (i ? "," : "") << format_double(x(j, i));
    out << '\n';
  }
  return out.str();
}

Polygon load_polygon(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto ext = path.extension().string();
  if (ext == ".json") return parse_polygon_json(text);
  if (ext == ".csv") return parse_polygon_csv(text);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_polygon_json(text);
  return parse_polygon_csv(text);
}

std::string trajectory_to_csv(const Trajectory& trajectory) {
  std::ostringstream out;
  const std::size_t dim = trajectory.samples.empty() ? 2 : trajectory.samples.front().polygon.dim();
  out << "t,vertex_index";
  for (std::size_t i = 0; i < dim; ++i) out << ",x" << i + 1;
  out << '\n';
  for (const auto& sample : trajectory.samples) {
    const auto t = format_double(sample.t);
    for (std::size_t j = 0; j < sample.polygon.size(); ++j) {
      out << t << ',' << j;
      for (std::size_t i = 0; i < sample.polygon.dim(); ++i) out << ',' << format_double(sample.polygon(j, i));
      out << '\n';
    }
  }
  return out.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace polyflow::io
