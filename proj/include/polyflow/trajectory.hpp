#pragma once

#include <string>
#include <vector>

#include "polyflow/polygon.hpp"

namespace polyflow {

enum class FlowKind { polyharmonic, yau };

inline const char* to_string(FlowKind kind) {
  return kind == FlowKind::polyharmonic ? "polyharmonic" : "yau";
}

struct TrajectorySample {
  double t = 0.0;
  Polygon polygon;
};

struct Trajectory {
  FlowKind kind = FlowKind::polyharmonic;
  int m = 1;
  std::vector<TrajectorySample> samples;
  std::vector<std::string> warnings;
};

}  // namespace polyflow
