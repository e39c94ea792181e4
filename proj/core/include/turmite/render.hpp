#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "turmite/configuration.hpp"
#include "turmite/geometry.hpp"

namespace turmite {

// Inclusive cell rectangle.
struct Window {
  Cell lo;
  Cell hi;

  Coord width() const { return hi.x - lo.x + 1; }
  Coord height() const { return hi.y - lo.y + 1; }
  bool contains(const Cell& c) const {
    return c.x >= lo.x && c.x <= hi.x && c.y >= lo.y && c.y <= hi.y;
  }
};

// Bounding box of all nonzero cells and the head, padded on each side.
// A configuration with no content yields a small window around the head.
Window frame(const Configuration& config, const Pose& pose, Coord padding = 2);

// Binary PGM (P5). Symbol k maps to gray 255*(n-1-k)/(n-1); rows are written
// top-down (decreasing y). When `head` is given, a 3x3 black square marks it.
void write_pgm(std::ostream& out, const Configuration& config,
               const Window& window, const std::optional<Cell>& head);

// One row per observed pose: "step,x,y,dir".
struct TrajectoryPoint {
  std::uint64_t step = 0;
  Pose pose;
};

void write_csv(std::ostream& out, const std::vector<TrajectoryPoint>& points);

}  // namespace turmite
