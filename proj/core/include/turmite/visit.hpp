#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turmite/configuration.hpp"
#include "turmite/geometry.hpp"
#include "turmite/rule.hpp"

namespace turmite {

// One instance of the cell-visit decision problem:
//   cells '#' start '#' dir '#' target '#' time
// with cells a (possibly empty) sequence of (x,y,c) triples describing the
// nonzero part of the initial configuration.
struct VisitInstance {
  std::vector<std::pair<Cell, int>> cells;
  Cell start;
  Dir dir = Dir::E;
  Cell target;
  std::uint64_t time = 0;

  friend bool operator==(const VisitInstance&, const VisitInstance&) = default;
};

// Parses the textual encoding. Cell colors must be nonnegative; when `rule`
// is given they must additionally be < rule->colors(). Duplicate cells are
// rejected. Throws std::invalid_argument on malformed input.
VisitInstance parse_visit(std::string_view text,
                          const TurmiteRule* rule = nullptr);

// Canonical text form; parse_visit(serialize_visit(v)) == v, and serializing
// a parsed string reproduces it byte for byte.
std::string serialize_visit(const VisitInstance& instance);

// Builds the initial configuration described by the instance.
Configuration initial_configuration(const VisitInstance& instance, int colors);

// True iff the head occupies the target cell at some time 0 <= t < time.
bool decide_visit(const TurmiteRule& rule, const VisitInstance& instance);

}  // namespace turmite
