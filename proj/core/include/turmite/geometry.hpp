#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace turmite {

using Coord = std::int64_t;

// Grid cell, y axis pointing up.
struct Cell {
  Coord x = 0;
  Coord y = 0;

  friend constexpr bool operator==(const Cell&, const Cell&) = default;
  constexpr Cell operator+(const Cell& o) const { return {x + o.x, y + o.y}; }
  constexpr Cell operator-(const Cell& o) const { return {x - o.x, y - o.y}; }
  constexpr Cell& operator+=(const Cell& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
};

struct CellHash {
  std::size_t operator()(const Cell& c) const {
    auto mix = [](std::uint64_t v) {
      v ^= v >> 33;
      v *= 0xff51afd7ed558ccdULL;
      v ^= v >> 33;
      return v;
    };
    return static_cast<std::size_t>(
        mix(static_cast<std::uint64_t>(c.x) * 0x9e3779b97f4a7c15ULL ^
            mix(static_cast<std::uint64_t>(c.y))));
  }
};

// Head states; the numeric order makes a counterclockwise quarter turn a +1.
enum class Dir : std::uint8_t { E = 0, N = 1, W = 2, S = 3 };

constexpr Cell delta(Dir d) {
  switch (d) {
    case Dir::E: return {1, 0};
    case Dir::N: return {0, 1};
    case Dir::W: return {-1, 0};
    case Dir::S: return {0, -1};
  }
  return {};
}

constexpr Dir turn_left(Dir d) {
  return static_cast<Dir>((static_cast<int>(d) + 1) % 4);
}

constexpr Dir turn_right(Dir d) {
  return static_cast<Dir>((static_cast<int>(d) + 3) % 4);
}

constexpr Dir opposite(Dir d) {
  return static_cast<Dir>((static_cast<int>(d) + 2) % 4);
}

// Rotates a direction by `quarter` counterclockwise quarter turns.
constexpr Dir rotated(Dir d, int quarter) {
  return static_cast<Dir>((static_cast<int>(d) + (quarter % 4 + 4)) % 4);
}

// Rotates a point around the origin by `quarter` counterclockwise quarter
// turns.
constexpr Cell rotated(Cell c, int quarter) {
  switch ((quarter % 4 + 4) % 4) {
    case 0: return c;
    case 1: return {-c.y, c.x};
    case 2: return {-c.x, -c.y};
    default: return {c.y, -c.x};
  }
}

constexpr char to_char(Dir d) {
  switch (d) {
    case Dir::E: return 'E';
    case Dir::N: return 'N';
    case Dir::W: return 'W';
    case Dir::S: return 'S';
  }
  return '?';
}

inline Dir parse_dir(char c) {
  switch (c) {
    case 'E': return Dir::E;
    case 'N': return Dir::N;
    case 'W': return Dir::W;
    case 'S': return Dir::S;
    default: throw std::invalid_argument(std::string("bad direction: ") + c);
  }
}

struct Pose {
  Cell cell;
  Dir dir = Dir::E;

  friend constexpr bool operator==(const Pose&, const Pose&) = default;
};

// Internal invariant failures (distinct from input errors so the CLI can map
// them to a dedicated exit code).
struct contract_error : std::logic_error {
  using std::logic_error::logic_error;
};

namespace detail {
inline void check(bool ok, const char* what) {
  if (!ok) throw contract_error(what);
}
}  // namespace detail

}  // namespace turmite
