#pragma once

#include <unordered_map>

#include "turmite/geometry.hpp"

namespace turmite {

// Symbol assignment over the grid: finitely many cells differ from the
// quiescent symbol 0. The override map is kept normalized (never stores 0),
// so configurations compare equal iff they agree cell by cell.
class Configuration {
 public:
  explicit Configuration(int colors);

  int colors() const { return colors_; }

  int at(const Cell& c) const {
    auto it = cells_.find(c);
    return it == cells_.end() ? 0 : it->second;
  }

  void set(const Cell& c, int symbol);

  // Adds 1 mod n to the symbol at c and returns the old symbol.
  int bump(const Cell& c);

  std::size_t filled() const { return cells_.size(); }
  const std::unordered_map<Cell, int, CellHash>& overrides() const {
    return cells_;
  }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  int colors_;
  std::unordered_map<Cell, int, CellHash> cells_;
};

}  // namespace turmite
