#include "turmite/configuration.hpp"

#include <stdexcept>

namespace turmite {

Configuration::Configuration(int colors) : colors_(colors) {
  if (colors < 1) throw std::invalid_argument("configuration needs >= 1 color");
}

void Configuration::set(const Cell& c, int symbol) {
  if (symbol < 0 || symbol >= colors_)
    throw std::invalid_argument("symbol out of range");
  if (symbol == 0)
    cells_.erase(c);
  else
    cells_[c] = symbol;
}

int Configuration::bump(const Cell& c) {
  auto it = cells_.find(c);
  if (it == cells_.end()) {
    if (colors_ > 1) cells_.emplace(c, 1);
    return 0;
  }
  int old = it->second;
  int next = (old + 1) % colors_;
  if (next == 0)
    cells_.erase(it);
  else
    it->second = next;
  return old;
}

}  // namespace turmite
