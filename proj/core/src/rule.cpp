#include "turmite/rule.hpp"

#include <stdexcept>

#include "turmite/geometry.hpp"

namespace turmite {

TurmiteRule::TurmiteRule(std::string word) : word_(std::move(word)) {
  if (word_.empty()) throw std::invalid_argument("empty rule word");
  for (char c : word_) {
    if (c != 'L' && c != 'R')
      throw std::invalid_argument("rule word must be over {L, R}");
  }
}

TurmiteRule parse_rule(std::string_view text) {
  return TurmiteRule(std::string(text));
}

bool is_trivial(const TurmiteRule& rule) {
  const std::string& w = rule.word();
  return w.find('L') == std::string::npos || w.find('R') == std::string::npos;
}

WorkingColors select_colors(const TurmiteRule& rule) {
  detail::check(!is_trivial(rule), "select_colors requires a nontrivial rule");
  const int n = rule.colors();
  WorkingColors out{-1, -1};
  for (int k = 0; k < n && out.r < 0; ++k) {
    if (rule.turns_right(k) && !rule.turns_right((k + 1) % n)) out.r = k;
  }
  for (int k = 0; k < n && out.l < 0; ++k) {
    if (!rule.turns_right(k) && rule.turns_right((k + 1) % n)) out.l = k;
  }
  detail::check(out.r >= 0 && out.l >= 0, "working colors must exist");
  return out;
}

}  // namespace turmite
