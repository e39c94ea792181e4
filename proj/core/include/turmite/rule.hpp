#pragma once

#include <string>
#include <string_view>

namespace turmite {

// A rule is a word over {L, R}: symbol k turns the head left or right.
class TurmiteRule {
 public:
  explicit TurmiteRule(std::string word);

  int colors() const { return static_cast<int>(word_.size()); }
  bool turns_right(int symbol) const { return word_[symbol] == 'R'; }
  const std::string& word() const { return word_; }

  friend bool operator==(const TurmiteRule&, const TurmiteRule&) = default;

 private:
  std::string word_;
};

// Parses a rule word such as "RL" or "RRLL". Throws std::invalid_argument on
// anything but a nonempty string over {L, R}.
TurmiteRule parse_rule(std::string_view text);

// A rule that always turns the same way has 4-periodic dynamics regardless of
// the configuration.
bool is_trivial(const TurmiteRule& rule);

// The two working colors every nontrivial rule provides: `r` turns right on
// first visit and left on the second, `l` the reverse.
struct WorkingColors {
  int r = 0;
  int l = 0;
};

// Smallest r with word[r]=R and word[r+1 mod n]=L, and smallest l with
// word[l]=L and word[l+1 mod n]=R. Requires a nontrivial rule.
WorkingColors select_colors(const TurmiteRule& rule);

}  // namespace turmite
