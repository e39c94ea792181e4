#include "turmite/simulate.hpp"

namespace turmite {

void step(const TurmiteRule& rule, Configuration& config, Pose& pose) {
  int symbol = config.bump(pose.cell);
  pose.dir =
      rule.turns_right(symbol) ? turn_right(pose.dir) : turn_left(pose.dir);
  pose.cell += delta(pose.dir);
}

void step_inverse(const TurmiteRule& rule, Configuration& config, Pose& pose) {
  pose.cell = pose.cell - delta(pose.dir);
  const int n = rule.colors();
  int current = config.at(pose.cell);
  int previous = (current + n - 1) % n;
  config.set(pose.cell, previous);
  pose.dir = rule.turns_right(previous) ? turn_left(pose.dir)
                                        : turn_right(pose.dir);
}

void run(const TurmiteRule& rule, Configuration& config, Pose& pose,
         std::uint64_t steps) {
  for (std::uint64_t i = 0; i < steps; ++i) step(rule, config, pose);
}

}  // namespace turmite
