#pragma once

#include <cstdint>

#include "turmite/configuration.hpp"
#include "turmite/geometry.hpp"
#include "turmite/rule.hpp"

namespace turmite {

// One transition: turn on the current cell's symbol, bump the symbol, move
// one cell forward along the new direction.
void step(const TurmiteRule& rule, Configuration& config, Pose& pose);

// Exact inverse of step.
void step_inverse(const TurmiteRule& rule, Configuration& config, Pose& pose);

void run(const TurmiteRule& rule, Configuration& config, Pose& pose,
         std::uint64_t steps);

// Calls observer(t, pose) at t = 0 with the initial pose and after each of
// the `steps` transitions.
template <typename F>
void watch(const TurmiteRule& rule, Configuration& config, Pose& pose,
           std::uint64_t steps, F&& observer) {
  observer(std::uint64_t{0}, static_cast<const Pose&>(pose));
  for (std::uint64_t t = 1; t <= steps; ++t) {
    step(rule, config, pose);
    observer(t, static_cast<const Pose&>(pose));
  }
}

}  // namespace turmite
