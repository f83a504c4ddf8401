#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "eog/types.hpp"

namespace eog {

// Rows are true kinds, columns predicted kinds plus a trailing Missed column.
// Predictions that matched nothing are counted per predicted kind in false_positives.
struct ConfusionMatrix {
  static constexpr std::size_t kMissed = 6;

  std::array<std::array<std::size_t, 7>, 6> counts{};
  std::array<std::size_t, 6> false_positives{};

  std::size_t correct() const;
  std::size_t total() const;            // number of true events
  std::size_t total_false_positives() const;
  double accuracy() const;              // correct / total; 0 when there are no true events
};

// Greedy one-to-one matching: every (truth, prediction) pair with onset distance
// <= tolerance is considered in order of increasing distance (ties by truth index, then
// prediction index) and accepted when both sides are still free.
ConfusionMatrix evaluate(std::span<const MovementEvent> predicted,
                         std::span<const GroundTruthLabel> truth, double tolerance = 0.15);

}  // namespace eog
