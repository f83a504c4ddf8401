#pragma once

#include <string>
#include <vector>

#include "eog/types.hpp"

namespace eog {

// Per-user detection thresholds. Voltages are absolute channel values (thresholds are
// neutral + k * excursion); times are seconds.
struct CalibrationProfile {
  double neutral_mean_h{0.0};
  double neutral_mean_v{0.0};
  double threshold_left{0.0};
  double threshold_right{0.0};
  double threshold_up{0.0};
  double threshold_down{0.0};
  double threshold_blink{0.0};
  double k{0.6};
  double min_hold{0.08};
  double refractory{0.2};
  double blink_max_dur{0.35};
  double long_blink_min_dur{0.45};
  double double_blink_window{0.5};

  // Up and Blink share the positive vertical direction; crossings are detected at the
  // lower of the two thresholds and split by duration afterwards.
  double threshold_vertical_positive() const;

  bool operator==(const CalibrationProfile&) const = default;
};

struct CalibrationOptions {
  double k{0.6};
  double min_hold{0.08};
  double refractory{0.2};
  double blink_max_dur{0.35};
  double long_blink_min_dur{0.45};
  double double_blink_window{0.5};
};

// Builds a profile from a labeled, already-filtered sweep. Neutral means come from every
// sample outside the labeled windows; each direction's peak is the median over its
// repetitions of the channel extremum inside the window.
//
// Throws IncompleteCalibrationError naming the first missing kind, and
// DegenerateCalibrationError when the resulting profile breaks its invariants.
CalibrationProfile calibrate(const SessionRecording& session,
                             const CalibrationOptions& options = {});

std::vector<std::string> validate_profile(const CalibrationProfile& profile);

}  // namespace eog
