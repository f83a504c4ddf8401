#pragma once

#include <cstdint>

#include "eog/calibration.hpp"
#include "eog/cascade.hpp"
#include "eog/synth.hpp"

namespace eog {

// Which cascade a pipeline stage uses.
struct FilterChoice {
  bool paper{false};
  int order{2};
  double f_lo{0.02};
  double f_hi{10.0};
};

dsp::FilterCascade make_cascade(const FilterChoice& choice, double fs);

// How `run` builds the calibration sweep that precedes classification.
struct CalibrationPlan {
  int repetitions{3};
  std::uint64_t seed{1};
  CalibrationOptions options;
};

// Everything a scenario file describes.
struct ScenarioFile {
  synth::ScenarioSpec spec;
  synth::FrontEndModel frontend;
  FilterChoice filter;
  CalibrationPlan calibration;
};

// The calibration sweep for a scenario: same fs, amplitudes, noise level and front end,
// its own seed.
SessionRecording synth_sweep_for(const ScenarioFile& scenario);

}  // namespace eog
