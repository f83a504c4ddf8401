#include "eog/pipeline.hpp"

#include "eog/design.hpp"

namespace eog {

dsp::FilterCascade make_cascade(const FilterChoice& choice, double fs) {
  if (choice.paper) return dsp::paper_cascade();
  return dsp::design_butterworth_bandpass(choice.order, fs, choice.f_lo, choice.f_hi);
}

SessionRecording synth_sweep_for(const ScenarioFile& scenario) {
  return synth::synth_calibration_sweep(scenario.spec.fs, scenario.spec.amplitudes,
                                        scenario.calibration.repetitions,
                                        scenario.spec.noise_rms, scenario.calibration.seed,
                                        scenario.frontend);
}

}  // namespace eog
