#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "eog/types.hpp"

namespace eog::synth {

// Analog front end: instrumentation amplifier followed by an active band-pass stage.
// The band is kept as metadata only; the synthesizer applies just the gain chain.
struct FrontEndModel {
  double ina_gain{1.0};
  double bandpass_gain{152.5};
  double band_lo{20.0};
  double band_hi{500.0};

  double total_gain() const { return ina_gain * bandpass_gain; }
};

// Electrode-level (pre-gain) amplitude per event kind, volts.
struct KindAmplitudes {
  std::array<double, 6> volts{100e-6, 100e-6, 200e-6, 100e-6, 200e-6, 200e-6};

  double& operator[](MovementKind kind) { return volts[static_cast<std::size_t>(kind)]; }
  double operator[](MovementKind kind) const { return volts[static_cast<std::size_t>(kind)]; }
  KindAmplitudes scaled(double c) const;
};

// Waveform geometry, seconds.
struct WaveformTiming {
  double saccade{0.6};        // Left / Right / Down plateau window
  double long_blink{0.6};     // Up
  double blink{0.15};         // one blink pulse
  double double_blink_gap{0.3};  // onset-to-onset of the two pulses
  double edge{0.02};          // raised-cosine rise and fall

  double window(MovementKind kind) const;
};

struct PlannedEvent {
  MovementKind kind{MovementKind::Left};
  double onset{0.0};
};

struct ScenarioSpec {
  double fs{250.0};
  double duration{10.0};
  std::vector<PlannedEvent> events;
  KindAmplitudes amplitudes;
  double noise_rms{0.0};  // electrode-level Gaussian noise, volts
  double drift{0.0};      // electrode-level linear drift, volts / second
  std::uint64_t seed{0};
  WaveformTiming timing;
};

// Minimum end-to-onset spacing between planned events (the classifier's default
// refractory period).
inline constexpr double kMinEventSpacing = 0.2;

// Throws ParameterError on an invalid spec or front end (overlap, spacing, onsets out of
// range, bad rates or gains).
void validate(const ScenarioSpec& spec);
void validate(const FrontEndModel& frontend);

// Raised-cosine plateau of length `window` with `edge`-second transitions; 0 outside.
double plateau(double tau, double window, double edge);

// Labeled two-channel session. Sign conventions: Left negative / Right positive on h;
// Down negative, Up and blinks positive on v. Noise and drift are added at the electrode
// and amplified with the signal. Deterministic in (spec, frontend).
SessionRecording synth_session(const ScenarioSpec& spec, const FrontEndModel& frontend = {});

// Event plan of `count` events with kinds drawn uniformly from all six, spaced by
// end-to-onset gaps uniform in [min_gap, max_gap] after a 1 s lead-in. Sets duration to
// leave 1 s after the last event.
ScenarioSpec random_scenario(std::size_t count, std::uint64_t seed, double min_gap = 0.8,
                             double max_gap = 1.4, double fs = 250.0);

// Cycles Left, Right, Up, Down, Blink `repetitions` times, 1.5 s apart after a 1 s lead-in.
ScenarioSpec calibration_sweep_spec(double fs, const KindAmplitudes& amplitudes,
                                    int repetitions, double noise_rms = 0.0,
                                    std::uint64_t seed = 0);

SessionRecording synth_calibration_sweep(double fs, const KindAmplitudes& amplitudes,
                                         int repetitions, double noise_rms = 0.0,
                                         std::uint64_t seed = 0,
                                         const FrontEndModel& frontend = {});

}  // namespace eog::synth
