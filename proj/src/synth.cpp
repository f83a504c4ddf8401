#include "eog/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "eog/errors.hpp"

namespace eog::synth {

KindAmplitudes KindAmplitudes::scaled(double c) const {
  KindAmplitudes out = *this;
  for (auto& a : out.volts) a *= c;
  return out;
}

double WaveformTiming::window(MovementKind kind) const {
  switch (kind) {
    case MovementKind::Left:
    case MovementKind::Right:
    case MovementKind::Down: return saccade;
    case MovementKind::Up: return long_blink;
    case MovementKind::Blink: return blink;
    case MovementKind::DoubleBlink: return double_blink_gap + blink;
    case MovementKind::Neutral: break;
  }
  return 0.0;
}

void validate(const FrontEndModel& fe) {
  if (!(fe.ina_gain > 0.0) || !(fe.bandpass_gain > 0.0)) {
    throw ParameterError("front-end gains must be positive");
  }
  if (!(fe.band_lo < fe.band_hi)) throw ParameterError("front-end band_lo must be < band_hi");
}

void validate(const ScenarioSpec& spec) {
  if (!std::isfinite(spec.fs) || !(spec.fs > 0.0)) throw ParameterError("fs must be positive");
  if (!std::isfinite(spec.duration) || !(spec.duration > 0.0)) {
    throw ParameterError("duration must be positive");
  }
  if (!(spec.noise_rms >= 0.0) || !std::isfinite(spec.drift)) {
    throw ParameterError("noise_rms must be >= 0 and drift finite");
  }
  const auto& tm = spec.timing;
  for (double w : {tm.saccade, tm.long_blink, tm.blink}) {
    if (!(w >= 2.0 * tm.edge) || !(tm.edge > 0.0)) {
      throw ParameterError("waveform windows must be at least two edge lengths");
    }
  }
  if (!(tm.double_blink_gap >= tm.blink)) {
    throw ParameterError("double-blink pulses must not overlap");
  }
  for (double a : spec.amplitudes.volts) {
    if (!std::isfinite(a) || a < 0.0) throw ParameterError("amplitudes must be finite and >= 0");
  }

  for (std::size_t i = 0; i < spec.events.size(); ++i) {
    const auto& e = spec.events[i];
    const std::string where = "planned event " + std::to_string(i);
    if (e.kind == MovementKind::Neutral) throw ParameterError(where + " is Neutral");
    const double end = e.onset + tm.window(e.kind);
    if (!(e.onset >= 0.0) || end > spec.duration) {
      throw ParameterError(where + " lies outside the scenario duration");
    }
    if (i > 0) {
      const auto& prev = spec.events[i - 1];
      const double prev_end = prev.onset + tm.window(prev.kind);
      if (e.onset < prev_end) throw ParameterError(where + " overlaps the previous event");
      if (e.onset - prev_end < kMinEventSpacing - 1e-9) {
        throw ParameterError(where + " starts less than the refractory period after the previous event");
      }
    }
  }
}

double plateau(double tau, double window, double edge) {
  if (tau < 0.0 || tau > window) return 0.0;
  const double pi = std::numbers::pi;
  if (tau < edge) return 0.5 * (1.0 - std::cos(pi * tau / edge));
  if (tau > window - edge) return 0.5 * (1.0 - std::cos(pi * (window - tau) / edge));
  return 1.0;
}

namespace {

// Adds one event's waveform (electrode volts) into the pre-gain channel buffers.
void render(const PlannedEvent& e, const ScenarioSpec& spec, std::vector<double>& h,
            std::vector<double>& v) {
  const auto& tm = spec.timing;
  const double amp = spec.amplitudes[e.kind];
  const double window = tm.window(e.kind);
  const auto first = static_cast<std::size_t>(std::max(0.0, std::floor(e.onset * spec.fs)));
  const auto last = std::min(h.size(), static_cast<std::size_t>(std::ceil((e.onset + window) * spec.fs)) + 1);

  for (std::size_t n = first; n < last; ++n) {
    const double tau = static_cast<double>(n) / spec.fs - e.onset;
    switch (e.kind) {
      case MovementKind::Left: h[n] -= amp * plateau(tau, window, tm.edge); break;
      case MovementKind::Right: h[n] += amp * plateau(tau, window, tm.edge); break;
      case MovementKind::Down: v[n] -= amp * plateau(tau, window, tm.edge); break;
      case MovementKind::Up: v[n] += amp * plateau(tau, window, tm.edge); break;
      case MovementKind::Blink: v[n] += amp * plateau(tau, tm.blink, tm.edge); break;
      case MovementKind::DoubleBlink:
        v[n] += amp * plateau(tau, tm.blink, tm.edge);
        v[n] += amp * plateau(tau - tm.double_blink_gap, tm.blink, tm.edge);
        break;
      case MovementKind::Neutral: break;
    }
  }
}

}  // namespace

SessionRecording synth_session(const ScenarioSpec& spec, const FrontEndModel& frontend) {
  validate(spec);
  validate(frontend);

  const auto count = static_cast<std::size_t>(std::llround(spec.duration * spec.fs)) + 1;
  std::vector<double> h(count, 0.0), v(count, 0.0);
  for (const auto& e : spec.events) render(e, spec, h, v);

  if (spec.noise_rms > 0.0) {
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> noise(0.0, spec.noise_rms);
    for (std::size_t n = 0; n < count; ++n) {
      h[n] += noise(rng);
      v[n] += noise(rng);
    }
  }
  if (spec.drift != 0.0) {
    for (std::size_t n = 0; n < count; ++n) {
      const double d = spec.drift * (static_cast<double>(n) / spec.fs);
      h[n] += d;
      v[n] += d;
    }
  }

  SessionRecording out;
  out.fs = spec.fs;
  out.samples.resize(count);
  const double gain = frontend.total_gain();
  for (std::size_t n = 0; n < count; ++n) {
    out.samples[n] = Sample{static_cast<double>(n) / spec.fs, gain * h[n], gain * v[n]};
  }
  for (const auto& e : spec.events) {
    out.labels.push_back({e.kind, e.onset, spec.timing.window(e.kind)});
  }
  return out;
}

ScenarioSpec random_scenario(std::size_t count, std::uint64_t seed, double min_gap,
                             double max_gap, double fs) {
  if (!(min_gap >= kMinEventSpacing) || !(max_gap >= min_gap)) {
    throw ParameterError("random scenario gaps must satisfy refractory <= min_gap <= max_gap");
  }
  if (!(fs > 0.0)) throw ParameterError("fs must be positive");
  ScenarioSpec spec;
  spec.fs = fs;
  spec.seed = seed;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::size_t> pick(0, kEventKinds.size() - 1);
  std::uniform_real_distribution<double> gap(min_gap, max_gap);

  double t = 1.0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto kind = kEventKinds[pick(rng)];
    // Onsets on the sample grid keep labels and waveforms aligned.
    const double onset = std::round(t * spec.fs) / spec.fs;
    spec.events.push_back({kind, onset});
    t = onset + spec.timing.window(kind) + gap(rng);
  }
  spec.duration = std::round((t + 1.0) * spec.fs) / spec.fs;
  return spec;
}

ScenarioSpec calibration_sweep_spec(double fs, const KindAmplitudes& amplitudes,
                                    int repetitions, double noise_rms, std::uint64_t seed) {
  if (repetitions < 1) throw ParameterError("calibration sweep needs at least one repetition");
  ScenarioSpec spec;
  spec.fs = fs;
  spec.amplitudes = amplitudes;
  spec.noise_rms = noise_rms;
  spec.seed = seed;
  constexpr MovementKind order[] = {MovementKind::Left, MovementKind::Right, MovementKind::Up,
                                    MovementKind::Down, MovementKind::Blink};
  double t = 1.0;
  for (int r = 0; r < repetitions; ++r) {
    for (auto kind : order) {
      spec.events.push_back({kind, t});
      t += 1.5;
    }
  }
  spec.duration = t + 0.5;
  return spec;
}

SessionRecording synth_calibration_sweep(double fs, const KindAmplitudes& amplitudes,
                                         int repetitions, double noise_rms, std::uint64_t seed,
                                         const FrontEndModel& frontend) {
  return synth_session(calibration_sweep_spec(fs, amplitudes, repetitions, noise_rms, seed),
                       frontend);
}

}  // namespace eog::synth
