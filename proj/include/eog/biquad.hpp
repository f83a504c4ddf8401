#pragma once

namespace eog::dsp {

// Normalized second-order section, a0 == 1:
//   H(z) = (b0 + b1 z^-1 + b2 z^-2) / (1 + a1 z^-1 + a2 z^-2)
struct BiquadSection {
  double b0{1.0};
  double b1{0.0};
  double b2{0.0};
  double a1{0.0};
  double a2{0.0};

  // Throws ParameterError on non-finite coefficients, and also on unstable poles when
  // `strict` is set.
  static BiquadSection make(double b0, double b1, double b2, double a1, double a2,
                            bool strict = false);

  bool operator==(const BiquadSection&) const = default;
};

// Direct-form II delay line.
struct BiquadState {
  double z1{0.0};
  double z2{0.0};

  void reset() { z1 = 0.0; z2 = 0.0; }
  bool operator==(const BiquadState&) const = default;
};

// Both poles strictly inside the unit circle (stability triangle).
bool stability_check(const BiquadSection& section);

// One direct-form II update:
//   w = x - a1 z1 - a2 z2;  y = b0 w + b1 z1 + b2 z2;  z2 = z1;  z1 = w
// Hot path; does not validate. Use biquad_step_checked for untrusted input.
inline double biquad_step(BiquadState& state, const BiquadSection& s, double input) {
  const double w = input - s.a1 * state.z1 - s.a2 * state.z2;
  const double out = s.b0 * w + s.b1 * state.z1 + s.b2 * state.z2;
  state.z2 = state.z1;
  state.z1 = w;
  return out;
}

// Same as biquad_step but throws NumericError (naming `index`) on non-finite input.
double biquad_step_checked(BiquadState& state, const BiquadSection& section, double input,
                           unsigned long index = 0);

}  // namespace eog::dsp
