#include "eog/biquad.hpp"

#include <cmath>

#include "eog/errors.hpp"

namespace eog::dsp {

BiquadSection BiquadSection::make(double b0, double b1, double b2, double a1, double a2,
                                  bool strict) {
  for (double c : {b0, b1, b2, a1, a2}) {
    if (!std::isfinite(c)) throw ParameterError("biquad coefficient is not finite");
  }
  BiquadSection s{b0, b1, b2, a1, a2};
  if (strict && !stability_check(s)) {
    throw ParameterError("biquad section is unstable (|a2| < 1 and |a1| < 1 + a2 required)");
  }
  return s;
}

bool stability_check(const BiquadSection& s) {
  return std::abs(s.a2) < 1.0 && std::abs(s.a1) < 1.0 + s.a2;
}

double biquad_step_checked(BiquadState& state, const BiquadSection& section, double input,
                           unsigned long index) {
  if (!std::isfinite(input)) throw NumericError("non-finite filter input", index);
  const double out = biquad_step(state, section, input);
  if (!std::isfinite(out)) throw NumericError("filter output overflowed", index);
  return out;
}

}  // namespace eog::dsp
