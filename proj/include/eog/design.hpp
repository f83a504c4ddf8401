#pragma once

#include "eog/cascade.hpp"

namespace eog::dsp {

// Butterworth band-pass as second-order sections.
//
// The analog low-pass prototype of the given order is shifted to a band-pass around the
// prewarped edges (w = 2 fs tan(pi f / fs)), then mapped to z with the bilinear
// transform, so |H| is exactly 1/sqrt(2) at f_lo and f_hi. The result has `order`
// sections: the higher-frequency half of the pole pairs carry (1 + z^-1)^2 numerators
// and come first, the rest carry (1 - z^-1)^2. Within each half sections are ordered by
// descending pole radius. Overall gain sits on the first section and makes |H| = 1 at
// the band center.
//
// order must be 2 or 4; requires 0 < f_lo < f_hi < fs / 2. Throws ParameterError.
FilterCascade design_butterworth_bandpass(int order, double fs, double f_lo, double f_hi);

}  // namespace eog::dsp
