#include "eog/design.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "eog/errors.hpp"
#include "eog/freqz.hpp"

namespace eog::dsp {

namespace {

using cplx = std::complex<double>;

void check_parameters(int order, double fs, double f_lo, double f_hi) {
  if (order != 2 && order != 4) throw ParameterError("band-pass order must be 2 or 4");
  if (!std::isfinite(fs) || !(fs > 0.0)) throw ParameterError("sample rate must be positive");
  if (!std::isfinite(f_lo) || !std::isfinite(f_hi)) {
    throw ParameterError("band edges must be finite");
  }
  if (!(f_lo > 0.0)) throw ParameterError("lower band edge must be > 0 Hz");
  if (!(f_lo < f_hi)) throw ParameterError("lower band edge must be below upper edge");
  if (!(f_hi < fs / 2.0)) throw ParameterError("upper band edge must be below fs/2");
}

}  // namespace

FilterCascade design_butterworth_bandpass(int order, double fs, double f_lo, double f_hi) {
  check_parameters(order, fs, f_lo, f_hi);
  const double pi = std::numbers::pi;

  const double w_lo = 2.0 * fs * std::tan(pi * f_lo / fs);
  const double w_hi = 2.0 * fs * std::tan(pi * f_hi / fs);
  const double w0_sq = w_lo * w_hi;
  const double bandwidth = w_hi - w_lo;

  // Low-pass prototype poles on the left half of the unit circle, each split into two
  // band-pass poles: s^2 - p B s + w0^2 = 0.
  std::vector<cplx> upper;
  for (int k = 1; k <= order; ++k) {
    const cplx p = std::polar(1.0, pi * (2.0 * k + order - 1) / (2.0 * order));
    const cplx half = p * bandwidth / 2.0;
    const cplx root = std::sqrt(half * half - w0_sq);
    for (const cplx s : {half + root, half - root}) {
      if (s.imag() > 0.0) upper.push_back((2.0 * fs + s) / (2.0 * fs - s));
    }
  }
  if (upper.size() != static_cast<std::size_t>(order)) {
    throw ParameterError("band-pass design produced real poles; band too wide");
  }

  std::sort(upper.begin(), upper.end(),
            [](const cplx& a, const cplx& b) { return std::arg(a) > std::arg(b); });
  const auto half_count = upper.size() / 2;
  auto by_radius = [](const cplx& a, const cplx& b) { return std::abs(a) > std::abs(b); };
  std::sort(upper.begin(), upper.begin() + half_count, by_radius);
  std::sort(upper.begin() + half_count, upper.end(), by_radius);

  std::vector<BiquadSection> sections;
  for (std::size_t i = 0; i < upper.size(); ++i) {
    const double sign = i < half_count ? 2.0 : -2.0;
    sections.push_back({1.0, sign, 1.0, -2.0 * upper[i].real(), std::norm(upper[i])});
  }

  const double center = 2.0 * std::atan(std::sqrt(w0_sq) / (2.0 * fs));
  cplx h{1.0, 0.0};
  for (const auto& s : sections) h *= section_response(s, center);
  const double gain = 1.0 / std::abs(h);
  sections.front().b0 *= gain;
  sections.front().b1 *= gain;
  sections.front().b2 *= gain;

  for (const auto& s : sections) {
    if (!stability_check(s)) throw ParameterError("band-pass design is numerically unstable");
  }
  return FilterCascade(std::move(sections));
}

}  // namespace eog::dsp
