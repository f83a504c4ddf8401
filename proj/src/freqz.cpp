#include "eog/freqz.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "eog/errors.hpp"

namespace eog::dsp {

std::complex<double> section_response(const BiquadSection& s, double omega) {
  const std::complex<double> z1 = std::polar(1.0, -omega);
  const std::complex<double> z2 = std::polar(1.0, -2.0 * omega);
  return (s.b0 + s.b1 * z1 + s.b2 * z2) / (1.0 + s.a1 * z1 + s.a2 * z2);
}

namespace {

void check_grid(std::span<const double> omega) {
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (!(omega[i] >= 0.0 && omega[i] <= std::numbers::pi)) {
      throw DomainError("omega[" + std::to_string(i) + "] = " + std::to_string(omega[i]) +
                        " outside [0, pi]");
    }
  }
}

FrequencyResponse allocate(std::span<const double> omega) {
  FrequencyResponse r;
  r.omega.assign(omega.begin(), omega.end());
  r.response.resize(omega.size());
  r.magnitude_db.resize(omega.size());
  r.phase_rad.resize(omega.size());
  return r;
}

inline void evaluate_point(const std::vector<BiquadSection>& sections, FrequencyResponse& r,
                           std::size_t i) {
  std::complex<double> h{1.0, 0.0};
  for (const auto& s : sections) h *= section_response(s, r.omega[i]);
  r.response[i] = h;
  r.magnitude_db[i] = 20.0 * std::log10(std::abs(h));
  r.phase_rad[i] = std::arg(h);
}

}  // namespace

FrequencyResponse freq_response_serial(const FilterCascade& cascade,
                                       std::span<const double> omega) {
  check_grid(omega);
  auto r = allocate(omega);
  for (std::size_t i = 0; i < r.size(); ++i) evaluate_point(cascade.sections(), r, i);
  return r;
}

FrequencyResponse freq_response(const FilterCascade& cascade, std::span<const double> omega) {
  check_grid(omega);
  auto r = allocate(omega);
  const auto& sections = cascade.sections();
  const auto n = static_cast<std::ptrdiff_t>(r.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) evaluate_point(sections, r, static_cast<std::size_t>(i));
  return r;
}

std::vector<double> omega_grid(std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {0.0};
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = std::numbers::pi * (static_cast<double>(i) / static_cast<double>(n - 1));
  }
  return grid;
}

double magnitude_at_hz(const FilterCascade& cascade, double f_hz, double fs) {
  const double omega = 2.0 * std::numbers::pi * f_hz / fs;
  if (!(omega >= 0.0 && omega <= std::numbers::pi)) {
    throw DomainError("frequency outside [0, fs/2]");
  }
  std::complex<double> h{1.0, 0.0};
  for (const auto& s : cascade.sections()) h *= section_response(s, omega);
  return std::abs(h);
}

}  // namespace eog::dsp
