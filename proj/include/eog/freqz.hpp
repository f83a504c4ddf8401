#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "eog/cascade.hpp"

namespace eog::dsp {

struct FrequencyResponse {
  std::vector<double> omega;                 // rad/sample, in [0, pi]
  std::vector<std::complex<double>> response;
  std::vector<double> magnitude_db;          // 20 log10 |H|; -inf at exact zeros
  std::vector<double> phase_rad;             // arg H in (-pi, pi]

  std::size_t size() const { return omega.size(); }
  double magnitude(std::size_t i) const { return std::abs(response[i]); }
};

std::complex<double> section_response(const BiquadSection& section, double omega);

// H_total(e^{jw}) = prod_k H_k(e^{jw}). Throws DomainError when any omega lies outside
// [0, pi]. The grid is evaluated in parallel (OpenMP) when available.
FrequencyResponse freq_response(const FilterCascade& cascade, std::span<const double> omega);

// Serial reference for freq_response, kept for tests and benchmarks.
FrequencyResponse freq_response_serial(const FilterCascade& cascade,
                                       std::span<const double> omega);

// n points evenly spaced over [0, pi], endpoints included exactly.
std::vector<double> omega_grid(std::size_t n);

// |H| at a physical frequency in Hz for sample rate fs.
double magnitude_at_hz(const FilterCascade& cascade, double f_hz, double fs);

}  // namespace eog::dsp
