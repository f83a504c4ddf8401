#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "eog/design.hpp"
#include "eog/errors.hpp"
#include "eog/freqz.hpp"
#include "oracles/filter_oracles.hpp"

using namespace eog;
using namespace eog::dsp;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("freq_response: published cascade has zeros at DC and Nyquist") {
  const auto r = freq_response(paper_cascade(), std::vector<double>{0.0, kPi});
  CHECK(r.magnitude(0) < 1e-9);
  CHECK(r.magnitude(1) < 1e-9);
}

TEST_CASE("freq_response: section 1 DC gain equals coefficient-sum ratio") {
  const FilterCascade s1({paper_cascade().sections()[0]});
  const auto r = freq_response(s1, std::vector<double>{0.0});
  // (0.09797471 + 0.19594942 + 0.09797471) / (1 + 0.02977423 + 0.04296318), exact rational
  CHECK(r.magnitude(0) == doctest::Approx(0.3653259747881823).epsilon(1e-14));
}

TEST_CASE("freq_response: magnitude_db and phase are derived from the complex response") {
  const auto grid = omega_grid(257);
  const auto r = freq_response(paper_cascade(), grid);
  REQUIRE(r.size() == 257);
  CHECK(r.omega.front() == 0.0);
  CHECK(r.omega.back() == kPi);
  for (std::size_t i = 1; i + 1 < r.size(); ++i) {
    const double db = 20.0 * std::log10(std::abs(r.response[i]));
    CHECK(std::abs(r.magnitude_db[i] - db) <= 1e-12 * std::abs(db));
    CHECK(r.phase_rad[i] == std::arg(r.response[i]));
  }
}

TEST_CASE("freq_response: parallel kernel equals serial reference") {
  const auto grid = omega_grid(1001);
  const auto a = freq_response(paper_cascade(), grid);
  const auto b = freq_response_serial(paper_cascade(), grid);
  CHECK(a.response == b.response);
  CHECK(a.phase_rad == b.phase_rad);
}

TEST_CASE("freq_response: omega outside [0, pi] is a domain error") {
  CHECK_THROWS_AS(freq_response(paper_cascade(), std::vector<double>{-0.1}), DomainError);
  CHECK_THROWS_AS(freq_response(paper_cascade(), std::vector<double>{3.2}), DomainError);
  CHECK_THROWS_AS(freq_response_serial(paper_cascade(), std::vector<double>{NAN}), DomainError);
}

TEST_CASE("freq_response agrees with simulated sinusoid gain") {
  for (double omega : {0.03 * kPi, 0.1 * kPi, 0.3 * kPi, 0.5 * kPi, 0.7 * kPi}) {
    std::vector<double> x(12000);
    for (std::size_t n = 0; n < x.size(); ++n) x[n] = std::sin(omega * static_cast<double>(n));
    auto c = paper_cascade();
    const auto y = c.process(x);
    const double simulated = oracle::fitted_amplitude(y, omega, 8000);
    const double analytic = freq_response(c, std::vector<double>{omega}).magnitude(0);
    CHECK(std::abs(simulated - analytic) < 1e-3);
  }
}

TEST_CASE("design: band edges sit at -3 dB and DC/Nyquist are zeros") {
  for (int order : {2, 4}) {
    const double fs = 250.0;
    const auto c = design_butterworth_bandpass(order, fs, 0.5, 30.0);
    CHECK(c.section_count() == static_cast<std::size_t>(order));
    CHECK(std::abs(magnitude_at_hz(c, 0.5, fs) - 1.0 / std::sqrt(2.0)) < 1e-6);
    CHECK(std::abs(magnitude_at_hz(c, 30.0, fs) - 1.0 / std::sqrt(2.0)) < 1e-6);
    CHECK(magnitude_at_hz(c, 0.0, fs) < 1e-9);
    CHECK(magnitude_at_hz(c, fs / 2.0, fs) < 1e-9);
    for (const auto& s : c.sections()) CHECK(stability_check(s));
  }
}

TEST_CASE("design: numerator layout mirrors the reference cascade") {
  const auto c = design_butterworth_bandpass(4, 250.0, 0.5, 30.0);
  const auto& s = c.sections();
  CHECK(s[0].b1 / s[0].b0 == doctest::Approx(2.0));
  CHECK(s[0].b2 / s[0].b0 == doctest::Approx(1.0));
  CHECK(s[1].b0 == 1.0);
  CHECK(s[1].b1 == 2.0);
  CHECK(s[2].b1 == -2.0);
  CHECK(s[3].b1 == -2.0);
  // Within each numerator group: descending pole radius (a2 = r^2).
  CHECK(s[0].a2 >= s[1].a2);
  CHECK(s[2].a2 >= s[3].a2);
}

TEST_CASE("design: passband is maximally flat on a dense grid") {
  const double fs = 250.0, lo = 0.5, hi = 30.0;
  const auto c = design_butterworth_bandpass(4, fs, lo, hi);
  std::vector<double> mag;
  for (int i = 0; i < 200; ++i) {
    const double f = lo + (hi - lo) * i / 199.0;
    mag.push_back(magnitude_at_hz(c, f, fs));
  }
  double peak = 0.0;
  for (double m : mag) peak = std::max(peak, m);
  CHECK(peak == doctest::Approx(1.0).epsilon(1e-9));
  for (std::size_t i = 1; i + 1 < mag.size(); ++i) {
    if (mag[i] <= mag[i - 1] && mag[i] <= mag[i + 1]) CHECK(mag[i] >= peak - 1e-3);
  }
}

TEST_CASE("design: randomized bands stay stable with exact edges") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double fs = 100.0 + 900.0 * u(rng);
    const double lo = 0.05 + 0.2 * fs * u(rng);
    const double hi = lo + (0.49 * fs - lo) * (0.05 + 0.9 * u(rng));
    const int order = (trial % 2) ? 4 : 2;
    const auto c = design_butterworth_bandpass(order, fs, lo, hi);
    for (const auto& s : c.sections()) CHECK(stability_check(s));
    CHECK(std::abs(magnitude_at_hz(c, lo, fs) - M_SQRT1_2) < 1e-6);
    CHECK(std::abs(magnitude_at_hz(c, hi, fs) - M_SQRT1_2) < 1e-6);
  }
}

TEST_CASE("design: parameter errors") {
  CHECK_THROWS_AS(design_butterworth_bandpass(3, 250, 1, 30), ParameterError);
  CHECK_THROWS_AS(design_butterworth_bandpass(4, 250, 30, 1), ParameterError);
  CHECK_THROWS_AS(design_butterworth_bandpass(4, 250, 0, 30), ParameterError);
  CHECK_THROWS_AS(design_butterworth_bandpass(4, 250, 1, 125), ParameterError);
  CHECK_THROWS_AS(design_butterworth_bandpass(4, -1, 1, 30), ParameterError);
}
