#include <cmath>

#include "doctest.h"
#include "eog/calibration.hpp"
#include "eog/classifier.hpp"
#include "eog/errors.hpp"
#include "eog/evaluate.hpp"
#include "eog/pipeline.hpp"
#include "eog/synth.hpp"

using namespace eog;

namespace {

SessionRecording raw_sweep(int reps = 3, double noise = 0.0, std::uint64_t seed = 0) {
  return synth::synth_calibration_sweep(250.0, {}, reps, noise, seed);
}

SessionRecording filtered(const SessionRecording& s) {
  return dsp::filter_session(make_cascade(FilterChoice{}, s.fs), s);
}

SessionRecording scaled(SessionRecording s, double c) {
  for (auto& x : s.samples) {
    x.h *= c;
    x.v *= c;
  }
  return s;
}

void check_rel(double got, double want, double rel) {
  CHECK(std::abs(got - want) <= rel * std::abs(want));
}

}  // namespace

TEST_CASE("calibrate: noise-free raw sweep gives 0.6 of the Right plateau") {
  const auto p = calibrate(raw_sweep());
  CHECK(p.neutral_mean_h == 0.0);
  CHECK(p.neutral_mean_v == 0.0);
  CHECK(p.threshold_right == doctest::Approx(0.6 * 100e-6 * 152.5).epsilon(1e-12));
  CHECK(p.threshold_right == doctest::Approx(0.00915).epsilon(1e-12));
  CHECK(p.threshold_left == doctest::Approx(-0.00915).epsilon(1e-12));
  CHECK(p.threshold_down == doctest::Approx(-0.00915).epsilon(1e-12));
  CHECK(p.threshold_up == doctest::Approx(0.0183).epsilon(1e-12));
  CHECK(p.threshold_blink == doctest::Approx(0.0183).epsilon(1e-12));
  CHECK(validate_profile(p).empty());
}

TEST_CASE("calibrate: options carry through to the profile") {
  CalibrationOptions o;
  o.k = 0.5;
  o.min_hold = 0.05;
  o.refractory = 0.3;
  const auto p = calibrate(raw_sweep(), o);
  CHECK(p.k == 0.5);
  CHECK(p.min_hold == 0.05);
  CHECK(p.refractory == 0.3);
  CHECK(p.threshold_right == doctest::Approx(0.5 * 0.01525).epsilon(1e-12));
}

TEST_CASE("calibrate: missing Down labels name the kind") {
  auto s = raw_sweep();
  std::erase_if(s.labels, [](const auto& l) { return l.kind == MovementKind::Down; });
  try {
    (void)calibrate(s);
    FAIL("expected IncompleteCalibrationError");
  } catch (const IncompleteCalibrationError& e) {
    CHECK(std::string(e.what()).find("Down") != std::string::npos);
  }
}

TEST_CASE("calibrate: every missing kind is reported") {
  for (auto kind : {MovementKind::Left, MovementKind::Right, MovementKind::Up, MovementKind::Down,
                    MovementKind::Blink}) {
    auto s = raw_sweep(1);
    std::erase_if(s.labels, [&](const auto& l) { return l.kind == kind; });
    CHECK_THROWS_AS((void)calibrate(s), IncompleteCalibrationError);
  }
}

TEST_CASE("calibrate: two identical sweeps concatenated match one sweep") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto one = filtered(raw_sweep(3, 5e-6, seed));
    auto two = one;
    const double shift = one.samples.back().t + 1.0 / one.fs;
    const std::size_t n = one.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto x = one.samples[i];
      x.t = shift + static_cast<double>(i) / one.fs;
      two.samples.push_back(x);
    }
    for (auto l : one.labels) {
      l.onset += shift;
      two.labels.push_back(l);
    }
    const auto a = calibrate(one);
    const auto b = calibrate(two);
    const double tol = 1e-12;
    CHECK(std::abs(a.neutral_mean_h - b.neutral_mean_h) <= tol);
    CHECK(std::abs(a.neutral_mean_v - b.neutral_mean_v) <= tol);
    CHECK(std::abs(a.threshold_left - b.threshold_left) <= tol);
    CHECK(std::abs(a.threshold_right - b.threshold_right) <= tol);
    CHECK(std::abs(a.threshold_up - b.threshold_up) <= tol);
    CHECK(std::abs(a.threshold_down - b.threshold_down) <= tol);
    CHECK(std::abs(a.threshold_blink - b.threshold_blink) <= tol);
  }
}

TEST_CASE("calibrate: scaling the sweep scales every voltage field") {
  const auto base_session = filtered(raw_sweep(3, 1e-5, 9));
  const auto base = calibrate(base_session);
  for (double c : {3.7, 0.25, 1e3}) {
    const auto p = calibrate(scaled(base_session, c));
    check_rel(p.neutral_mean_h, c * base.neutral_mean_h, 1e-12);
    check_rel(p.neutral_mean_v, c * base.neutral_mean_v, 1e-12);
    check_rel(p.threshold_left, c * base.threshold_left, 1e-12);
    check_rel(p.threshold_right, c * base.threshold_right, 1e-12);
    check_rel(p.threshold_up, c * base.threshold_up, 1e-12);
    check_rel(p.threshold_down, c * base.threshold_down, 1e-12);
    check_rel(p.threshold_blink, c * base.threshold_blink, 1e-12);
    CHECK(p.k == base.k);
    CHECK(p.min_hold == base.min_hold);
    CHECK(p.refractory == base.refractory);
    CHECK(p.blink_max_dur == base.blink_max_dur);
    CHECK(p.long_blink_min_dur == base.long_blink_min_dur);
    CHECK(p.double_blink_window == base.double_blink_window);
  }
}

TEST_CASE("calibrate: pure function of the session") {
  const auto s = filtered(raw_sweep(3, 1e-5, 4));
  CHECK(calibrate(s) == calibrate(s));
}

TEST_CASE("calibrate: pure noise is degenerate") {
  auto s = raw_sweep(1, 1e-5, 11);
  for (auto& x : s.samples) {
    x.h = 0.0;
    x.v = 0.0;
  }
  CHECK_THROWS_AS((void)calibrate(s), DegenerateCalibrationError);
}

TEST_CASE("validate_profile: examples") {
  const auto clean = calibrate(raw_sweep());
  CHECK(validate_profile(clean).empty());

  auto bad = clean;
  bad.threshold_left = clean.neutral_mean_h + 0.001;
  auto v = validate_profile(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("ordering violation") != std::string::npos);

  bad = clean;
  bad.k = 1.5;
  v = validate_profile(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("k out of range") != std::string::npos);

  bad = clean;
  bad.blink_max_dur = 0.5;
  CHECK_FALSE(validate_profile(bad).empty());

  bad = clean;
  bad.refractory = 0.0;
  CHECK_FALSE(validate_profile(bad).empty());
}

TEST_CASE("calibrate: classifying the sweep recovers its own events") {
  SUBCASE("noise-free: all of them") {
    const auto s = filtered(raw_sweep(3));
    const auto m = evaluate(classify_stream(s, calibrate(s)), s.labels);
    CHECK(m.accuracy() == 1.0);
  }
  SUBCASE("noisy: at least 80%") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto s = filtered(raw_sweep(3, 1e-5, seed));
      const auto m = evaluate(classify_stream(s, calibrate(s)), s.labels);
      CHECK(m.accuracy() >= 0.8);
    }
  }
}
