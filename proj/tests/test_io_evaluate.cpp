#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>

#include "doctest.h"
#include "eog/errors.hpp"
#include "eog/evaluate.hpp"
#include "eog/format.hpp"
#include "eog/io.hpp"
#include "eog/synth.hpp"
#include "json.hpp"

using namespace eog;

namespace {

double nine_digits(double x) { return std::stod(format_number(x)); }

SessionRecording random_session(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 0.01);
  SessionRecording s;
  s.fs = 250.0;
  for (std::size_t i = 0; i < n; ++i) {
    s.samples.push_back({nine_digits(static_cast<double>(i) / 250.0), nine_digits(g(rng)),
                         nine_digits(g(rng))});
  }
  return s;
}

SessionRecording read_csv(const std::string& text) {
  std::istringstream in(text);
  return io::read_session(in);
}

std::string write_csv(const SessionRecording& s) {
  std::ostringstream out;
  io::write_session(s, out);
  return out.str();
}

bool same_samples(const SessionRecording& a, const SessionRecording& b) {
  if (a.size() != b.size() || a.fs != b.fs) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto &x = a.samples[i], &y = b.samples[i];
    if (x.t != y.t || x.h != y.h || x.v != y.v) return false;
  }
  return true;
}

std::vector<MovementEvent> as_events(const std::vector<GroundTruthLabel>& labels) {
  std::vector<MovementEvent> out;
  for (const auto& l : labels) out.push_back({l.kind, l.onset, l.duration, 0.0});
  return out;
}

std::size_t idx(MovementKind k) { return static_cast<std::size_t>(k); }

}  // namespace

TEST_CASE("session CSV: 1000 samples round-trip bit for bit") {
  const auto s = random_session(1000, 3);
  const auto back = read_csv(write_csv(s));
  CHECK(back.fs == 250.0);
  CHECK(same_samples(s, back));
  CHECK(back.labels.empty());
  CHECK(write_csv(back) == write_csv(s));
}

TEST_CASE("session CSV: labels at onset rows round-trip") {
  auto spec = synth::random_scenario(12, 5);
  spec.noise_rms = 1e-5;
  spec.seed = 5;
  const auto s = synth::synth_session(spec);
  const auto text = write_csv(s);
  const auto back = read_csv(text);
  REQUIRE(back.labels.size() == s.labels.size());
  for (std::size_t i = 0; i < s.labels.size(); ++i) {
    CHECK(back.labels[i].kind == s.labels[i].kind);
    CHECK(back.labels[i].onset == nine_digits(s.labels[i].onset));
    CHECK(back.labels[i].duration == nine_digits(s.labels[i].duration));
  }
  CHECK(write_csv(back) == text);
  CHECK(text.substr(0, 12) == "t,h,v,label\n");
}

TEST_CASE("session CSV: 9-digit data survives a file round trip") {
  const auto path = std::filesystem::temp_directory_path() / "eog_test_session.csv";
  const auto s = random_session(300, 8);
  io::write_session(s, path);
  CHECK(same_samples(io::read_session(path), s));
  std::filesystem::remove(path);
}

TEST_CASE("session CSV: shuffled row is non-monotone at its line") {
  auto text = std::string("t,h,v\n");
  for (int i = 0; i < 10; ++i) {
    char row[64];
    std::snprintf(row, sizeof row, "%s,0,0\n", format_number(i / 250.0).c_str());
    text += row;
  }
  // Swap data rows 5 and 6 (file lines 6 and 7).
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  std::swap(lines[5], lines[6]);
  std::string shuffled;
  for (const auto& l : lines) shuffled += l + "\n";
  try {
    (void)read_csv(shuffled);
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.line() == 7);
    CHECK(std::string(e.what()).find("non-monotone") != std::string::npos);
  }
}

TEST_CASE("session CSV: format errors") {
  SUBCASE("missing v column") {
    try {
      (void)read_csv("t,h\n0,1\n0.004,2\n");
      FAIL("expected FormatError");
    } catch (const FormatError& e) {
      CHECK(e.line() == 1);
      CHECK(std::string(e.what()).find("missing column v") != std::string::npos);
    }
  }
  SUBCASE("ragged row") {
    try {
      (void)read_csv("t,h,v\n0,1,2\n0.004,2\n");
      FAIL("expected FormatError");
    } catch (const FormatError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("inconsistent spacing") {
    try {
      (void)read_csv("t,h,v\n0,0,0\n0.004,0,0\n0.008,0,0\n0.013,0,0\n");
      FAIL("expected FormatError");
    } catch (const FormatError& e) {
      CHECK(e.line() == 5);
    }
  }
  SUBCASE("not a number") {
    CHECK_THROWS_AS((void)read_csv("t,h,v\n0,0,0\n0.004,abc,0\n"), FormatError);
  }
  SUBCASE("non-finite") {
    CHECK_THROWS_AS((void)read_csv("t,h,v\n0,0,0\n0.004,nan,0\n"), FormatError);
  }
  SUBCASE("unknown label") {
    CHECK_THROWS_AS((void)read_csv("t,h,v,label\n0,0,0,Wink:0.1\n0.004,0,0,\n"), FormatError);
  }
  SUBCASE("single sample") {
    CHECK_THROWS_AS((void)read_csv("t,h,v\n0,0,0\n"), FormatError);
  }
}

TEST_CASE("profile JSON: lossless round trip") {
  CalibrationProfile p;
  p.neutral_mean_h = 1.0 / 3.0;
  p.neutral_mean_v = -2.0e-5 / 7.0;
  p.threshold_left = -0.00955967123456789;
  p.threshold_right = 0.0102246;
  p.threshold_up = 0.0177737;
  p.threshold_down = -0.012182;
  p.threshold_blink = 0.0174167;
  p.k = 0.55;
  CHECK(io::profile_from_json(io::profile_to_json(p)) == p);

  const auto path = std::filesystem::temp_directory_path() / "eog_test_profile.json";
  io::write_profile(p, path);
  CHECK(io::read_profile(path) == p);
  std::filesystem::remove(path);
}

TEST_CASE("profile JSON: missing and unknown fields are named") {
  auto j = nlohmann::json::parse(io::profile_to_json(CalibrationProfile{}));
  j.erase("threshold_down");
  try {
    (void)io::profile_from_json(j.dump());
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("threshold_down") != std::string::npos);
  }
  j = nlohmann::json::parse(io::profile_to_json(CalibrationProfile{}));
  j["gain"] = 2;
  try {
    (void)io::profile_from_json(j.dump());
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("gain") != std::string::npos);
  }
}

TEST_CASE("command table JSON: round trip and validation") {
  auto entries = default_table().entries();
  entries[4].text = "Ja, bitte";
  entries[4].track = 12;
  const CommandTable t{entries};
  CHECK(io::table_from_json(io::table_to_json(t)) == t);
  CHECK(io::table_from_json(io::table_to_json(default_table())) == default_table());

  auto j = nlohmann::json::parse(io::table_to_json(t));
  REQUIRE(j.contains("Left"));
  CHECK(j["Left"]["text"] == "Call the Doctor");
  j.erase("Down");
  CHECK_THROWS_AS((void)io::table_from_json(j.dump()), FormatError);

  j = nlohmann::json::parse(io::table_to_json(t));
  j["Right"]["track"] = 1;
  CHECK_THROWS((void)io::table_from_json(j.dump()));
}

TEST_CASE("event NDJSON: round trip") {
  const std::vector<MovementEvent> events{{MovementKind::Left, 1.0 / 3.0, 0.58, -0.0254},
                                          {MovementKind::DoubleBlink, 10.34, 0.432, 0.0439},
                                          {MovementKind::Up, 12.5, 0.6, 0.1}};
  std::ostringstream out;
  io::write_events(events, out);
  std::istringstream in(out.str());
  CHECK(io::read_events(in) == events);
  std::istringstream empty("");
  CHECK(io::read_events(empty).empty());
  std::istringstream bad("{\"kind\":\"Left\"}\n");
  CHECK_THROWS_AS((void)io::read_events(bad), FormatError);
}

TEST_CASE("evaluate: identical lists are perfect") {
  const auto s = synth::synth_session(synth::random_scenario(50, 9));
  const auto m = evaluate(as_events(s.labels), s.labels);
  CHECK(m.accuracy() == 1.0);
  CHECK(m.correct() == 50);
  CHECK(m.total() == 50);
  CHECK(m.total_false_positives() == 0);
}

TEST_CASE("evaluate: no predictions, five truths") {
  std::vector<GroundTruthLabel> truth;
  for (int i = 0; i < 5; ++i) truth.push_back({MovementKind::Right, 1.0 + i, 0.6});
  const auto m = evaluate({}, truth);
  CHECK(m.counts[idx(MovementKind::Right)][ConfusionMatrix::kMissed] == 5);
  CHECK(m.accuracy() == 0.0);
  CHECK(m.total_false_positives() == 0);
}

TEST_CASE("evaluate: a prediction shifted by twice the tolerance") {
  const std::vector<GroundTruthLabel> truth{{MovementKind::Left, 1.0, 0.6},
                                            {MovementKind::Up, 3.0, 0.6}};
  auto predicted = as_events(truth);
  predicted[1].onset += 2 * 0.15;
  const auto m = evaluate(predicted, truth, 0.15);
  CHECK(m.counts[idx(MovementKind::Left)][idx(MovementKind::Left)] == 1);
  CHECK(m.counts[idx(MovementKind::Up)][ConfusionMatrix::kMissed] == 1);
  CHECK(m.false_positives[idx(MovementKind::Up)] == 1);
  CHECK(m.accuracy() == 0.5);
}

TEST_CASE("evaluate: confusion, nearest pairing, rows sum to truth counts") {
  const std::vector<GroundTruthLabel> truth{{MovementKind::Up, 1.0, 0.6},
                                            {MovementKind::Blink, 2.0, 0.15},
                                            {MovementKind::Down, 3.0, 0.6}};
  const std::vector<MovementEvent> predicted{{MovementKind::Blink, 1.05, 0.2, 0},
                                             {MovementKind::Blink, 1.9, 0.2, 0},
                                             {MovementKind::Blink, 1.98, 0.2, 0},
                                             {MovementKind::Down, 3.1, 0.5, 0}};
  const auto m = evaluate(predicted, truth, 0.15);
  CHECK(m.counts[idx(MovementKind::Up)][idx(MovementKind::Blink)] == 1);
  CHECK(m.counts[idx(MovementKind::Blink)][idx(MovementKind::Blink)] == 1);
  CHECK(m.counts[idx(MovementKind::Down)][idx(MovementKind::Down)] == 1);
  CHECK(m.false_positives[idx(MovementKind::Blink)] == 1);  // the 1.9 one lost to 1.98
  CHECK(m.correct() == 2);
  std::size_t sum = 0;
  for (const auto& row : m.counts) for (auto c : row) sum += c;
  CHECK(sum == truth.size());
  CHECK_THROWS_AS((void)evaluate(predicted, truth, 0.0), ParameterError);
}

TEST_CASE("confusion JSON: accuracy and totals") {
  const std::vector<GroundTruthLabel> truth{{MovementKind::Left, 1.0, 0.6}};
  const auto j = nlohmann::json::parse(io::confusion_to_json(evaluate(as_events(truth), truth)));
  CHECK(j["accuracy"] == 1.0);
  CHECK(j["correct"] == 1);
  CHECK(j["total"] == 1);
  CHECK(j["false_positive_total"] == 0);
  CHECK(j["counts"]["Left"]["Left"] == 1);
}

TEST_CASE("scenario JSON: default scenario") {
  const auto sc = io::read_scenario(std::filesystem::path(EOG_SOURCE_DIR) / "scenarios" /
                                    "default.json");
  CHECK(sc.spec.events.size() == 100);
  CHECK(sc.spec.fs == 250.0);
  CHECK(sc.spec.noise_rms == 1e-5);
  CHECK_FALSE(sc.filter.paper);
  CHECK(sc.filter.order == 2);
  CHECK(sc.calibration.repetitions == 3);
  CHECK_NOTHROW(synth::validate(sc.spec));
}

TEST_CASE("scenario JSON: explicit events and rejections") {
  const auto sc = io::scenario_from_json(
      R"({"fs": 200, "duration": 5, "events": [{"kind": "Left", "onset": 1.0},
          {"kind": "DoubleBlink", "onset": 2.5}], "amplitudes": {"Left": 5e-5},
          "filter": {"paper": true}})");
  CHECK(sc.spec.fs == 200.0);
  REQUIRE(sc.spec.events.size() == 2);
  CHECK(sc.spec.events[1].kind == MovementKind::DoubleBlink);
  CHECK(sc.spec.amplitudes[MovementKind::Left] == 5e-5);
  CHECK(sc.filter.paper);

  CHECK_THROWS_AS((void)io::scenario_from_json(R"({"sampling": 250})"), FormatError);
  CHECK_THROWS_AS((void)io::scenario_from_json(R"({"events": [{"kind": "Wink", "onset": 1}]})"),
                  FormatError);
  CHECK_THROWS_AS((void)io::scenario_from_json("[1, 2]"), FormatError);
}
