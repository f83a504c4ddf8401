#include "eog/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "eog/errors.hpp"

namespace eog {

double CalibrationProfile::threshold_vertical_positive() const {
  return std::min(threshold_up, threshold_blink);
}

namespace {

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const auto n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

bool inside(double t, const GroundTruthLabel& label) {
  return t >= label.onset && t <= label.end();
}

// Extremum of one channel inside a window: the minimum for negative-going directions.
std::optional<double> window_extremum(const SessionRecording& s, const GroundTruthLabel& label,
                                      bool horizontal, bool negative) {
  std::optional<double> best;
  for (const auto& sample : s.samples) {
    if (!inside(sample.t, label)) continue;
    const double x = horizontal ? sample.h : sample.v;
    if (!best || (negative ? x < *best : x > *best)) best = x;
  }
  return best;
}

// Neumaier-compensated running sum; neutral means sit close to zero after a DC-blocking
// filter, so plain summation loses the digits that make them scale-equivariant.
struct CompensatedSum {
  double sum{0.0};
  double carry{0.0};

  void add(double x) {
    const double t = sum + x;
    carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

}  // namespace

CalibrationProfile calibrate(const SessionRecording& session, const CalibrationOptions& options) {
  if (session.empty()) throw ContractError("calibration session is empty");

  struct Direction {
    MovementKind kind;
    bool horizontal;
    bool negative;
    std::vector<double> peaks;
  };
  Direction dirs[] = {
      {MovementKind::Left, true, true, {}},    {MovementKind::Right, true, false, {}},
      {MovementKind::Up, false, false, {}},    {MovementKind::Down, false, true, {}},
      {MovementKind::Blink, false, false, {}},
  };

  for (const auto& label : session.labels) {
    for (auto& d : dirs) {
      if (d.kind != label.kind) continue;
      if (auto x = window_extremum(session, label, d.horizontal, d.negative)) d.peaks.push_back(*x);
    }
  }
  for (const auto& d : dirs) {
    if (d.peaks.empty()) {
      throw IncompleteCalibrationError("incomplete calibration: no labeled " +
                                       std::string(kind_name(d.kind)) + " movement");
    }
  }

  // Labels are sorted and non-overlapping, so one sweep over the samples suffices.
  CompensatedSum sum_h, sum_v;
  std::size_t neutral = 0, li = 0;
  const auto& labels = session.labels;
  for (const auto& sample : session.samples) {
    while (li < labels.size() && labels[li].end() < sample.t) ++li;
    if (li < labels.size() && inside(sample.t, labels[li])) continue;
    sum_h.add(sample.h);
    sum_v.add(sample.v);
    ++neutral;
  }
  if (neutral == 0) throw DegenerateCalibrationError("degenerate calibration: no unlabeled samples");

  CalibrationProfile p;
  p.neutral_mean_h = sum_h.value() / static_cast<double>(neutral);
  p.neutral_mean_v = sum_v.value() / static_cast<double>(neutral);
  p.k = options.k;
  p.min_hold = options.min_hold;
  p.refractory = options.refractory;
  p.blink_max_dur = options.blink_max_dur;
  p.long_blink_min_dur = options.long_blink_min_dur;
  p.double_blink_window = options.double_blink_window;

  auto threshold = [&](const Direction& d) {
    const double neutral_mean = d.horizontal ? p.neutral_mean_h : p.neutral_mean_v;
    return neutral_mean + p.k * (median(d.peaks) - neutral_mean);
  };
  p.threshold_left = threshold(dirs[0]);
  p.threshold_right = threshold(dirs[1]);
  p.threshold_up = threshold(dirs[2]);
  p.threshold_down = threshold(dirs[3]);
  p.threshold_blink = threshold(dirs[4]);

  const auto problems = validate_profile(p);
  if (!problems.empty()) throw DegenerateCalibrationError("degenerate calibration: " + problems.front());
  return p;
}

std::vector<std::string> validate_profile(const CalibrationProfile& p) {
  std::vector<std::string> out;
  const double fields[] = {p.neutral_mean_h, p.neutral_mean_v, p.threshold_left,
                           p.threshold_right, p.threshold_up,  p.threshold_down,
                           p.threshold_blink, p.k,             p.min_hold,
                           p.refractory,      p.blink_max_dur, p.long_blink_min_dur,
                           p.double_blink_window};
  for (double f : fields) {
    if (!std::isfinite(f)) {
      out.emplace_back("non-finite field");
      return out;
    }
  }
  if (!(p.threshold_left < p.neutral_mean_h && p.neutral_mean_h < p.threshold_right)) {
    out.emplace_back("ordering violation: left < neutral_mean_h < right required");
  }
  if (!(p.threshold_down < p.neutral_mean_v && p.neutral_mean_v < p.threshold_blink &&
        p.neutral_mean_v < p.threshold_up)) {
    out.emplace_back("ordering violation: down < neutral_mean_v < blink, up required");
  }
  if (!(p.k > 0.0 && p.k < 1.0)) out.emplace_back("k out of range (0, 1)");
  if (!(p.min_hold > 0.0 && p.refractory > 0.0 && p.blink_max_dur > 0.0 &&
        p.long_blink_min_dur > 0.0 && p.double_blink_window > 0.0)) {
    out.emplace_back("durations must be positive");
  }
  if (!(p.blink_max_dur < p.long_blink_min_dur)) {
    out.emplace_back("blink_max_dur must be below long_blink_min_dur");
  }
  return out;
}

}  // namespace eog
