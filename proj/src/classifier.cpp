#include "eog/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "eog/errors.hpp"

namespace eog {

namespace {

constexpr double kTimeEps = 1e-9;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double channel_value(MovementKind kind, const Sample& s) {
  return (kind == MovementKind::Left || kind == MovementKind::Right) ? s.h : s.v;
}

bool more_extreme(MovementKind kind, double x, double than) {
  return (kind == MovementKind::Left || kind == MovementKind::Down) ? x < than : x > than;
}

}  // namespace

MovementKind classify_sample(double h, double v, const CalibrationProfile& p) {
  MovementKind horizontal = MovementKind::Neutral;
  double h_norm = 0.0;
  if (h < p.threshold_left) {
    horizontal = MovementKind::Left;
    h_norm = std::abs(h - p.neutral_mean_h) / std::abs(p.threshold_left - p.neutral_mean_h);
  } else if (h > p.threshold_right) {
    horizontal = MovementKind::Right;
    h_norm = std::abs(h - p.neutral_mean_h) / std::abs(p.threshold_right - p.neutral_mean_h);
  }

  MovementKind vertical = MovementKind::Neutral;
  double v_norm = 0.0;
  const double v_pos = p.threshold_vertical_positive();
  if (v < p.threshold_down) {
    vertical = MovementKind::Down;
    v_norm = std::abs(v - p.neutral_mean_v) / std::abs(p.threshold_down - p.neutral_mean_v);
  } else if (v > v_pos) {
    vertical = MovementKind::Blink;
    v_norm = std::abs(v - p.neutral_mean_v) / std::abs(v_pos - p.neutral_mean_v);
  }

  if (horizontal == MovementKind::Neutral) return vertical;
  if (vertical == MovementKind::Neutral) return horizontal;
  return v_norm > h_norm ? vertical : horizontal;
}

bool crossing_holds(MovementKind kind, const Sample& s, const CalibrationProfile& p) {
  switch (kind) {
    case MovementKind::Left: return s.h < p.threshold_left;
    case MovementKind::Right: return s.h > p.threshold_right;
    case MovementKind::Down: return s.v < p.threshold_down;
    case MovementKind::Blink: return s.v > p.threshold_vertical_positive();
    default: return false;
  }
}

EventClassifier::EventClassifier(const CalibrationProfile& profile, double fs)
    : profile_(profile), fs_(fs) {
  if (!(fs > 0.0)) throw ParameterError("classifier sample rate must be positive");
}

void EventClassifier::set_active(bool active) {
  if (active == active_) return;
  active_ = active;
  mode_ = Idle{};
}

void EventClassifier::emit(const MovementEvent& e, std::vector<MovementEvent>& out) {
  out.push_back(e);
  mode_ = Refractory{e.end() + profile_.refractory};
}

void EventClassifier::finalize(const Candidate& c, std::vector<MovementEvent>& out) {
  const double duration = static_cast<double>(c.count) / fs_;
  const double end = c.onset + duration;
  const bool long_enough = duration >= profile_.min_hold - kTimeEps;
  const bool blink_length = duration <= profile_.blink_max_dur + kTimeEps;

  if (c.pending) {
    const auto& first = *c.pending;
    if (long_enough && c.kind == MovementKind::Blink && blink_length) {
      emit({MovementKind::DoubleBlink, first.onset, end - first.onset,
            std::max(first.peak, c.peak)},
           out);
    } else {
      mode_ = first;
    }
    return;
  }

  if (!long_enough) {
    mode_ = Idle{};
    return;
  }
  if (c.kind != MovementKind::Blink) {
    emit({c.kind, c.onset, duration, c.peak}, out);
  } else if (blink_length) {
    mode_ = PendingBlink{c.onset, end, c.peak, c.onset + profile_.double_blink_window};
  } else if (duration >= profile_.long_blink_min_dur - kTimeEps) {
    emit({MovementKind::Up, c.onset, duration, c.peak}, out);
  } else {
    mode_ = Idle{};
  }
}

void EventClassifier::push(const Sample& s, std::size_t index, std::vector<MovementEvent>& out) {
  if (!std::isfinite(s.h) || !std::isfinite(s.v)) {
    throw NumericError("non-finite classifier input", index);
  }
  if (!active_) return;

  // A transition may need the same sample re-examined in the new mode.
  bool again = true;
  while (again) {
    again = false;
    std::visit(
        overloaded{
            [&](Idle) {
              const auto kind = classify_sample(s.h, s.v, profile_);
              if (kind != MovementKind::Neutral) {
                mode_ = Candidate{kind, s.t, channel_value(kind, s), 1, std::nullopt};
              }
            },
            [&](Refractory r) {
              if (s.t >= r.until - kTimeEps) {
                mode_ = Idle{};
                again = true;
              }
            },
            [&](PendingBlink p) {
              if (s.t > p.deadline + kTimeEps) {
                out.push_back({MovementKind::Blink, p.onset, p.end - p.onset, p.peak});
                mode_ = Refractory{std::max(s.t, p.end + profile_.refractory)};
                again = true;
              } else if (classify_sample(s.h, s.v, profile_) == MovementKind::Blink) {
                mode_ = Candidate{MovementKind::Blink, s.t, s.v, 1, p};
              }
            },
            [&](Candidate c) {
              if (crossing_holds(c.kind, s, profile_)) {
                const double x = channel_value(c.kind, s);
                if (more_extreme(c.kind, x, c.peak)) c.peak = x;
                ++c.count;
                mode_ = c;
              } else {
                finalize(c, out);
                again = true;
              }
            },
        },
        mode_);
  }
}

void EventClassifier::finish(std::vector<MovementEvent>& out) {
  if (const auto* c = std::get_if<Candidate>(&mode_)) {
    const Candidate copy = *c;
    finalize(copy, out);
  }
  if (const auto* p = std::get_if<PendingBlink>(&mode_)) {
    out.push_back({MovementKind::Blink, p->onset, p->end - p->onset, p->peak});
  }
  mode_ = Idle{};
}

std::vector<MovementEvent> classify_stream(const SessionRecording& filtered,
                                           const CalibrationProfile& profile) {
  const auto problems = validate_profile(profile);
  if (!problems.empty()) throw ContractError("invalid calibration profile: " + problems.front());
  EventClassifier classifier(profile, filtered.fs);
  std::vector<MovementEvent> events;
  for (std::size_t i = 0; i < filtered.samples.size(); ++i) {
    classifier.push(filtered.samples[i], i, events);
  }
  classifier.finish(events);
  return events;
}

std::vector<std::vector<MovementEvent>> classify_batch_serial(
    std::span<const SessionRecording> sessions, const CalibrationProfile& profile) {
  std::vector<std::vector<MovementEvent>> out;
  out.reserve(sessions.size());
  for (const auto& s : sessions) out.push_back(classify_stream(s, profile));
  return out;
}

std::vector<std::vector<MovementEvent>> classify_batch(std::span<const SessionRecording> sessions,
                                                       const CalibrationProfile& profile) {
  std::vector<std::vector<MovementEvent>> out(sessions.size());
  std::vector<std::exception_ptr> errors(sessions.size());
  const auto n = static_cast<std::ptrdiff_t>(sessions.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = classify_stream(sessions[k], profile);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace eog
