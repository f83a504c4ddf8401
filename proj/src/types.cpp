#include "eog/types.hpp"

#include <cmath>
#include <set>

namespace eog {

std::string_view kind_name(MovementKind kind) {
  switch (kind) {
    case MovementKind::Left: return "Left";
    case MovementKind::Right: return "Right";
    case MovementKind::Up: return "Up";
    case MovementKind::Down: return "Down";
    case MovementKind::Blink: return "Blink";
    case MovementKind::DoubleBlink: return "DoubleBlink";
    case MovementKind::Neutral: return "Neutral";
  }
  return "Neutral";
}

std::optional<MovementKind> parse_kind(std::string_view name) {
  for (auto kind : kEventKinds) {
    if (kind_name(kind) == name) return kind;
  }
  if (name == "Neutral") return MovementKind::Neutral;
  return std::nullopt;
}

namespace {

constexpr double kTimeTolerance = 1e-9;

std::string at(std::string_view what, std::size_t index) {
  return std::string(what) + "-at-index-" + std::to_string(index);
}

}  // namespace

std::vector<Violation> validate_session(const SessionRecording& session) {
  std::vector<Violation> out;
  if (!(session.fs > 0.0) || !std::isfinite(session.fs)) {
    out.push_back({ViolationKind::BadSampleRate, 0, "bad-sample-rate"});
  }
  if (session.samples.empty()) {
    out.push_back({ViolationKind::Empty, 0, "empty-session"});
    return out;
  }

  // One report per kind: the first index where it occurs.
  std::set<ViolationKind> seen;
  auto report = [&](ViolationKind kind, std::size_t index, std::string_view tag) {
    if (seen.insert(kind).second) out.push_back({kind, index, at(tag, index)});
  };

  const auto& s = session.samples;
  const double dt = session.fs > 0.0 ? 1.0 / session.fs : 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isfinite(s[i].t) || !std::isfinite(s[i].h) || !std::isfinite(s[i].v)) {
      report(ViolationKind::NonFinite, i, "non-finite");
      continue;
    }
    if (i == 0) {
      if (s[i].t < 0.0) report(ViolationKind::NonMonotone, i, "non-monotone");
      continue;
    }
    if (!std::isfinite(s[i - 1].t)) continue;
    const double gap = s[i].t - s[i - 1].t;
    if (!(gap > 0.0)) {
      report(ViolationKind::NonMonotone, i, "non-monotone");
    } else if (dt > 0.0 && std::abs(gap - dt) > kTimeTolerance) {
      report(ViolationKind::IrregularSpacing, i, "irregular-spacing");
    }
  }

  const double first = s.front().t;
  const double last = s.back().t;
  for (std::size_t i = 0; i < session.labels.size(); ++i) {
    const auto& label = session.labels[i];
    if (label.kind == MovementKind::Neutral) report(ViolationKind::LabelNeutral, i, "neutral-label");
    if (!(label.duration > 0.0)) report(ViolationKind::LabelDuration, i, "label-duration");
    if (label.onset < first - kTimeTolerance || label.end() > last + kTimeTolerance) {
      report(ViolationKind::LabelOutOfRange, i, "label-out-of-range");
    }
    if (i > 0 && label.onset < session.labels[i - 1].end()) {
      report(ViolationKind::LabelOverlap, i, "label-overlap");
    }
  }
  return out;
}

}  // namespace eog
