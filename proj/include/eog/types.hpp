#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eog {

enum class MovementKind { Left, Right, Up, Down, Blink, DoubleBlink, Neutral };

// Every kind that can appear as an event (Neutral is classifier idle state only).
inline constexpr std::array<MovementKind, 6> kEventKinds = {
    MovementKind::Left, MovementKind::Right, MovementKind::Up,
    MovementKind::Down, MovementKind::Blink, MovementKind::DoubleBlink};

std::string_view kind_name(MovementKind kind);
std::optional<MovementKind> parse_kind(std::string_view name);

// One two-channel observation. h/v are volts after the analog front end.
struct Sample {
  double t{0.0};
  double h{0.0};
  double v{0.0};
};

struct GroundTruthLabel {
  MovementKind kind{MovementKind::Neutral};
  double onset{0.0};
  double duration{0.0};

  double end() const { return onset + duration; }
};

struct SessionRecording {
  double fs{250.0};
  std::vector<Sample> samples;
  std::vector<GroundTruthLabel> labels;  // empty when unlabeled

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
};

struct MovementEvent {
  MovementKind kind{MovementKind::Neutral};
  double onset{0.0};
  double duration{0.0};
  double peak{0.0};  // signed extremum on the channel that triggered the event

  double end() const { return onset + duration; }
  bool operator==(const MovementEvent&) const = default;
};

struct Command {
  double t{0.0};
  MovementKind kind{MovementKind::Neutral};
  std::string text;
  int track{1};
  std::string color;
  bool truncated{false};  // text was cut to the display limit

  bool operator==(const Command&) const = default;
};

enum class ViolationKind {
  Empty,
  BadSampleRate,
  NonMonotone,
  IrregularSpacing,
  NonFinite,
  LabelOutOfRange,
  LabelOverlap,
  LabelNeutral,
  LabelDuration,
};

struct Violation {
  ViolationKind kind;
  std::size_t index{0};  // first offending sample or label index
  std::string message;
};

// Checks every SessionRecording/Sample/GroundTruthLabel invariant. Reports the first
// offending index for each violation kind; never throws.
std::vector<Violation> validate_session(const SessionRecording& session);

}  // namespace eog
