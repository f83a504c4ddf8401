#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "eog/calibration.hpp"
#include "eog/types.hpp"

namespace eog {

// Instantaneous threshold decision for one sample pair. When both channels cross, the
// larger normalized excursion |x - neutral| / |threshold - neutral| wins; exact ties go
// to the horizontal channel. Positive vertical crossings report Blink; Up is only
// decided later from the duration of the crossing.
MovementKind classify_sample(double h, double v, const CalibrationProfile& profile);

// True while `sample` is still past the threshold for `kind`'s direction
// (kind is Left, Right, Down or Blink).
bool crossing_holds(MovementKind kind, const Sample& sample, const CalibrationProfile& profile);

// Streaming threshold state machine:
//
//   Idle -> Candidate on any crossing.
//   Candidate ends when its own direction stops crossing. Spans shorter than min_hold
//   are dropped. Left/Right/Down are emitted. A positive vertical span is a Blink if it
//   lasted <= blink_max_dur, Up if >= long_blink_min_dur, dropped otherwise.
//   A Blink waits in BlinkPending; a second Blink starting within double_blink_window of
//   the first onset merges into one DoubleBlink, else the Blink is emitted once the
//   window has passed. Only blink-direction crossings are tracked while pending.
//   Every emission starts Refractory, which ignores samples until event end + refractory.
//
// Single owner; not thread-safe. Distinct instances are independent.
class EventClassifier {
 public:
  struct Idle {};
  struct PendingBlink {
    double onset{0.0};
    double end{0.0};
    double peak{0.0};
    double deadline{0.0};
  };
  struct Candidate {
    MovementKind kind{MovementKind::Neutral};
    double onset{0.0};
    double peak{0.0};
    std::size_t count{0};
    std::optional<PendingBlink> pending;
  };
  struct Refractory {
    double until{0.0};
  };
  using Mode = std::variant<Idle, Candidate, Refractory, PendingBlink>;

  EventClassifier(const CalibrationProfile& profile, double fs);

  // Deactivation drops any candidate or pending blink without emitting it.
  void set_active(bool active);
  bool active() const { return active_; }
  const Mode& mode() const { return mode_; }

  // Feeds one sample and appends finished events to `out`. Throws NumericError naming
  // `index` if h or v is not finite.
  void push(const Sample& sample, std::size_t index, std::vector<MovementEvent>& out);

  // End of stream: closes an open candidate and releases a pending blink.
  void finish(std::vector<MovementEvent>& out);

 private:
  void finalize(const Candidate& c, std::vector<MovementEvent>& out);
  void emit(const MovementEvent& e, std::vector<MovementEvent>& out);

  CalibrationProfile profile_;
  double fs_;
  bool active_{true};
  Mode mode_{Idle{}};
};

// Runs a fresh, active classifier over a filtered session. Throws ContractError for an
// invalid profile and NumericError on non-finite samples.
std::vector<MovementEvent> classify_stream(const SessionRecording& filtered,
                                           const CalibrationProfile& profile);

// Classifies many independent sessions; sessions are spread over OpenMP threads when
// available and the result matches classify_batch_serial element for element.
std::vector<std::vector<MovementEvent>> classify_batch(std::span<const SessionRecording> sessions,
                                                       const CalibrationProfile& profile);
std::vector<std::vector<MovementEvent>> classify_batch_serial(
    std::span<const SessionRecording> sessions, const CalibrationProfile& profile);

}  // namespace eog
