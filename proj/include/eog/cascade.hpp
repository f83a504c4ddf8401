#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eog/biquad.hpp"
#include "eog/types.hpp"

namespace eog::dsp {

enum class Channel : std::size_t { Horizontal = 0, Vertical = 1 };

// Ordered second-order sections with independent delay lines per channel.
// Coefficients are fixed after construction; state is single-writer per channel.
class FilterCascade {
 public:
  explicit FilterCascade(std::vector<BiquadSection> sections, std::size_t channels = 2);

  const std::vector<BiquadSection>& sections() const { return sections_; }
  std::size_t section_count() const { return sections_.size(); }
  std::size_t channel_count() const { return states_.size(); }

  std::span<const BiquadState> state(Channel channel) const;
  void reset();
  void reset(Channel channel);

  // Runs `input` through every section in order. State carries over between calls, so
  // chunked streaming gives the same result as a single call. Throws NumericError with
  // the offending index (relative to `input`) on non-finite samples; the channel state
  // is left as it was before the call in that case.
  std::vector<double> process(std::span<const double> input,
                              Channel channel = Channel::Horizontal);

  // Copy with every delay line zeroed.
  FilterCascade fresh() const;

 private:
  std::size_t index(Channel channel) const;

  std::vector<BiquadSection> sections_;
  std::vector<std::vector<BiquadState>> states_;
};

// The fixed four-section cascade from the reference prototype, coefficients verbatim.
// Note that sections 3 and 4 have double zeros at z = 1 and sections 1 and 2 at z = -1,
// so the cascade is band-pass (zero gain at DC and at Nyquist).
FilterCascade paper_cascade();

// First n samples of the unit-impulse response from zero state. The argument is not
// modified. Throws ParameterError for n == 0.
std::vector<double> impulse_response(const FilterCascade& cascade, std::size_t n);

// Filters both channels of a session with fresh per-channel state. Channels run in
// parallel (OpenMP) when available; the result is identical to filter_session_serial.
SessionRecording filter_session(const FilterCascade& cascade, const SessionRecording& session);
SessionRecording filter_session_serial(const FilterCascade& cascade,
                                       const SessionRecording& session);

}  // namespace eog::dsp
