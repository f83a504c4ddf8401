#include "eog/cascade.hpp"

#include <cmath>
#include <exception>
#include <utility>

#include "eog/errors.hpp"

namespace eog::dsp {

FilterCascade::FilterCascade(std::vector<BiquadSection> sections, std::size_t channels)
    : sections_(std::move(sections)) {
  if (sections_.empty()) throw ParameterError("filter cascade needs at least one section");
  if (channels == 0) throw ParameterError("filter cascade needs at least one channel");
  for (const auto& s : sections_) {
    for (double c : {s.b0, s.b1, s.b2, s.a1, s.a2}) {
      if (!std::isfinite(c)) throw ParameterError("biquad coefficient is not finite");
    }
  }
  states_.assign(channels, std::vector<BiquadState>(sections_.size()));
}

std::size_t FilterCascade::index(Channel channel) const {
  const auto i = static_cast<std::size_t>(channel);
  if (i >= states_.size()) throw ParameterError("channel out of range");
  return i;
}

std::span<const BiquadState> FilterCascade::state(Channel channel) const {
  return states_[index(channel)];
}

void FilterCascade::reset() {
  for (auto& chain : states_) {
    for (auto& s : chain) s.reset();
  }
}

void FilterCascade::reset(Channel channel) {
  for (auto& s : states_[index(channel)]) s.reset();
}

std::vector<double> FilterCascade::process(std::span<const double> input, Channel channel) {
  auto& chain = states_[index(channel)];
  for (std::size_t n = 0; n < input.size(); ++n) {
    if (!std::isfinite(input[n])) throw NumericError("non-finite filter input", n);
  }

  std::vector<BiquadState> work = chain;
  std::vector<double> out(input.size());
  for (std::size_t n = 0; n < input.size(); ++n) {
    double x = input[n];
    for (std::size_t k = 0; k < sections_.size(); ++k) x = biquad_step(work[k], sections_[k], x);
    if (!std::isfinite(x)) throw NumericError("filter output overflowed", n);
    out[n] = x;
  }
  chain = std::move(work);
  return out;
}

FilterCascade FilterCascade::fresh() const {
  return FilterCascade(sections_, states_.size());
}

FilterCascade paper_cascade() {
  return FilterCascade({
      {0.09797471, 0.19594942, 0.09797471, 0.02977423, 0.04296318},
      {1.0, 2.0, 1.0, 0.08383952, 0.46067709},
      {1.0, -2.0, 1.0, -1.92167271, 0.92347975},
      {1.0, -2.0, 1.0, -1.96758891, 0.96933514},
  });
}

std::vector<double> impulse_response(const FilterCascade& cascade, std::size_t n) {
  if (n == 0) throw ParameterError("impulse response length must be >= 1");
  std::vector<double> impulse(n, 0.0);
  impulse[0] = 1.0;
  auto work = cascade.fresh();
  return work.process(impulse);
}

namespace {

struct SplitChannels {
  std::vector<double> h;
  std::vector<double> v;
};

SplitChannels split(const SessionRecording& session) {
  SplitChannels c;
  c.h.reserve(session.size());
  c.v.reserve(session.size());
  for (const auto& s : session.samples) {
    c.h.push_back(s.h);
    c.v.push_back(s.v);
  }
  return c;
}

SessionRecording merge(const SessionRecording& session, const std::vector<double>& h,
                       const std::vector<double>& v) {
  SessionRecording out;
  out.fs = session.fs;
  out.labels = session.labels;
  out.samples.resize(session.size());
  for (std::size_t i = 0; i < session.size(); ++i) {
    out.samples[i] = Sample{session.samples[i].t, h[i], v[i]};
  }
  return out;
}

}  // namespace

SessionRecording filter_session_serial(const FilterCascade& cascade,
                                       const SessionRecording& session) {
  auto channels = split(session);
  auto work = cascade.fresh();
  auto h = work.process(channels.h, Channel::Horizontal);
  auto v = work.process(channels.v, Channel::Vertical);
  return merge(session, h, v);
}

SessionRecording filter_session(const FilterCascade& cascade, const SessionRecording& session) {
  auto channels = split(session);
  const std::span<const double> inputs[2] = {channels.h, channels.v};
  std::vector<double> outputs[2];
  std::exception_ptr errors[2];

#pragma omp parallel for schedule(static, 1)
  for (int c = 0; c < 2; ++c) {
    try {
      auto work = cascade.fresh();
      outputs[c] = work.process(inputs[c], static_cast<Channel>(c));
    } catch (...) {
      errors[c] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return merge(session, outputs[0], outputs[1]);
}

}  // namespace eog::dsp
