#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "eog/classifier.hpp"
#include "eog/freqz.hpp"
#include "eog/pipeline.hpp"
#include "eog/synth.hpp"

using namespace eog;

namespace {

SessionRecording long_session(double seconds) {
  synth::ScenarioSpec spec;
  spec.duration = seconds;
  spec.noise_rms = 1e-5;
  spec.seed = 3;
  return synth::synth_session(spec);
}

const CalibrationProfile& profile() {
  static const auto p = calibrate(dsp::filter_session(
      make_cascade(FilterChoice{}, 250.0), synth::synth_calibration_sweep(250.0, {}, 3, 1e-5, 1)));
  return p;
}

std::vector<SessionRecording> batch(std::size_t n) {
  const auto cascade = make_cascade(FilterChoice{}, 250.0);
  std::vector<SessionRecording> out;
  for (std::size_t i = 0; i < n; ++i) {
    auto spec = synth::random_scenario(40, i + 1);
    spec.noise_rms = 1e-5;
    spec.seed = i + 1;
    out.push_back(dsp::filter_session(cascade, synth::synth_session(spec)));
  }
  return out;
}

void BM_FreqResponse(benchmark::State& state) {
  const auto grid = dsp::omega_grid(static_cast<std::size_t>(state.range(0)));
  const auto c = dsp::paper_cascade();
  for (auto _ : state) benchmark::DoNotOptimize(dsp::freq_response(c, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FreqResponseSerial(benchmark::State& state) {
  const auto grid = dsp::omega_grid(static_cast<std::size_t>(state.range(0)));
  const auto c = dsp::paper_cascade();
  for (auto _ : state) benchmark::DoNotOptimize(dsp::freq_response_serial(c, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FilterSession(benchmark::State& state) {
  const auto s = long_session(static_cast<double>(state.range(0)));
  const auto c = dsp::paper_cascade();
  for (auto _ : state) benchmark::DoNotOptimize(dsp::filter_session(c, s));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.size()));
}

void BM_FilterSessionSerial(benchmark::State& state) {
  const auto s = long_session(static_cast<double>(state.range(0)));
  const auto c = dsp::paper_cascade();
  for (auto _ : state) benchmark::DoNotOptimize(dsp::filter_session_serial(c, s));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.size()));
}

void BM_ClassifyBatch(benchmark::State& state) {
  const auto sessions = batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify_batch(sessions, profile()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ClassifyBatchSerial(benchmark::State& state) {
  const auto sessions = batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify_batch_serial(sessions, profile()));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_FreqResponse)->Arg(4096)->Arg(65536);
BENCHMARK(BM_FreqResponseSerial)->Arg(4096)->Arg(65536);
BENCHMARK(BM_FilterSession)->Arg(60)->Arg(600);
BENCHMARK(BM_FilterSessionSerial)->Arg(60)->Arg(600);
BENCHMARK(BM_ClassifyBatch)->Arg(8)->Arg(32);
BENCHMARK(BM_ClassifyBatchSerial)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
