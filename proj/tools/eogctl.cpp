// eogctl: command-line front end for the EOG pipeline.
//
//   synth      scenario JSON -> labeled session CSV (or its calibration sweep)
//   filter     session CSV -> filtered session CSV
//   freqz      cascade -> frequency response CSV
//   calibrate  filtered sweep CSV -> profile JSON
//   classify   filtered session CSV + profile -> events / commands NDJSON
//   eval       events NDJSON + labeled CSV -> confusion matrix JSON
//   run        all of the above for one scenario
//
// Exit codes: 0 ok, 1 usage, 2 data/format error, 3 calibration/classification error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "eog/classifier.hpp"
#include "eog/commands.hpp"
#include "eog/errors.hpp"
#include "eog/evaluate.hpp"
#include "eog/freqz.hpp"
#include "eog/io.hpp"
#include "eog/pipeline.hpp"

namespace fs = std::filesystem;
using namespace eog;

namespace {

FilterChoice parse_design(const std::string& text) {
  FilterChoice c;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%d,%lf,%lf%c", &c.order, &c.f_lo, &c.f_hi, &extra) != 3) {
    throw CLI::ValidationError("--design", "expected order,f_lo,f_hi");
  }
  return c;
}

void stage_synth(const fs::path& scenario_path, const fs::path& out, bool sweep) {
  const auto scenario = io::read_scenario(scenario_path);
  const auto session = sweep ? synth_sweep_for(scenario)
                             : synth::synth_session(scenario.spec, scenario.frontend);
  io::write_session(session, out);
}

void stage_filter(const fs::path& in, const fs::path& out, const FilterChoice& choice) {
  const auto session = io::read_session(in);
  const auto cascade = make_cascade(choice, session.fs);
  io::write_session(dsp::filter_session(cascade, session), out);
}

void stage_freqz(const FilterChoice& choice, double fs, std::size_t points,
                 const std::optional<fs::path>& out) {
  const auto cascade = make_cascade(choice, fs);
  const auto response = dsp::freq_response(cascade, dsp::omega_grid(points));
  std::ostringstream ss;
  io::write_response(response, ss);
  if (out) {
    io::write_text(ss.str(), *out);
  } else {
    std::cout << ss.str();
  }
}

void stage_calibrate(const fs::path& in, const fs::path& out, const CalibrationOptions& options) {
  io::write_profile(calibrate(io::read_session(in), options), out);
}

void stage_classify(const fs::path& in, const fs::path& profile_path,
                    const std::optional<fs::path>& table_path, const fs::path& events_path,
                    const fs::path& commands_path, const std::optional<fs::path>& log_path,
                    std::ostream& console) {
  const auto session = io::read_session(in);
  const auto profile = io::read_profile(profile_path);
  const auto problems = validate_profile(profile);
  if (!problems.empty()) throw DegenerateCalibrationError("profile rejected: " + problems.front());
  const auto table = table_path ? io::read_table(*table_path) : default_table();

  const auto events = classify_stream(session, profile);

  std::ostringstream event_lines;
  io::write_events(events, event_lines);
  io::write_text(event_lines.str(), events_path);

  std::ostringstream monitoring;
  ConsoleSink console_sink(console);
  NdjsonSink monitoring_sink(monitoring);
  std::optional<CommandLog> log;
  if (log_path) log.emplace(log_path->string());
  std::vector<CommandSink*> sinks{&console_sink, &monitoring_sink};
  if (log) sinks.push_back(&*log);
  for (const auto& e : events) emit(map_event(e, table), sinks);
  io::write_text(monitoring.str(), commands_path);
}

std::string stage_eval(const fs::path& events_path, const fs::path& truth_path, double tolerance) {
  const auto events = io::read_events(events_path);
  const auto truth = io::read_session(truth_path);
  return io::confusion_to_json(evaluate(events, truth.labels, tolerance));
}

void stage_run(const fs::path& scenario_path, bool paper_filter, const fs::path& dir) {
  fs::create_directories(dir);
  const auto scenario = io::read_scenario(scenario_path);
  auto filter = scenario.filter;
  if (paper_filter) filter.paper = true;

  stage_synth(scenario_path, dir / "calibration.csv", true);
  stage_filter(dir / "calibration.csv", dir / "calibration_filtered.csv", filter);
  stage_calibrate(dir / "calibration_filtered.csv", dir / "profile.json",
                  scenario.calibration.options);

  stage_synth(scenario_path, dir / "session.csv", false);
  stage_filter(dir / "session.csv", dir / "session_filtered.csv", filter);
  io::write_table(default_table(), dir / "table.json");

  std::ostringstream console;
  stage_classify(dir / "session_filtered.csv", dir / "profile.json", dir / "table.json",
                 dir / "events.ndjson", dir / "commands.ndjson", std::nullopt, console);
  io::write_text(console.str(), dir / "console.txt");
  std::cout << console.str();

  const auto report = stage_eval(dir / "events.ndjson", dir / "session.csv", 0.15);
  io::write_text(report, dir / "eval.json");
  std::cout << report;
}

void add_filter_options(CLI::App* cmd, bool& paper, std::string& design) {
  auto* p = cmd->add_flag("--paper", paper, "Use the published four-section cascade (default)");
  auto* d = cmd->add_option("--design", design, "Butterworth band-pass: order,f_lo,f_hi");
  p->excludes(d);
}

FilterChoice filter_choice(const std::string& design) {
  if (design.empty()) return FilterChoice{true};
  return parse_design(design);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EOG signal pipeline: synthesis, filtering, calibration, classification"};
  app.require_subcommand(1);

  std::string scenario, in, out, profile, table, events, commands, log, truth, design, out_dir;
  bool paper = false, sweep = false, paper_filter = false;
  std::size_t points = 512;
  double fs = 250.0, tolerance = 0.15;

  auto* synth_cmd = app.add_subcommand("synth", "Synthesize a labeled session from a scenario");
  synth_cmd->add_option("--scenario", scenario, "Scenario JSON")->required();
  synth_cmd->add_option("--out", out, "Session CSV")->required();
  synth_cmd->add_flag("--calibration", sweep, "Write the scenario's calibration sweep instead");

  auto* filter_cmd = app.add_subcommand("filter", "Filter both channels of a session");
  filter_cmd->add_option("--in", in, "Session CSV")->required();
  filter_cmd->add_option("--out", out, "Filtered session CSV")->required();
  add_filter_options(filter_cmd, paper, design);

  auto* freqz_cmd = app.add_subcommand("freqz", "Export a cascade's frequency response");
  add_filter_options(freqz_cmd, paper, design);
  freqz_cmd->add_option("--points", points, "Grid points over [0, pi]")->check(CLI::PositiveNumber);
  freqz_cmd->add_option("--fs", fs, "Sample rate for --design (Hz)")->check(CLI::PositiveNumber);
  freqz_cmd->add_option("--out", out, "Response CSV (stdout when omitted)");

  auto* cal_cmd = app.add_subcommand("calibrate", "Build a profile from a filtered labeled sweep");
  cal_cmd->add_option("--in", in, "Filtered sweep CSV")->required();
  cal_cmd->add_option("--out", out, "Profile JSON")->required();
  cal_cmd->add_option("--scenario", scenario, "Take calibration options from a scenario JSON");

  auto* cls_cmd = app.add_subcommand("classify", "Detect movements and emit commands");
  cls_cmd->add_option("--in", in, "Filtered session CSV")->required();
  cls_cmd->add_option("--profile", profile, "Profile JSON")->required();
  cls_cmd->add_option("--table", table, "Command table JSON (built-in default when omitted)");
  cls_cmd->add_option("--events", events, "Event NDJSON output")->required();
  cls_cmd->add_option("--commands", commands, "Monitoring NDJSON output")->required();
  cls_cmd->add_option("--log", log, "Command log to append to");

  auto* eval_cmd = app.add_subcommand("eval", "Score events against labeled ground truth");
  eval_cmd->add_option("--events", events, "Event NDJSON")->required();
  eval_cmd->add_option("--truth", truth, "Labeled session CSV")->required();
  eval_cmd->add_option("--tolerance", tolerance, "Onset matching tolerance (s)")
      ->check(CLI::PositiveNumber);

  auto* run_cmd = app.add_subcommand("run", "Full pipeline for one scenario");
  run_cmd->add_option("--scenario", scenario, "Scenario JSON")->required();
  run_cmd->add_flag("--paper-filter", paper_filter, "Use the published cascade");
  run_cmd->add_option("--out-dir", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*synth_cmd) {
      stage_synth(scenario, out, sweep);
    } else if (*filter_cmd) {
      stage_filter(in, out, filter_choice(design));
    } else if (*freqz_cmd) {
      stage_freqz(filter_choice(design), fs, points,
                  out.empty() ? std::nullopt : std::optional<fs::path>(out));
    } else if (*cal_cmd) {
      CalibrationOptions options;
      if (!scenario.empty()) options = io::read_scenario(scenario).calibration.options;
      stage_calibrate(in, out, options);
    } else if (*cls_cmd) {
      stage_classify(in, profile, table.empty() ? std::nullopt : std::optional<fs::path>(table),
                     events, commands, log.empty() ? std::nullopt : std::optional<fs::path>(log),
                     std::cout);
    } else if (*eval_cmd) {
      std::cout << stage_eval(events, truth, tolerance);
    } else if (*run_cmd) {
      stage_run(scenario, paper_filter, out_dir);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "eogctl: " << e.what() << '\n';
    return 1;
  } catch (const CalibrationError& e) {
    std::cerr << "eogctl: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "eogctl: " << e.what() << '\n';
    return 2;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "eogctl: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
