#include "eog/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "eog/errors.hpp"
#include "eog/format.hpp"
#include "json.hpp"

namespace eog {

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

}  // namespace eog

namespace eog::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

double parse_number(const std::string& text, std::size_t line, const char* column) {
  double value = 0.0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw FormatError(std::string("column ") + column + ": not a number '" + text + "'", line);
  }
  if (!std::isfinite(value)) {
    throw FormatError(std::string("column ") + column + ": non-finite value", line);
  }
  return value;
}

double round_significant(double value) { return std::stod(format_number(value)); }

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string(what) + ": invalid JSON: " + e.what());
  }
}

void require_object(const json& j, const char* what) {
  if (!j.is_object()) throw FormatError(std::string(what) + ": expected a JSON object");
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& what) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw FormatError(what + ": unknown field '" + key + "'");
  }
}

template <class T>
T field(const json& j, const std::string& key, const std::string& what) {
  if (!j.contains(key)) throw FormatError(what + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw FormatError(what + ": field '" + key + "' has the wrong type");
  }
}

template <class T>
void optional_field(const json& j, const std::string& key, const std::string& what, T& out) {
  if (j.contains(key)) out = field<T>(j, key, what);
}

MovementKind event_kind(const std::string& name, const std::string& what) {
  const auto kind = parse_kind(name);
  if (!kind || *kind == MovementKind::Neutral) {
    throw FormatError(what + ": unknown movement kind '" + name + "'");
  }
  return *kind;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "' for reading");
  return in;
}

}  // namespace

std::string read_text(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out << text;
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

// ---- session CSV -----------------------------------------------------------------

void write_session(const SessionRecording& session, std::ostream& out) {
  const bool labeled = !session.labels.empty();
  std::vector<std::string> cells(session.size());
  if (labeled) {
    const double half = 0.5 / session.fs;
    std::size_t row = 0;
    for (const auto& label : session.labels) {
      while (row < session.size() && session.samples[row].t < label.onset - half) ++row;
      if (row == session.size()) throw ContractError("label onset beyond the last sample");
      if (!cells[row].empty()) throw ContractError("two labels start on the same sample");
      cells[row] = std::string(kind_name(label.kind)) + ":" + format_number(label.duration);
    }
  }
  out << (labeled ? "t,h,v,label\n" : "t,h,v\n");
  for (std::size_t i = 0; i < session.size(); ++i) {
    const auto& s = session.samples[i];
    out << format_number(s.t) << ',' << format_number(s.h) << ',' << format_number(s.v);
    if (labeled) out << ',' << cells[i];
    out << '\n';
  }
}

SessionRecording read_session(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty session file", 1);
  strip_cr(line);
  const auto header = split(line, ',');
  const bool labeled = header.size() == 4;
  if (header.size() < 3 || header[0] != "t" || header[1] != "h" || header[2] != "v" ||
      (labeled && header[3] != "label") || header.size() > 4) {
    std::string why = "expected header 't,h,v' or 't,h,v,label'";
    if (header.size() < 3) why += " (missing column " + std::string(header.size() < 2 ? "h" : "v") + ")";
    throw FormatError(why, 1);
  }

  SessionRecording session;
  std::vector<std::size_t> lines;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != header.size()) {
      throw FormatError("expected " + std::to_string(header.size()) + " columns, found " +
                            std::to_string(cells.size()),
                        line_no);
    }
    Sample s{parse_number(cells[0], line_no, "t"), parse_number(cells[1], line_no, "h"),
             parse_number(cells[2], line_no, "v")};
    if (!session.samples.empty() && !(s.t > session.samples.back().t)) {
      throw FormatError("non-monotone time", line_no);
    }
    if (labeled && !cells[3].empty()) {
      const auto parts = split(cells[3], ':');
      if (parts.size() != 2) throw FormatError("label must be 'Kind:duration'", line_no);
      const auto kind = parse_kind(parts[0]);
      if (!kind || *kind == MovementKind::Neutral) {
        throw FormatError("unknown label kind '" + parts[0] + "'", line_no);
      }
      const double duration = parse_number(parts[1], line_no, "label duration");
      if (!(duration > 0.0)) throw FormatError("label duration must be positive", line_no);
      session.labels.push_back({*kind, s.t, duration});
    }
    session.samples.push_back(s);
    lines.push_back(line_no);
  }

  if (session.samples.size() < 2) {
    throw FormatError("need at least two samples to infer the sample rate", line_no);
  }
  const double dt = session.samples[1].t - session.samples[0].t;
  for (std::size_t i = 1; i < session.size(); ++i) {
    const double gap = session.samples[i].t - session.samples[i - 1].t;
    if (std::abs(gap - dt) > 1e-6) throw FormatError("inconsistent sample spacing", lines[i]);
  }
  session.fs = round_significant(1.0 / dt);

  for (const auto& v : validate_session(session)) {
    if (v.kind == ViolationKind::IrregularSpacing) continue;  // CSV tolerance is 1e-6 s
    throw FormatError("invalid session: " + v.message);
  }
  return session;
}

void write_session(const SessionRecording& session, const std::filesystem::path& path) {
  std::ostringstream ss;
  write_session(session, ss);
  write_text(ss.str(), path);
}

SessionRecording read_session(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_session(in);
}

// ---- profile JSON ----------------------------------------------------------------

namespace {

struct ProfileField {
  const char* name;
  double CalibrationProfile::*member;
};

constexpr ProfileField kProfileFields[] = {
    {"neutral_mean_h", &CalibrationProfile::neutral_mean_h},
    {"neutral_mean_v", &CalibrationProfile::neutral_mean_v},
    {"threshold_left", &CalibrationProfile::threshold_left},
    {"threshold_right", &CalibrationProfile::threshold_right},
    {"threshold_up", &CalibrationProfile::threshold_up},
    {"threshold_down", &CalibrationProfile::threshold_down},
    {"threshold_blink", &CalibrationProfile::threshold_blink},
    {"k", &CalibrationProfile::k},
    {"min_hold", &CalibrationProfile::min_hold},
    {"refractory", &CalibrationProfile::refractory},
    {"blink_max_dur", &CalibrationProfile::blink_max_dur},
    {"long_blink_min_dur", &CalibrationProfile::long_blink_min_dur},
    {"double_blink_window", &CalibrationProfile::double_blink_window},
};

}  // namespace

std::string profile_to_json(const CalibrationProfile& profile) {
  ordered_json j;
  for (const auto& f : kProfileFields) j[f.name] = profile.*(f.member);
  return j.dump(2) + "\n";
}

CalibrationProfile profile_from_json(const std::string& text) {
  const auto j = parse_json(text, "profile");
  require_object(j, "profile");
  std::set<std::string> allowed;
  for (const auto& f : kProfileFields) allowed.insert(f.name);
  reject_unknown(j, allowed, "profile");
  CalibrationProfile p;
  for (const auto& f : kProfileFields) p.*(f.member) = field<double>(j, f.name, "profile");
  return p;
}

void write_profile(const CalibrationProfile& profile, const std::filesystem::path& path) {
  write_text(profile_to_json(profile), path);
}

CalibrationProfile read_profile(const std::filesystem::path& path) {
  return profile_from_json(read_text(path));
}

// ---- command table JSON ----------------------------------------------------------

std::string table_to_json(const CommandTable& table) {
  ordered_json j;
  for (auto kind : kEventKinds) {
    const auto& e = table[kind];
    ordered_json entry;
    entry["text"] = e.text;
    entry["track"] = e.track;
    entry["color"] = e.color;
    j[std::string(kind_name(kind))] = entry;
  }
  return j.dump(2) + "\n";
}

CommandTable table_from_json(const std::string& text) {
  const auto j = parse_json(text, "command table");
  require_object(j, "command table");
  std::set<std::string> kinds;
  for (auto kind : kEventKinds) kinds.insert(std::string(kind_name(kind)));
  reject_unknown(j, kinds, "command table");

  std::array<CommandEntry, 6> entries;
  for (std::size_t i = 0; i < kEventKinds.size(); ++i) {
    const std::string name(kind_name(kEventKinds[i]));
    if (!j.contains(name)) throw FormatError("command table: missing kind '" + name + "'");
    const auto& e = j.at(name);
    const std::string what = "command table entry " + name;
    require_object(e, what.c_str());
    reject_unknown(e, {"text", "track", "color"}, what);
    entries[i] = {field<std::string>(e, "text", what), field<int>(e, "track", what),
                  field<std::string>(e, "color", what)};
  }
  try {
    return CommandTable(entries);
  } catch (const ParameterError& e) {
    throw FormatError(e.what());
  }
}

void write_table(const CommandTable& table, const std::filesystem::path& path) {
  write_text(table_to_json(table), path);
}

CommandTable read_table(const std::filesystem::path& path) {
  return table_from_json(read_text(path));
}

// ---- event / command NDJSON ------------------------------------------------------

std::string event_to_ndjson(const MovementEvent& e) {
  ordered_json j;
  j["kind"] = kind_name(e.kind);
  j["onset"] = e.onset;
  j["duration"] = e.duration;
  j["peak"] = e.peak;
  return j.dump();
}

void write_events(const std::vector<MovementEvent>& events, std::ostream& out) {
  for (const auto& e : events) out << event_to_ndjson(e) << '\n';
}

std::vector<MovementEvent> read_events(std::istream& in) {
  std::vector<MovementEvent> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    const std::string what = "event line " + std::to_string(line_no);
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw FormatError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    require_object(j, what.c_str());
    reject_unknown(j, {"kind", "onset", "duration", "peak"}, what);
    MovementEvent e;
    e.kind = event_kind(field<std::string>(j, "kind", what), what);
    e.onset = field<double>(j, "onset", what);
    e.duration = field<double>(j, "duration", what);
    e.peak = field<double>(j, "peak", what);
    out.push_back(e);
  }
  return out;
}

std::vector<MovementEvent> read_events(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_events(in);
}

std::vector<Command> read_commands(std::istream& in) {
  std::vector<Command> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    out.push_back(command_from_ndjson(line, line_no));
  }
  return out;
}

std::vector<Command> read_commands(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_commands(in);
}

// ---- frequency response ----------------------------------------------------------

void write_response(const dsp::FrequencyResponse& r, std::ostream& out) {
  out << "omega_rad,magnitude,magnitude_db,phase_rad\n";
  for (std::size_t i = 0; i < r.size(); ++i) {
    out << format_number(r.omega[i]) << ',' << format_number(r.magnitude(i)) << ','
        << format_number(r.magnitude_db[i]) << ','
        << format_number(r.phase_rad[i]) << '\n';
  }
}

// ---- scenario JSON ---------------------------------------------------------------

ScenarioFile scenario_from_json(const std::string& text) {
  const auto j = parse_json(text, "scenario");
  require_object(j, "scenario");
  reject_unknown(j,
                 {"fs", "duration", "seed", "noise_rms", "drift", "events", "random_events",
                  "amplitudes", "timing", "frontend", "filter", "calibration"},
                 "scenario");
  if (j.contains("events") && j.contains("random_events")) {
    throw FormatError("scenario: give either 'events' or 'random_events', not both");
  }

  ScenarioFile sc;
  auto& spec = sc.spec;
  optional_field(j, "fs", "scenario", spec.fs);
  optional_field(j, "seed", "scenario", spec.seed);

  if (j.contains("random_events")) {
    const auto& r = j.at("random_events");
    require_object(r, "scenario.random_events");
    reject_unknown(r, {"count", "min_gap", "max_gap"}, "scenario.random_events");
    double min_gap = 0.8, max_gap = 1.4;
    optional_field(r, "min_gap", "scenario.random_events", min_gap);
    optional_field(r, "max_gap", "scenario.random_events", max_gap);
    const auto count = field<std::size_t>(r, "count", "scenario.random_events");
    try {
      spec = synth::random_scenario(count, spec.seed, min_gap, max_gap, spec.fs);
    } catch (const ParameterError& e) {
      throw FormatError(std::string("scenario.random_events: ") + e.what());
    }
  }
  optional_field(j, "duration", "scenario", spec.duration);
  optional_field(j, "noise_rms", "scenario", spec.noise_rms);
  optional_field(j, "drift", "scenario", spec.drift);

  if (j.contains("events")) {
    const auto& events = j.at("events");
    if (!events.is_array()) throw FormatError("scenario: 'events' must be an array");
    for (std::size_t i = 0; i < events.size(); ++i) {
      const std::string what = "scenario.events[" + std::to_string(i) + "]";
      require_object(events[i], what.c_str());
      reject_unknown(events[i], {"kind", "onset"}, what);
      spec.events.push_back({event_kind(field<std::string>(events[i], "kind", what), what),
                             field<double>(events[i], "onset", what)});
    }
  }
  if (j.contains("amplitudes")) {
    const auto& a = j.at("amplitudes");
    require_object(a, "scenario.amplitudes");
    for (const auto& [key, value] : a.items()) {
      const auto kind = event_kind(key, "scenario.amplitudes");
      spec.amplitudes[kind] = field<double>(a, key, "scenario.amplitudes");
    }
  }
  if (j.contains("timing")) {
    const auto& t = j.at("timing");
    const std::string what = "scenario.timing";
    require_object(t, what.c_str());
    reject_unknown(t, {"saccade", "long_blink", "blink", "double_blink_gap", "edge"}, what);
    optional_field(t, "saccade", what, spec.timing.saccade);
    optional_field(t, "long_blink", what, spec.timing.long_blink);
    optional_field(t, "blink", what, spec.timing.blink);
    optional_field(t, "double_blink_gap", what, spec.timing.double_blink_gap);
    optional_field(t, "edge", what, spec.timing.edge);
  }
  if (j.contains("frontend")) {
    const auto& f = j.at("frontend");
    const std::string what = "scenario.frontend";
    require_object(f, what.c_str());
    reject_unknown(f, {"ina_gain", "bandpass_gain", "band_lo", "band_hi"}, what);
    optional_field(f, "ina_gain", what, sc.frontend.ina_gain);
    optional_field(f, "bandpass_gain", what, sc.frontend.bandpass_gain);
    optional_field(f, "band_lo", what, sc.frontend.band_lo);
    optional_field(f, "band_hi", what, sc.frontend.band_hi);
  }
  if (j.contains("filter")) {
    const auto& f = j.at("filter");
    const std::string what = "scenario.filter";
    require_object(f, what.c_str());
    reject_unknown(f, {"paper", "order", "f_lo", "f_hi"}, what);
    optional_field(f, "paper", what, sc.filter.paper);
    optional_field(f, "order", what, sc.filter.order);
    optional_field(f, "f_lo", what, sc.filter.f_lo);
    optional_field(f, "f_hi", what, sc.filter.f_hi);
  }
  if (j.contains("calibration")) {
    const auto& c = j.at("calibration");
    const std::string what = "scenario.calibration";
    require_object(c, what.c_str());
    reject_unknown(c,
                   {"repetitions", "seed", "k", "min_hold", "refractory", "blink_max_dur",
                    "long_blink_min_dur", "double_blink_window"},
                   what);
    auto& cal = sc.calibration;
    optional_field(c, "repetitions", what, cal.repetitions);
    optional_field(c, "seed", what, cal.seed);
    optional_field(c, "k", what, cal.options.k);
    optional_field(c, "min_hold", what, cal.options.min_hold);
    optional_field(c, "refractory", what, cal.options.refractory);
    optional_field(c, "blink_max_dur", what, cal.options.blink_max_dur);
    optional_field(c, "long_blink_min_dur", what, cal.options.long_blink_min_dur);
    optional_field(c, "double_blink_window", what, cal.options.double_blink_window);
  }

  try {
    synth::validate(spec);
    synth::validate(sc.frontend);
  } catch (const ParameterError& e) {
    throw FormatError(std::string("scenario: ") + e.what());
  }
  return sc;
}

ScenarioFile read_scenario(const std::filesystem::path& path) {
  return scenario_from_json(read_text(path));
}

// ---- evaluation ------------------------------------------------------------------

std::string confusion_to_json(const ConfusionMatrix& m) {
  ordered_json j;
  ordered_json counts, fps;
  for (std::size_t r = 0; r < kEventKinds.size(); ++r) {
    ordered_json row;
    for (std::size_t c = 0; c < kEventKinds.size(); ++c) {
      row[std::string(kind_name(kEventKinds[c]))] = m.counts[r][c];
    }
    row["Missed"] = m.counts[r][ConfusionMatrix::kMissed];
    counts[std::string(kind_name(kEventKinds[r]))] = row;
    fps[std::string(kind_name(kEventKinds[r]))] = m.false_positives[r];
  }
  j["counts"] = counts;
  j["false_positives"] = fps;
  j["correct"] = m.correct();
  j["total"] = m.total();
  j["false_positive_total"] = m.total_false_positives();
  j["accuracy"] = m.accuracy();
  return j.dump(2) + "\n";
}

}  // namespace eog::io
