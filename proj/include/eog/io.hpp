#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "eog/calibration.hpp"
#include "eog/commands.hpp"
#include "eog/evaluate.hpp"
#include "eog/freqz.hpp"
#include "eog/pipeline.hpp"
#include "eog/types.hpp"

// File formats. Every reader throws FormatError (with a 1-based line number for line
// oriented formats); every path-based writer throws IoError when the file cannot be
// written.
namespace eog::io {

// Session CSV: header `t,h,v` or `t,h,v,label`; numbers with 9 significant digits; a
// label cell holds `Kind:duration` on the row of its onset and is empty elsewhere.
// fs is not stored: the reader infers it from the first two timestamps and requires
// every gap to match within 1e-6 s.
void write_session(const SessionRecording& session, std::ostream& out);
SessionRecording read_session(std::istream& in);
void write_session(const SessionRecording& session, const std::filesystem::path& path);
SessionRecording read_session(const std::filesystem::path& path);

// Profile JSON: one object with exactly the CalibrationProfile fields, SI units.
std::string profile_to_json(const CalibrationProfile& profile);
CalibrationProfile profile_from_json(const std::string& text);
void write_profile(const CalibrationProfile& profile, const std::filesystem::path& path);
CalibrationProfile read_profile(const std::filesystem::path& path);

// Command table JSON: object keyed by kind name, values {text, track, color}.
std::string table_to_json(const CommandTable& table);
CommandTable table_from_json(const std::string& text);
void write_table(const CommandTable& table, const std::filesystem::path& path);
CommandTable read_table(const std::filesystem::path& path);

// Event stream NDJSON: {"kind","onset","duration","peak"} per line.
std::string event_to_ndjson(const MovementEvent& event);
void write_events(const std::vector<MovementEvent>& events, std::ostream& out);
std::vector<MovementEvent> read_events(std::istream& in);
std::vector<MovementEvent> read_events(const std::filesystem::path& path);

// Command stream NDJSON (monitoring sink / command log format).
std::vector<Command> read_commands(std::istream& in);
std::vector<Command> read_commands(const std::filesystem::path& path);

// Frequency response CSV: header `omega_rad,magnitude,magnitude_db,phase_rad`.
void write_response(const dsp::FrequencyResponse& response, std::ostream& out);

// Scenario JSON (synthesis + front end + filter + calibration plan).
ScenarioFile scenario_from_json(const std::string& text);
ScenarioFile read_scenario(const std::filesystem::path& path);

std::string confusion_to_json(const ConfusionMatrix& matrix);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::string& text, const std::filesystem::path& path);

}  // namespace eog::io
