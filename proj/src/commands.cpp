#include "eog/commands.hpp"

#include <ostream>
#include <set>
#include <utility>

#include "eog/errors.hpp"
#include "eog/format.hpp"
#include "json.hpp"

namespace eog {

namespace {

std::size_t slot(MovementKind kind) {
  if (kind == MovementKind::Neutral) throw ContractError("Neutral has no command");
  return static_cast<std::size_t>(kind);
}

// Longest prefix of at most `limit` bytes that does not split a UTF-8 sequence.
// First `limit` code points of a UTF-8 string.
std::string utf8_prefix(const std::string& text, std::size_t limit) {
  std::size_t chars = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const bool lead = (static_cast<unsigned char>(text[i]) & 0xC0) != 0x80;
    if (lead && chars++ == limit) return text.substr(0, i);
  }
  return text;
}

}  // namespace

CommandTable::CommandTable(std::array<CommandEntry, 6> entries) : entries_(std::move(entries)) {
  const auto problems = validate_table(*this);
  if (!problems.empty()) throw ParameterError("invalid command table: " + problems.front());
}

const CommandEntry& CommandTable::operator[](MovementKind kind) const {
  return entries_[slot(kind)];
}

std::vector<std::string> validate_table(const CommandTable& table) {
  std::vector<std::string> out;
  std::set<int> tracks;
  for (std::size_t i = 0; i < kEventKinds.size(); ++i) {
    const auto& e = table.entries()[i];
    const std::string kind(kind_name(kEventKinds[i]));
    if (e.text.empty()) out.push_back(kind + ": empty text");
    if (e.color.empty()) out.push_back(kind + ": empty color");
    if (e.track < 1) out.push_back(kind + ": track must be >= 1");
    if (!tracks.insert(e.track).second) out.push_back(kind + ": duplicate track");
  }
  return out;
}

CommandTable default_table() {
  return CommandTable({{
      {"Call the Doctor", 1, "red"},
      {"I need water", 2, "green"},
      {"I am in pain", 3, "blue"},
      {"I want to rest", 4, "yellow"},
      {"Yes", 5, "white"},
      {"No", 6, "purple"},
  }});
}

Command map_event(const MovementEvent& event, const CommandTable& table) {
  if (event.kind == MovementKind::Neutral) {
    throw ContractError("cannot map a Neutral event to a command");
  }
  const auto& entry = table[event.kind];
  Command c;
  c.t = event.onset;
  c.kind = event.kind;
  c.text = utf8_prefix(entry.text, kDisplayChars);
  c.truncated = c.text.size() != entry.text.size();
  c.track = entry.track;
  c.color = entry.color;
  return c;
}

ConsoleSink::ConsoleSink(std::ostream& out, std::string name) : out_(out), name_(std::move(name)) {}

void ConsoleSink::write(const Command& c) {
  out_ << format_number(c.t) << ' ' << kind_name(c.kind) << ' ' << c.text << '\n';
  if (!out_) throw IoError(name_, "write failed");
}

NdjsonSink::NdjsonSink(std::ostream& out, std::string name) : out_(out), name_(std::move(name)) {}

void NdjsonSink::write(const Command& c) {
  out_ << command_to_ndjson(c) << '\n';
  if (!out_) throw IoError(name_, "write failed");
}

CommandLog::CommandLog(const std::string& path)
    : file_(path, std::ios::out | std::ios::app), name_("command-log(" + path + ")") {
  if (!file_) throw IoError(name_, "cannot open for append");
}

void CommandLog::write(const Command& c) {
  file_ << command_to_ndjson(c) << '\n';
  file_.flush();
  if (!file_) throw IoError(name_, "write failed");
}

void emit(const Command& command, std::span<CommandSink* const> sinks) {
  for (auto* sink : sinks) sink->write(command);
}

std::string command_to_ndjson(const Command& c) {
  nlohmann::ordered_json j;
  j["t"] = c.t;
  j["kind"] = kind_name(c.kind);
  j["text"] = c.text;
  j["track"] = c.track;
  j["color"] = c.color;
  return j.dump();
}

Command command_from_ndjson(const std::string& line, std::size_t line_number) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what(), line_number);
  }
  if (!j.is_object()) throw FormatError("command line is not a JSON object", line_number);
  static const std::set<std::string> fields = {"t", "kind", "text", "track", "color"};
  for (const auto& [key, value] : j.items()) {
    if (!fields.count(key)) throw FormatError("unknown command field '" + key + "'", line_number);
  }
  for (const auto& f : fields) {
    if (!j.contains(f)) throw FormatError("missing command field '" + f + "'", line_number);
  }
  Command c;
  try {
    c.t = j.at("t").get<double>();
    const auto kind = parse_kind(j.at("kind").get<std::string>());
    if (!kind || *kind == MovementKind::Neutral) {
      throw FormatError("bad command kind", line_number);
    }
    c.kind = *kind;
    c.text = j.at("text").get<std::string>();
    c.track = j.at("track").get<int>();
    c.color = j.at("color").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad command field type: ") + e.what(), line_number);
  }
  c.truncated = false;
  return c;
}

}  // namespace eog
