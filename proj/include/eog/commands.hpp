#pragma once

#include <array>
#include <cstddef>
#include <fstream>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "eog/types.hpp"

namespace eog {

// What the display, indicator and audio player do for one movement kind.
struct CommandEntry {
  std::string text;
  int track{1};
  std::string color;

  bool operator==(const CommandEntry&) const = default;
};

// Total mapping over the six event kinds, indexed in kEventKinds order.
class CommandTable {
 public:
  explicit CommandTable(std::array<CommandEntry, 6> entries);

  const CommandEntry& operator[](MovementKind kind) const;
  const std::array<CommandEntry, 6>& entries() const { return entries_; }
  bool operator==(const CommandTable&) const = default;

 private:
  std::array<CommandEntry, 6> entries_;
};

// Empty iff every entry has non-empty text and color and tracks are unique and >= 1.
std::vector<std::string> validate_table(const CommandTable& table);

// Left -> "Call the Doctor" on track 1, red. The other five messages are placeholders.
CommandTable default_table();

// 16x2 character display.
inline constexpr std::size_t kDisplayChars = 32;

// Command at the event onset. Text longer than the display is cut (on a UTF-8 boundary)
// and flagged. Throws ContractError for a Neutral event.
Command map_event(const MovementEvent& event, const CommandTable& table);

class CommandSink {
 public:
  virtual ~CommandSink() = default;
  virtual void write(const Command& command) = 0;
  virtual const std::string& name() const = 0;
};

// "t kind text" per line.
class ConsoleSink : public CommandSink {
 public:
  explicit ConsoleSink(std::ostream& out, std::string name = "console");
  void write(const Command& command) override;
  const std::string& name() const override { return name_; }

 private:
  std::ostream& out_;
  std::string name_;
};

// One JSON object per line: {"t","kind","text","track","color"}.
class NdjsonSink : public CommandSink {
 public:
  explicit NdjsonSink(std::ostream& out, std::string name = "monitoring");
  void write(const Command& command) override;
  const std::string& name() const override { return name_; }

 private:
  std::ostream& out_;
  std::string name_;
};

// NDJSON appended to a file; the file is created if missing.
class CommandLog : public CommandSink {
 public:
  explicit CommandLog(const std::string& path);
  void write(const Command& command) override;
  const std::string& name() const override { return name_; }

 private:
  std::ofstream file_;
  std::string name_;
};

// Writes `command` to each sink in order. Throws IoError naming the first failing sink.
void emit(const Command& command, std::span<CommandSink* const> sinks);

std::string command_to_ndjson(const Command& command);
// Parses one NDJSON line. Throws FormatError on missing/extra fields or bad kinds.
Command command_from_ndjson(const std::string& line, std::size_t line_number = 0);

}  // namespace eog
