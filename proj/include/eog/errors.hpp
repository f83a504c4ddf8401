#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eog {

// Base for every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite value encountered in a signal path.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, std::size_t index)
      : Error(what + " (sample " + std::to_string(index) + ")"), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Argument outside the mathematical domain of an operation (e.g. omega > pi).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid design / scenario parameters.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Malformed file content. line() is 1-based, 0 when not tied to a line.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Calibration could not produce a usable profile.
class CalibrationError : public Error {
 public:
  using Error::Error;
};

// A required direction had no labeled repetition in the calibration sweep.
class IncompleteCalibrationError : public CalibrationError {
 public:
  using CalibrationError::CalibrationError;
};

// Thresholds came out in the wrong order (noise swamps the movement, wrong polarity).
class DegenerateCalibrationError : public CalibrationError {
 public:
  using CalibrationError::CalibrationError;
};

// Caller broke an operation's precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Sink or file write failure; sink() names the failing destination.
class IoError : public Error {
 public:
  IoError(const std::string& sink, const std::string& what)
      : Error(sink + ": " + what), sink_(sink) {}
  const std::string& sink() const { return sink_; }

 private:
  std::string sink_;
};

}  // namespace eog
