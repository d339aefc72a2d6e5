#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppattach {

// Every library failure derives from Error; kind() selects the CLI exit code.
enum class ErrorKind {
  kUsage,
  kParse,
  kFormatVersion,
  kIncompatible,
  kNotTrained,
  kIo,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Malformed input. line is 1-based; 0 means "not line oriented".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(ErrorKind::kParse,
              line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class FormatVersionError : public Error {
 public:
  explicit FormatVersionError(const std::string& what)
      : Error(ErrorKind::kFormatVersion, what) {}
};

class IncompatibleStoresError : public Error {
 public:
  explicit IncompatibleStoresError(const std::string& what)
      : Error(ErrorKind::kIncompatible, what) {}
};

class ModelNotTrainedError : public Error {
 public:
  explicit ModelNotTrainedError(const std::string& what)
      : Error(ErrorKind::kNotTrained, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::kIo, what) {}
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::kUsage, what) {}
};

}  // namespace ppattach
