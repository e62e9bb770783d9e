#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sirenless {

/// Base class for every error the engine raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text could not be ingested (invalid UTF-8).
class IngestError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A data file is malformed. Carries the offending 1-based line number
/// (0 when the problem is not tied to a line).
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A readability metric is undefined for the given counts.
class MetricError : public Error {
 public:
  using Error::Error;
};

class TrainError : public Error {
 public:
  using Error::Error;
};

/// A discourse model is incompatible with the running feature extractor.
class ModelError : public Error {
 public:
  using Error::Error;
};

class EvalError : public Error {
 public:
  using Error::Error;
};

class TopicError : public Error {
 public:
  using Error::Error;
};

/// The pipeline was given text it cannot analyze (e.g. nothing but whitespace).
class AnalyzeError : public Error {
 public:
  using Error::Error;
};

/// Bad configuration value or threshold file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace sirenless
