#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace showprog {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidInputError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ScalingFailureError : public Error {
 public:
  using Error::Error;
};

class InvalidSeparatorError : public Error {
 public:
  using Error::Error;
};

class MissingReferenceError : public Error {
 public:
  using Error::Error;
};

class MissingDataError : public Error {
 public:
  using Error::Error;
};

class ConflictError : public Error {
 public:
  using Error::Error;
};

// Draft text that cannot be tokenized; carries the byte offset of the
// first delimiter problem when known.
class MalformedDraftError : public Error {
 public:
  MalformedDraftError(const std::string& msg, std::size_t offset)
      : Error(msg + " (offset " + std::to_string(offset) + ")"), offset_(offset) {}
  explicit MalformedDraftError(const std::string& msg) : Error(msg), offset_(0) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnsupportedPatternError : public Error {
 public:
  using Error::Error;
};

// Transport-level failure talking to an external service; retriable says
// whether the caller may usefully try again.
class EndpointError : public Error {
 public:
  EndpointError(const std::string& msg, bool retriable)
      : Error(msg), retriable_(retriable) {}
  bool retriable() const { return retriable_; }

 private:
  bool retriable_ = false;
};

}  // namespace showprog
