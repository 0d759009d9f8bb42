#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace bcmas {

// Line/column inside a source text, both 1-based. Locations carry no
// structural meaning: two locations always compare equal so that ASTs can be
// compared structurally with defaulted operator==.
struct SourceLoc {
  int line = 0;
  int col = 0;

  friend bool operator==(const SourceLoc&, const SourceLoc&) { return true; }

  std::string to_string() const {
    return std::to_string(line) + ":" + std::to_string(col);
  }
};

enum class Severity { error, warning };

struct Diagnostic {
  Severity severity = Severity::error;
  std::optional<SourceLoc> loc;
  std::string message;

  std::string to_string() const {
    std::string s = severity == Severity::error ? "error" : "warning";
    if (loc) s += " at " + loc->to_string();
    return s + ": " + message;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Diagnostic& d) {
  return os << d.to_string();
}

// Base of every domain error (bad input, violated preconditions, limits).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(SourceLoc loc, const std::string& msg)
      : Error(loc.to_string() + ": " + msg), loc_(loc), msg_(msg) {}

  SourceLoc where() const { return loc_; }
  Diagnostic diagnostic() const { return {Severity::error, loc_, msg_}; }

 private:
  SourceLoc loc_;
  std::string msg_;
};

class GroundError : public ParseError {
 public:
  using ParseError::ParseError;
};

class ModelError : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace bcmas
