#pragma once

#include <stdexcept>
#include <string>

namespace wscatter {

// Base class for all domain errors thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class InvalidGrid : public Error {
 public:
  using Error::Error;
};

class TailMismatch : public Error {
 public:
  using Error::Error;
};

class NumericalOverflow : public Error {
 public:
  using Error::Error;
};

class EmptySide : public Error {
 public:
  using Error::Error;
};

// Thrown when a Wronskian series never settles within tolerance; carries
// which series failed so the driver can report it.
class NoPlateau : public Error {
 public:
  NoPlateau(const std::string& msg, int series_index = -1)
      : Error(msg), series_index_(series_index) {}
  int series_index() const { return series_index_; }

 private:
  int series_index_;
};

class DeterminantDrift : public Error {
 public:
  using Error::Error;
};

class ZeroIncident : public Error {
 public:
  using Error::Error;
};

class EvanescentChannel : public Error {
 public:
  using Error::Error;
};

class BracketLost : public Error {
 public:
  using Error::Error;
};

class AllPointsFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace wscatter
