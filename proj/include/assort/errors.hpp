#pragma once

#include <stdexcept>
#include <string>

namespace assort {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class LoopRejected : public Error {
 public:
  using Error::Error;
};

class DuplicateEdge : public Error {
 public:
  using Error::Error;
};

class VertexOutOfRange : public Error {
 public:
  using Error::Error;
};

class EmptyEdgeSet : public Error {
 public:
  using Error::Error;
};

class Disconnected : public Error {
 public:
  using Error::Error;
};

class EdgeNotFound : public Error {
 public:
  using Error::Error;
};

class SpecViolation : public Error {
 public:
  using Error::Error;
};

class NotRegular : public Error {
 public:
  using Error::Error;
};

class MatchingInfeasible : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

class OrderTooSmall : public Error {
 public:
  using Error::Error;
};

class OrderUnsupported : public Error {
 public:
  using Error::Error;
};

class BadCode : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class UnknownClaim : public Error {
 public:
  using Error::Error;
};

/// Text-format error; carries the 1-based line where parsing failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(what + " at line " + std::to_string(line)), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace assort
