#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diffauction {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: duplicate ids, negative bids, mismatched id sets.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a function (support, counts, reserve range).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Formula evaluated at a pole, e.g. a virtual value where the density vanishes.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Unknown agent id.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Root bracket without a sign change or a non-regular distribution.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, double lo, double hi)
      : Error(what + " (bracket [" + std::to_string(lo) + ", " + std::to_string(hi) + "])"),
        lo_(lo),
        hi_(hi) {}
  explicit SolverError(const std::string& what) : Error(what) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

/// Text input that does not parse. `line()` is 1-based, 0 when not applicable.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Caller combined options that cannot work together (e.g. global optimum without a profile).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace diffauction
