#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apexrandic {

/// Caller passed arguments outside an operation's contract (bad vertex, bad range).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well-formed but outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Text input could not be decoded. `position()` is a byte offset for graph6
/// and a 1-based line number for edge lists.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Requested work exceeds a feasibility guard; the message carries a cost estimate.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations disagreed. Always a bug in this library.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace apexrandic
