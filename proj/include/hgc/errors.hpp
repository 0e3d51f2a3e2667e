#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hgc {

/// Malformed edge-list input. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptyGraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (bad node id, non-adjacent pair, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The epidemic threshold <k>/(<k^2> - <k>) is undefined for this graph.
class DegenerateThresholdError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace hgc
