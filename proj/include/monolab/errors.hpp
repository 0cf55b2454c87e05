#pragma once

#include <stdexcept>
#include <string>

namespace monolab {

// Invalid argument or value outside an operation's contract.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A requested evaluation path does not exist (missing closed form and no
// optimizer budget, unsupported measure/mode combination, ...).
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// PPT-as-separability requested outside 2x2 / 2x3.
class UnsupportedDimsError : public DomainError {
 public:
  explicit UnsupportedDimsError(const std::string& what) : DomainError(what) {}
};

// Power-estimation bracket does not straddle the pass/fail boundary.
// `extend_hint` names which end the caller should move.
class BracketError : public std::runtime_error {
 public:
  BracketError(const std::string& what, std::string hint)
      : std::runtime_error(what), extend_hint(std::move(hint)) {}
  std::string extend_hint;
};

// A result failed an internal self-check (e.g. an ensemble that does not
// reconstruct its density matrix). Always a bug, never user error.
class InternalConsistencyError : public std::logic_error {
 public:
  explicit InternalConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// File / serialization problems surfaced by the CLI as exit code 4.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace monolab
