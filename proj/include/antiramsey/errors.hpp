#pragma once

#include <stdexcept>
#include <string>

namespace antiramsey {

/// Malformed input: bad part lists, out-of-range parameters, broken files.
class InvalidInput : public std::invalid_argument {
public:
  explicit InvalidInput(const std::string &what) : std::invalid_argument(what) {}
};

/// An exhaustive routine was asked to run on an instance above its cap.
class CapExceeded : public std::runtime_error {
public:
  explicit CapExceeded(const std::string &what) : std::runtime_error(what) {}
};

/// A caller broke an operation's precondition (e.g. non-rainbow input cycle).
class ContractViolation : public std::logic_error {
public:
  explicit ContractViolation(const std::string &what) : std::logic_error(what) {}
};

/// Something that should be impossible happened. Always a bug.
class InvariantFailure : public std::logic_error {
public:
  explicit InvariantFailure(const std::string &what) : std::logic_error(what) {}
};

} // namespace antiramsey
