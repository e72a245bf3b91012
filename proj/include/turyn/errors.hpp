#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace turyn {

/// Malformed input: an invalid sign, a non-positive run length, an empty sequence.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Text that failed to parse. `position` is the 0-based character offset of
/// the offending token.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, std::size_t position)
        : ValidationError(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An index or shift outside the range where the quantity is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A sequence does not meet a structural premise (e.g. it does not start with +1).
class PremiseError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A constructed counterexample did not audit as one.
class FalsificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A stored record disagrees with a fresh audit.
class RecordMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A request beyond what the search kernels can represent.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace turyn
