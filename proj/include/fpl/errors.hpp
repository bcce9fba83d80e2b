#ifndef FPL_ERRORS_HPP
#define FPL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fpl {

/// Argument outside the mathematical domain of an operation (gamma <= -5, |m| > l, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Lookup of an index that is not part of a set.
class NotFoundError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A precomputed table is too small for the requested coefficient.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Internal self-check failed (recursion residual, imaginary residue, ...).
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed binary file: bad magic, version, truncation or checksum.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed data that does not match what the caller asked for.
class CompatibilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid run configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BlowupError : public std::runtime_error {
public:
    BlowupError(const std::string& what, long step) : std::runtime_error(what), step_(step) {}
    long step() const noexcept { return step_; }

private:
    long step_;
};

}  // namespace fpl

#endif  // FPL_ERRORS_HPP
