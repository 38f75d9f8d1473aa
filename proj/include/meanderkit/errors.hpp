#ifndef MEANDERKIT_ERRORS_HPP
#define MEANDERKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace meanderkit {

/// Malformed textual input (meander types, move sequences, config files).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was applied outside its domain, e.g. the spectrum of a
/// meander that is not Frobenius.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two independent computations disagree. Always a bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace meanderkit

#endif // MEANDERKIT_ERRORS_HPP
