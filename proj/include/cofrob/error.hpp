#pragma once

#include <stdexcept>
#include <string>

namespace cofrob {

/// Malformed or inconsistent input: bad shapes, axiom violations, parse
/// failures. The CLI maps this to exit code 2.
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax or schema error in an exchange document, carrying a location
/// ("line 3, column 7" or a JSON field path).
class ParseError : public InvalidInput {
public:
    ParseError(const std::string& location, const std::string& message)
        : InvalidInput(location.empty() ? message : location + ": " + message), location_(location)
    {
    }
    const std::string& location() const { return location_; }

private:
    std::string location_;
};

/// A structural identity that must hold for every valid input failed to
/// hold. Indicates a bug; the CLI maps this to exit code 3.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace cofrob
