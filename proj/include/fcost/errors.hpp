#pragma once

#include <stdexcept>
#include <string>

namespace fcost {

/// Bad or missing user-supplied configuration (unknown preset, missing
/// tradeoff tuple, unparseable scenario file). Maps to CLI exit code 1.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A postcondition the library checks on its own results failed. Maps to
/// CLI exit code 2.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The multiplication oracle was handed an operand that is not a unit mod N.
class OracleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace fcost
