#pragma once

#include <stdexcept>
#include <string>

namespace qvl {

/// Thrown by classical_limit when the value genuinely diverges at q = 1.
class PoleError : public std::runtime_error {
public:
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a quantity that must be an integer (or an integral Laurent
/// polynomial with the required exponent parity) fails to be one. This is a
/// falsification signal, not a recoverable condition.
class IntegralityError : public std::runtime_error {
public:
    explicit IntegralityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qvl
