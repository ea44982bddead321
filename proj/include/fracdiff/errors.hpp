#pragma once

#include <stdexcept>
#include <string>

namespace fracdiff {

/// Invalid argument: bad bounds, non-positive times, integer orders, ...
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The request is well formed but the input cannot support it
/// (missing derivatives, no closed-form Laplace transform).
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-finite values encountered during evolution.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fracdiff
