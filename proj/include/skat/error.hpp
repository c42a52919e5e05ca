#pragma once

#include <stdexcept>

namespace skat {

/// Base class for all toolkit errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A distribution, channel or argument violates a structural invariant.
class validation_error : public error {
public:
    using error::error;
};

/// A variable name does not exist in the distribution at hand.
class unknown_variable_error : public error {
public:
    using error::error;
};

/// An enumeration would exceed the configured budget.
class budget_error : public error {
public:
    using error::error;
};

}  // namespace skat
