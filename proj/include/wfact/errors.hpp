#pragma once

#include <stdexcept>
#include <string>

namespace wfact {

/// Invalid input: malformed element, parameter out of domain, size mismatch.
struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A hard size guard was hit (Bell-number guard, oracle #W cap, ...).
struct capability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A series failed a structural check it must satisfy (non-polynomial Phi, ...).
struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Laurent reconstruction from EGF counts disagreed with surplus counts.
struct reconstruction_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Floating-point root finder did not converge.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wfact
