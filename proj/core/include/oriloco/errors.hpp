#pragma once

#include <stdexcept>

/// \file
/// \brief Error types shared by every module.

namespace oriloco {

/// Malformed or inconsistent run configuration: unknown key, wrong type,
/// value outside its documented range.  Messages carry file:line context
/// where available so the offending entry can be found directly.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed inputs that describe a physically impossible or unsolvable
/// situation: a tower twisted past its collapse point, a stance whose
/// closure equation has no solution, a solver that failed to converge.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oriloco
