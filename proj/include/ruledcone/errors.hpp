#pragma once

#include <stdexcept>
#include <string>

namespace ruledcone {

// Malformed or out-of-domain input. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two classes (or a class and a cohomology vector) live on different blow-ups.
class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

// Class has no embedded representative by adjunction.
class NotACurveError : public InputError {
 public:
  using InputError::InputError;
};

// Inflation parameter outside [0, T).
class RangeError : public InputError {
 public:
  using InputError::InputError;
};

// A recipe has no valid solution; `constraint` names the violated condition.
class PlanError : public std::runtime_error {
 public:
  PlanError(std::string recipe, std::string constraint)
      : std::runtime_error(recipe + ": " + constraint),
        recipe_(std::move(recipe)),
        constraint_(std::move(constraint)) {}

  const std::string& recipe() const noexcept { return recipe_; }
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string recipe_;
  std::string constraint_;
};

}  // namespace ruledcone
