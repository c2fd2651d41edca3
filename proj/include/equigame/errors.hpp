#ifndef EQUIGAME_ERRORS_HPP
#define EQUIGAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace equigame {

// Thrown when an iteration produces non-finite values or the residual blows up.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, long iteration)
      : std::runtime_error(what), iteration_(iteration) {}
  long iteration() const noexcept { return iteration_; }

 private:
  long iteration_;
};

// Input files or structures violating a schema or a structural invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace equigame

#endif
