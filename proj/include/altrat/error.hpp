#ifndef ALTRAT_ERROR_HPP_
#define ALTRAT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace altrat {

/// Violated precondition: invalid parameters, indices or arguments.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A requested integral or norm does not converge.
class DivergenceError : public DomainError {
 public:
  explicit DivergenceError(const std::string& what) : DomainError(what) {}
};

/// Numerical failure: no convergence, or a rule failed its moment certification.
class ComputationError : public std::runtime_error {
 public:
  explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace altrat

#endif  // ALTRAT_ERROR_HPP_
