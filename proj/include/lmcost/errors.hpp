#pragma once

#include <stdexcept>
#include <string>

namespace lmcost {

/// Rejected input: non-finite, non-positive or out-of-range parameters.
class InvalidParameter : public std::invalid_argument {
public:
  explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

/// A cost evaluation requested outside its domain (t <= 0, wrong dimension).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An iterative procedure did not converge, or produced a non-physical value.
class NumericalFailure : public std::runtime_error {
public:
  explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lmcost
