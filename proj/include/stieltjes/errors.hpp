#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stieltjes {

/// A precondition of the mathematics failed (non-regular data, too few
/// moments, degenerate input). The CLI maps these to exit status 3.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when the moment prefix is too short for the requested work.
class InsufficientMoments : public DomainError {
public:
  InsufficientMoments(std::size_t required, std::size_t available, const std::string& what);
  std::size_t required() const { return required_; }
  std::size_t available() const { return available_; }

private:
  std::size_t required_;
  std::size_t available_;
};

/// A Schur step hit a vanishing constant term, i.e. P_j(0) = 0.
class NotRegular : public DomainError {
public:
  explicit NotRegular(std::size_t step);
  std::size_t step() const { return step_; }

private:
  std::size_t step_;
};

/// Two independent constructions that must agree did not. Exit status 4.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace stieltjes
