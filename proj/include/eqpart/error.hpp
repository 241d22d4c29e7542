#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqpart {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform (matrix sizes, vertex counts).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A parameter is outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A generator would exceed the configured vertex budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Some vertex cannot be reached from the source set.
class DisconnectedError : public Error {
 public:
  using Error::Error;
};

/// Two vertices of the same color see different neighbor profiles.
class NotEquitable : public Error {
 public:
  NotEquitable(std::size_t first, std::size_t second, const std::string& what)
      : Error(what), first_(first), second_(second) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// Intersection numbers differ between two (base, target) vertex pairs.
class NotDistanceRegular : public Error {
 public:
  NotDistanceRegular(std::size_t base, std::size_t target, const std::string& what)
      : Error(what), base_(base), target_(target) {}

  std::size_t base() const noexcept { return base_; }
  std::size_t target() const noexcept { return target_; }

 private:
  std::size_t base_;
  std::size_t target_;
};

/// An identity that must hold by construction failed.
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace eqpart
