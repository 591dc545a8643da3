#ifndef HANKEL_ERRORS_HPP
#define HANKEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hankel {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector or tensor shapes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Non-finite or otherwise unusable scalar input.
class ValueError : public Error {
 public:
  using Error::Error;
};

// Order, dimension or counting argument outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class BoundsError : public Error {
 public:
  using Error::Error;
};

// Problem size exceeds what exact integer or dense arithmetic supports.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A numerical procedure broke down. Carries the offending residual.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double residual);

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Malformed external input (JSON files, command-line values).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace hankel

#endif  // HANKEL_ERRORS_HPP
