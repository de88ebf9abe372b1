#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gft {

/// Base of every error raised by the library. Callers that only need to
/// distinguish "bad input" from "bug" can catch Error vs InternalConsistencyError.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A scalar argument violates its admissible range (alpha, beta, lambda, r, ...).
class OutOfRangeError : public Error {
 public:
  OutOfRangeError(std::string name, const std::string& detail)
      : Error("out of range: " + name + " (" + detail + ")"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class ZeroInsideDiscError : public Error {
 public:
  explicit ZeroInsideDiscError(std::size_t index)
      : Error("polynomial zero #" + std::to_string(index) + " lies inside the unit disc"),
        index_(index) {}
  /// 1-based, matching z_1..z_n.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class NonFiniteError : public Error {
 public:
  explicit NonFiniteError(const std::string& what) : Error("non-finite value: " + what) {}
};

class UnboundedDomainError : public Error {
 public:
  UnboundedDomainError() : Error("half-plane has no parametric boundary curve") {}
};

class CenterOutsideDiameterError : public Error {
 public:
  explicit CenterOutsideDiameterError(double a)
      : Error("center " + std::to_string(a) + " outside the domain's real diameter"), center_(a) {}
  double center() const noexcept { return center_; }

 private:
  double center_;
};

class PoleHitError : public Error {
 public:
  explicit PoleHitError(const std::string& what) : Error("pole hit: " + what) {}
};

class NoRootInUnitIntervalError : public Error {
 public:
  NoRootInUnitIntervalError() : Error("quadratic has no root in (0, 1]") {}
};

class NotApplicableError : public Error {
 public:
  explicit NotApplicableError(const std::string& what) : Error("not applicable: " + what) {}
};

class WitnessPoleError : public Error {
 public:
  WitnessPoleError() : Error("sharpness witness requires R < 1") {}
};

/// A closed form disagreed with its defining polynomial. Always a bug.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gft
