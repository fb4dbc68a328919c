#ifndef ULTRA_ERROR_HPP
#define ULTRA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ultra {

enum class ErrorKind {
  Parse,
  DuplicatePoint,
  DuplicatePair,
  MissingPair,
  SelfPair,
  NonPositiveDistance,
  TriangleViolation,
  UnknownPoint,
  EmptyBall,
  EmptySubset,
  TrivialBall,
  NotAnIsometry,
  ConditionAViolated,
  MismatchedDegreeFunction,
  PermutationOutOfRange,
  ProductTooLarge,
  UnknownElement,
  TooLarge,
  NotDecomposable,
  DepthOutOfRange,
  PoolTooShallow,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure of the library is reported as an ultra::Error.
/// Violated internal invariants (self-checks) throw std::logic_error instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ultra

#endif  // ULTRA_ERROR_HPP
