#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kbound {

enum class ErrorKind {
  Parse,
  RepeatedVertex,
  UnknownVertex,
  MissingFace,
  AmbiguousFace,
  BadFaceBinding,
  DuplicateId,
  UnknownSimplex,
  DimensionMismatch,
  NotACycle,
  BoundaryMismatch,
  EmptyList,
  DimensionTooLarge,
  NoPath,
  BadArgument,
};

std::string_view to_string(ErrorKind kind);

/// Input or contract error raised by the model and the decision procedures.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Two characterizations that must agree did not. Carries a JSON reproducer
/// so the instance can be replayed from the command line.
class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(const std::string& message, std::string reproducer)
      : std::runtime_error(message), reproducer_(std::move(reproducer)) {}

  const std::string& reproducer() const noexcept { return reproducer_; }

 private:
  std::string reproducer_;
};

/// Primal, dual and recursive verdicts differ on one (K, L, k) instance.
class MethodDisagreement : public TheoremViolation {
 public:
  using TheoremViolation::TheoremViolation;
};

}  // namespace kbound
