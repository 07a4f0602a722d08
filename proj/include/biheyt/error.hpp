#ifndef BIHEYT_ERROR_HPP
#define BIHEYT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace biheyt {

enum class ErrorCode {
  // structure validation
  NotAPartialOrder,
  OrthoNotInvolutive,
  NotAnOrthocomplement,
  OrthomodularityViolated,
  UnboundedPair,
  DegenerateStructure,
  InconsistentIdentification,
  UnknownElement,
  ParseError,
  // presheaf / algebra
  NotASubobject,
  PosetMismatch,
  NoLeastUpperWitness,
  UnknownContext,
  // resource limits
  SizeGuard,
};

std::string_view error_name(ErrorCode code);

/// Thrown by every library operation that rejects its input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace biheyt

#endif
