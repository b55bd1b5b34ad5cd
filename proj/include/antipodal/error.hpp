#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace antipodal {

enum class ErrorCode {
  InvalidParams,
  Overlap,
  Range,
  DimensionMismatch,
  BadCharacter,
  EmptyInput,
  Regime,
  TooLarge,
  GroundMismatch,
  Precondition,
  BadPair,
  BadT,
  ShapeMismatch,
  InvalidPermutation,
  Parse,
  Io,
  Overflow,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// All library failures are reported through this one exception type; the
// code is what the C API and the CLI exit-code mapping switch on.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) {
  throw Error(code, what);
}

} // namespace antipodal
