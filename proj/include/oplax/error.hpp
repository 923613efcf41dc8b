#pragma once

#include <stdexcept>
#include <string>

namespace oplax {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  Domain,
  Integration,
  Io,
};

/// Single exception type for the library; the code maps one-to-one onto the
/// C API status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace oplax
