#pragma once

#include <stdexcept>
#include <string>

namespace rkstab {

enum class ErrorCode {
  InvalidArgument,
  NoSignChange,
  NoRootFound,
  SolverStall,
  Degenerate,
};

/// Every failure raised by the library carries one of the codes above; the C
/// layer maps them one-to-one onto status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::InvalidArgument, what);
}

}  // namespace rkstab
