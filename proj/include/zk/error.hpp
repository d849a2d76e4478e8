#pragma once

#include <stdexcept>
#include <string>

namespace zk {

/// Failure categories; the CLI maps them onto exit codes.
enum class ErrorKind {
  Validation,      // malformed input, violated precondition
  CapExceeded,     // a configured enumeration cap was hit
  NotACharacter,   // non-integral or negative multiplicity
  OracleMismatch,  // two independent pipelines disagree
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::Validation, what);
}

}  // namespace zk
