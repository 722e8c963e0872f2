#pragma once

#include <stdexcept>
#include <string>

namespace hcensus {

// Every failure raised by the library derives from Error so callers (and the
// C API boundary) can map it to a status code by kind.
enum class ErrorKind {
  Precondition,         // input outside an operation's domain
  Parse,                // malformed divisor-class text
  Overflow,             // checked 64-bit arithmetic overflowed
  VanishingNotJustified,
  NoIntegralLinkage,
  Scope,                // operation asked about a case it does not cover
};

const char* error_kind_name(ErrorKind kind) noexcept;

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

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::Precondition, what);
}

}  // namespace hcensus
