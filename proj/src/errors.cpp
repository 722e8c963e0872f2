#include "hcensus/errors.hpp"

namespace hcensus {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::VanishingNotJustified: return "vanishing-not-justified";
    case ErrorKind::NoIntegralLinkage: return "no-integral-linkage";
    case ErrorKind::Scope: return "scope";
  }
  return "unknown";
}

}  // namespace hcensus
