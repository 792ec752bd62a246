#include "error.hpp"

namespace modspec {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::Connectivity: return "connectivity";
    case ErrorKind::Degree: return "degree";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::Numeric: return "numeric-failure";
    case ErrorKind::Assumption: return "assumption-violation";
  }
  return "unknown";
}

}  // namespace modspec
