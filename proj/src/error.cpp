#include "swfold/error.hpp"

namespace swfold {

const char* error_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::structural: return "STRUCTURAL";
    case ErrorKind::domain: return "DOMAIN";
    case ErrorKind::syntax: return "SYNTAX";
    case ErrorKind::name: return "NAME";
    case ErrorKind::lookup: return "LOOKUP";
    case ErrorKind::hypothesis: return "HYPOTHESIS";
    case ErrorKind::not_a_knot: return "NOT_A_KNOT";
    case ErrorKind::overflow: return "OVERFLOW";
    case ErrorKind::schema: return "SCHEMA";
  }
  return "UNKNOWN";
}

int exit_status(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain:
    case ErrorKind::hypothesis:
    case ErrorKind::not_a_knot:
    case ErrorKind::overflow:
      return 1;
    default:
      return 2;
  }
}

}  // namespace swfold
