#include "biembed/error.hpp"

namespace biembed {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::size_mismatch: return "size mismatch";
    case ErrorCode::parse_error: return "parse error";
    case ErrorCode::io_error: return "i/o error";
    case ErrorCode::validation_failed: return "validation failed";
    case ErrorCode::disconnected: return "disconnected";
    case ErrorCode::inconsistent_seed: return "inconsistent seed";
    case ErrorCode::no_such_graph: return "no such graph";
    case ErrorCode::template_missing: return "template missing";
    case ErrorCode::budget_exhausted: return "budget exhausted";
  }
  return "unknown error";
}

}  // namespace biembed
