#pragma once

#include <stdexcept>
#include <string>

namespace biembed {

enum class ErrorCode {
  invalid_argument,
  size_mismatch,
  parse_error,
  io_error,
  validation_failed,
  disconnected,
  inconsistent_seed,
  no_such_graph,
  template_missing,
  budget_exhausted,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the core library carries one of the codes above so
/// the C layer can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace biembed
