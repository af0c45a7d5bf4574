#pragma once

#include <cstdint>

namespace biembed {

/// Shared knobs for the backtracking searches. A search splits its root node
/// into branches; `threads > 1` explores them concurrently, and the reported
/// result is always the one the single-threaded canonical order would find
/// within the same node budget.
struct SearchOptions {
  std::uint64_t budget = 1'000'000;
  unsigned threads = 1;
};

enum class SearchStatus {
  found,
  infeasible,        // ruled out before or during exhaustive search
  budget_exhausted,  // stopped early; says nothing about existence
};

const char* to_string(SearchStatus status) noexcept;

}  // namespace biembed
