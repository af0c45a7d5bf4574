#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "biembed/search.hpp"

namespace biembed::detail {

template <class T>
struct BranchResult {
  std::optional<T> value;
  std::uint64_t nodes = 0;
  bool capped = false;  // stopped because the node cap was reached
};

template <class T>
struct BranchOutcome {
  std::optional<T> value;
  std::uint64_t nodes = 0;
  SearchStatus status = SearchStatus::infeasible;
};

/// Runs root branches in canonical order with a shared node budget. Each
/// branch is a pure function of (index, cap) whose exploration is a prefix of
/// the same exploration under a larger cap; that property lets the parallel
/// mode replay the sequential accounting exactly.
template <class T>
BranchOutcome<T> run_branches(std::size_t branch_count, const SearchOptions& options,
                              const std::function<BranchResult<T>(std::size_t, std::uint64_t)>& branch) {
  BranchOutcome<T> outcome;
  std::uint64_t remaining = options.budget;
  auto settle = [&](BranchResult<T>& r) -> bool {
    if (r.value && r.nodes <= remaining) {
      outcome.value = std::move(r.value);
      outcome.nodes += r.nodes;
      outcome.status = SearchStatus::found;
      return true;
    }
    if (r.capped || r.nodes > remaining) {
      outcome.nodes += remaining;
      remaining = 0;
      outcome.status = SearchStatus::budget_exhausted;
      return true;
    }
    outcome.nodes += r.nodes;
    remaining -= r.nodes;
    return false;
  };

  if (options.threads <= 1 || branch_count <= 1) {
    for (std::size_t i = 0; i < branch_count; ++i) {
      auto r = branch(i, remaining);
      if (settle(r)) return outcome;
    }
    return outcome;
  }

  std::vector<BranchResult<T>> results(branch_count);
  std::size_t next = 0;
  std::mutex lock;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> guard(lock);
        if (next == branch_count) return;
        i = next++;
      }
      results[i] = branch(i, options.budget);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(options.threads, branch_count); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& r : results)
    if (settle(r)) return outcome;
  return outcome;
}

}  // namespace biembed::detail
