#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biembed/current_graph.hpp"
#include "biembed/graph.hpp"
#include "biembed/search.hpp"
#include "biembed/verifier.hpp"

namespace biembed {

/// Family member over Z_n with n = 24s+13.
struct FamilyParameter {
  int s = 1;

  /// Throws Error(invalid_argument) for s < 1.
  static FamilyParameter of(long long s);
  int modulus() const noexcept { return 24 * s + 13; }
};

/// 24s^2 + 13s + 1.
long long family_genus(const FamilyParameter& p);

/// Labels 1..12s+6 split by residue mod 6, with 1 and 6 moved to the first
/// set and 6s+2, 12s+5 moved to the second.
std::pair<DifferenceSet, DifferenceSet> current_sets(const FamilyParameter& p);

struct CurrentPair {
  CurrentGraph first;
  CurrentGraph second;
};

/// Parameterized current-graph pair. Statements, one per line:
///   modulus <expr>
///   graph first|second
///   vertex <expr> <expr> ...        outgoing currents in rotation order
///   for m <from> <to> [even|odd] ... end
/// Expressions use integers, s, m, + - * and parentheses; "12s" means 12*s.
class FamilyTemplate {
 public:
  static FamilyTemplate parse(std::string_view text);
  static FamilyTemplate load(const std::filesystem::path& path);

  CurrentPair instantiate(const FamilyParameter& p) const;

  struct Statement;

 private:
  std::string modulus_;
  std::vector<std::vector<Statement>> graphs_;
};

struct FamilyTemplate::Statement {
  std::vector<std::string> currents;
  bool loop = false;
  std::string from, to;
  int parity = -1;  // -1 any, 0 even, 1 odd
  std::vector<Statement> body;
  int line = 0;
};

/// Path of the shipped template; BIEMBED_FAMILY_TEMPLATE overrides it.
std::filesystem::path default_template_path();

/// Throws Error(template_missing) when no template file exists.
CurrentPair build_pair(const FamilyParameter& p, const std::filesystem::path& template_path = default_template_path());

/// Derives both halves and certifies the biembedding of K_n.
BiembeddingReport verify_pair(const FamilyParameter& p, const CurrentPair& pair);
BiembeddingReport verify_family(const FamilyParameter& p,
                                const std::filesystem::path& template_path = default_template_path());

struct CurrentGraphSearchResult {
  SearchStatus status = SearchStatus::infeasible;
  std::optional<CurrentGraph> graph;
  std::uint64_t nodes = 0;
};

/// One-face cubic current graph over Z_n whose currents are exactly +-X.
/// Covers +-X by zero-sum triples, then tries every orientation of the
/// triples. Throws Error(invalid_argument) when |X| is not divisible by 3.
CurrentGraphSearchResult search_current_graph(const DifferenceSet& x, const SearchOptions& options = {});

struct PairSearchResult {
  SearchStatus status = SearchStatus::infeasible;
  std::optional<CurrentPair> pair;
  std::uint64_t nodes = 0;
};

/// Searches both halves with one shared budget. The sets must partition
/// 1..n/2 and have equal sizes divisible by 3.
PairSearchResult search_pair(const DifferenceSet& x1, const DifferenceSet& x2, const SearchOptions& options = {});

}  // namespace biembed
