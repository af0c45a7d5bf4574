#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "biembed/embedding.hpp"
#include "biembed/graph.hpp"
#include "biembed/search.hpp"
#include "biembed/verifier.hpp"

namespace biembed {

enum class AntimorphismKind {
  full_cycle,              // (0 1 ... n-1)
  cycle_plus_fixed_point,  // (0 1 ... n-2)(n-1)
};

struct AntimorphismForm {
  AntimorphismKind kind = AntimorphismKind::full_cycle;
  int n = 0;
};

Permutation standard_antimorphism(const AntimorphismForm& form);

/// Grows the unique graph G with N(0) = seed such that the standard
/// antimorphism maps G onto its complement. Throws Error(no_such_graph) when
/// n(n-1)/2 is odd and Error(inconsistent_seed) when propagation contradicts
/// itself.
Graph build_from_seed(const AntimorphismForm& form, const std::vector<Vertex>& seed);

/// Full certificate for a rotation table of a self-complementary graph: rotation validity,
/// self-complementarity, triangularity, genus, and the doubled biembedding of
/// K_n meeting the bigenus bound.
BiembeddingReport verify_table(const RotationSystem& r, const AntimorphismForm& form);

/// The second embedding is the first with every label v replaced by p(v).
std::pair<RotationSystem, RotationSystem> biembed_from_selfcomp(const RotationSystem& r, const Permutation& p);

struct TriangularSearchResult {
  SearchStatus status = SearchStatus::infeasible;
  std::optional<RotationSystem> rotation;
  std::uint64_t nodes = 0;
};

/// Backtracking over partial rotations, one triangular face at a time.
TriangularSearchResult search_triangular(const Graph& g, const SearchOptions& options = {});

}  // namespace biembed
