#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "biembed/embedding.hpp"

namespace biembed {

/// floor(sqrt(x)) for x >= 0, exact for every 64-bit input.
long long integer_sqrt(long long x);

/// ceil((n^2 - 13n + 24) / 24), clamped at 0. Requires n >= 3.
long long bigenus_lower_bound(long long n);

/// floor((13 + sqrt(73 + 96g)) / 2). Requires g >= 1; the sphere is not covered.
long long bichromatic_upper_bound(long long g);

/// 6v - 12 + 12g. Requires v >= 3.
long long biembedding_edge_bound(long long v, long long g);

/// True for n = 0, 13, 16, 21 (mod 24), where the bigenus bound needs no rounding.
bool bound_is_integral(long long n);

struct HalfReport {
  bool valid = false;
  std::size_t edges = 0;
  std::optional<long long> faces;
  std::optional<long long> genus;
  bool triangular = false;
  bool connected = false;
  int isolated_vertices = 0;

  bool operator==(const HalfReport&) const = default;
};

struct Stage {
  std::string name;
  bool passed = false;
  std::string detail;

  bool operator==(const Stage&) const = default;
};

/// Flat certificate shared by every verification entry point. Entry points
/// append their own stages; passed() is true only when all of them hold.
struct BiembeddingReport {
  std::string subject;
  long long n = 0;
  std::array<HalfReport, 2> halves{};
  std::size_t overlapping_edges = 0;
  std::size_t missing_edges = 0;
  bool partition_ok = false;
  long long bound_value = 0;
  bool achieves_bound = false;
  bool residue_integral = false;
  std::vector<Stage> stages;

  void add_stage(std::string name, bool passed, std::string detail = {});
  bool passed() const;
  const Stage* first_failure() const;

  bool operator==(const BiembeddingReport&) const = default;
};

/// Certifies that r1 and r2 embed complementary spanning subgraphs of K_n and
/// records genus, triangularity and whether the bigenus bound is met.
BiembeddingReport verify_biembedding(const RotationSystem& r1, const RotationSystem& r2, int n);

/// Key/value text with a fixed field order.
std::string serialize_report(const BiembeddingReport& report);

}  // namespace biembed
