#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biembed/graph.hpp"

namespace biembed {

/// Directed arc tail -> head; each edge contributes two.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  Arc reversed() const { return {head, tail}; }
  auto operator<=>(const Arc&) const = default;
};

/// Cyclic order of neighbors at every vertex. The underlying graph is implied
/// by the rows; validate_rotation() decides whether the rows are consistent.
class RotationSystem {
 public:
  RotationSystem() = default;
  explicit RotationSystem(std::vector<std::vector<Vertex>> rows);

  int order() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<Vertex>& rotation(Vertex v) const { return rows_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::vector<Vertex>>& rows() const noexcept { return rows_; }
  std::size_t arc_count() const noexcept;

  /// Throws Error(validation_failed) when the rows are inconsistent.
  Graph graph() const;

  /// Every rotation read backwards; the mirror-image embedding.
  RotationSystem reversed() const;

  /// Vertex v becomes p(v), both as a row index and inside every row.
  RotationSystem relabeled(const Permutation& p) const;

  bool operator==(const RotationSystem&) const = default;

 private:
  std::vector<std::vector<Vertex>> rows_;
};

enum class ViolationKind {
  vertex_out_of_range,
  self_in_rotation,
  duplicate_neighbor,
  missing_arc,       // w is listed at v but v is not listed at w
  non_neighbor,      // listed at v, yet not adjacent in the expected graph
  missing_neighbor,  // adjacent in the expected graph, yet absent from the row
};

const char* to_string(ViolationKind kind) noexcept;

struct RotationViolation {
  Vertex vertex = 0;
  Vertex neighbor = 0;
  ViolationKind kind = ViolationKind::missing_arc;

  std::string describe() const;
  bool operator==(const RotationViolation&) const = default;
};

struct RotationReport {
  std::vector<RotationViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::string summary() const;
};

/// Self-consistency: each row lists distinct in-range vertices other than the
/// owner, and every arc v->w has its reverse w->v.
RotationReport validate_rotation(const RotationSystem& r);

/// Same, plus every row must be exactly the neighborhood in `expected`.
RotationReport validate_rotation(const RotationSystem& r, const Graph& expected);

using Face = std::vector<Arc>;

/// Faces start at their least arc and are sorted by that arc.
struct FaceSet {
  std::vector<Face> faces;

  std::size_t size() const noexcept { return faces.size(); }
  std::vector<std::size_t> lengths() const;
  bool operator==(const FaceSet&) const = default;
};

/// Cycles of a permutation on 0..size-1, each starting at its least element,
/// listed in order of that element. Face tracing for both rotation systems and
/// current graphs reduces to this.
std::vector<std::vector<int>> permutation_cycles(std::span<const int> next);

/// Face tracing: after the arc u->v the walk continues along v->w where w
/// follows u in the rotation at v.
FaceSet trace_faces(const RotationSystem& r);

bool is_triangular(const FaceSet& fs);

struct SurfaceStats {
  long long vertices = 0;
  long long edges = 0;
  long long faces = 0;
  long long genus = 0;

  long long euler_characteristic() const noexcept { return vertices - edges + faces; }
  bool operator==(const SurfaceStats&) const = default;
};

/// Throws Error(validation_failed) for inconsistent rows and
/// Error(disconnected) when the graph has more than one component.
SurfaceStats surface_stats(const RotationSystem& r);
SurfaceStats surface_stats(const RotationSystem& r, const FaceSet& faces);

/// Rows `<v>. <n1> <n2> ...`, one per vertex 0..n-1 in any order.
RotationSystem parse_rotation(std::string_view text);
std::string serialize_rotation(const RotationSystem& r);

}  // namespace biembed
