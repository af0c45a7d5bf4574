#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biembed/embedding.hpp"
#include "biembed/graph.hpp"

namespace biembed {

/// Embedded graph (loops and parallel edges allowed) whose arcs carry currents
/// in Z_n. Edge e owns darts 2e (tail -> head, carrying `current`) and 2e+1
/// (head -> tail, carrying -current). The rotation at each vertex is the
/// materialized cyclic order of the darts leaving it.
class CurrentGraph {
 public:
  struct Edge {
    int tail = 0;
    int head = 0;
    long long current = 0;

    bool operator==(const Edge&) const = default;
  };

  CurrentGraph(int modulus, std::vector<Edge> edges, std::vector<std::vector<int>> rotation);

  /// Builds a graph from the outgoing currents listed at each vertex in
  /// rotation order. An edge joins the occurrence of x with the occurrence of
  /// -x; the arc carrying the value in 1..n/2 becomes the reference arc.
  static CurrentGraph from_outgoing_currents(int modulus, const std::vector<std::vector<long long>>& outgoing);

  int modulus() const noexcept { return n_; }
  int vertex_count() const noexcept { return static_cast<int>(rotation_.size()); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& rotation(int v) const { return rotation_.at(static_cast<std::size_t>(v)); }

  int dart_tail(int dart) const;
  int dart_head(int dart) const;
  /// Current on the dart, reduced to 0..n-1.
  long long dart_current(int dart) const;
  static int reverse(int dart) noexcept { return dart ^ 1; }

  /// Dart following `dart` along its face.
  int face_successor(int dart) const;

  /// Same embedded graph with edge e described from the other end.
  CurrentGraph with_edge_reversed(std::size_t e) const;

  /// Outgoing currents per vertex in rotation order.
  std::vector<std::vector<long long>> outgoing_currents() const;

  bool operator==(const CurrentGraph&) const = default;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> position_;  // index of each dart in its tail's rotation
};

struct KirchhoffViolation {
  int vertex = 0;
  long long inbound_sum = 0;  // reduced mod n, nonzero
};

/// One entry per property; an empty list means the property holds.
struct CurrentGraphReport {
  std::size_t face_count = 0;
  std::vector<std::pair<int, int>> non_cubic;           // (vertex, degree)
  std::vector<KirchhoffViolation> kirchhoff;
  std::vector<long long> repeated_currents;              // +-classes used more than once
  std::vector<long long> degenerate_currents;            // c with 2c = 0 or c = 0

  bool one_face() const noexcept { return face_count == 1; }
  bool cubic() const noexcept { return non_cubic.empty(); }
  bool kirchhoff_ok() const noexcept { return kirchhoff.empty(); }
  bool distinct_currents() const noexcept { return repeated_currents.empty() && degenerate_currents.empty(); }
  bool ok() const noexcept { return one_face() && cubic() && kirchhoff_ok() && distinct_currents(); }
  std::string summary() const;
};

CurrentGraphReport validate_current_graph(const CurrentGraph& cg);

/// Faces of the current graph's own embedding, as dart cycles.
std::vector<std::vector<int>> current_graph_faces(const CurrentGraph& cg);

using CircuitLog = std::vector<long long>;

/// Currents read along the single face, starting at the least dart in
/// (tail, head, current) order. Throws when there is more than one face.
CircuitLog circuit_log(const CurrentGraph& cg);

/// Currents as +-classes reported in 1..floor(n/2).
DifferenceSet current_set(const CurrentGraph& cg);

/// Derived embedding on Z_n: vertex k rotates as (k+d1, k+d2, ...) for the
/// circuit log (d1, d2, ...). Verifies that the result is a triangular
/// embedding of C(n, current set) before returning it.
RotationSystem derive_embedding(const CurrentGraph& cg);

/// Header `n <modulus>`, then `<v>: (<neighbor>,<signed current>) ...` per vertex.
CurrentGraph parse_current_graph(std::string_view text);
std::string serialize_current_graph(const CurrentGraph& cg);

}  // namespace biembed
