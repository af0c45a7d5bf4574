#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace biembed {

using Vertex = int;

/// Unordered vertex pair stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws on self-loops, duplicates and out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edge_count_; }

  /// Returns false if the edge was already present.
  bool add_edge(Vertex a, Vertex b);
  bool has_edge(Vertex a, Vertex b) const;

  std::vector<Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;

  /// Sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<bool> adj_;
};

/// Difference set X for a circulant C(n, X); every element lies in 1..floor(n/2),
/// and n/2 itself is rejected for even n.
class DifferenceSet {
 public:
  DifferenceSet(int modulus, std::vector<int> elements);

  int modulus() const noexcept { return n_; }
  const std::vector<int>& elements() const noexcept { return xs_; }
  std::size_t size() const noexcept { return xs_.size(); }
  bool contains(int x) const;

  bool operator==(const DifferenceSet&) const = default;

 private:
  int n_;
  std::vector<int> xs_;
};

class Permutation {
 public:
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(int n);
  /// i -> i+k mod n.
  static Permutation shift(int n, int k);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  Vertex operator()(Vertex v) const { return images_.at(static_cast<std::size_t>(v)); }
  const std::vector<Vertex>& images() const noexcept { return images_; }

  /// (this * other)(v) = this(other(v)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Vertex> images_;
};

Graph make_complete(int n);
Graph make_circulant(const DifferenceSet& d);
Graph complement(const Graph& g);
bool is_connected(const Graph& g);
int component_count(const Graph& g);
Graph apply_permutation(const Graph& g, const Permutation& p);
bool is_antimorphism(const Graph& g, const Permutation& p);

/// Text format: first line `n`, then one `u v` line per edge in ascending order.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

}  // namespace biembed
