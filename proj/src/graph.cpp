#include "biembed/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "biembed/error.hpp"
#include "text.hpp"

namespace biembed {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "graph order must be nonnegative");
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& e : edges) {
    if (!g.add_edge(e.u, e.v)) {
      throw Error(ErrorCode::invalid_argument,
                  "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorCode::invalid_argument,
                "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
  }
}

bool Graph::add_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw Error(ErrorCode::invalid_argument, "self-loop at " + std::to_string(a));
  auto ab = static_cast<std::size_t>(a) * n_ + b;
  if (adj_[ab]) return false;
  adj_[ab] = true;
  adj_[static_cast<std::size_t>(b) * n_ + a] = true;
  ++edge_count_;
  return true;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  return adj_[static_cast<std::size_t>(a) * n_ + b];
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (Vertex w = 0; w < n_; ++w) {
    if (adj_[static_cast<std::size_t>(v) * n_ + w]) out.push_back(w);
  }
  return out;
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  auto row = adj_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(v) * n_);
  return static_cast<int>(std::count(row, row + n_, true));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (adj_[static_cast<std::size_t>(u) * n_ + v]) out.push_back({u, v});
    }
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && edge_count_ == other.edge_count_ && adj_ == other.adj_;
}

DifferenceSet::DifferenceSet(int modulus, std::vector<int> elements) : n_(modulus), xs_(std::move(elements)) {
  if (n_ < 1) throw Error(ErrorCode::invalid_argument, "modulus must be positive");
  std::sort(xs_.begin(), xs_.end());
  if (std::adjacent_find(xs_.begin(), xs_.end()) != xs_.end()) {
    throw Error(ErrorCode::invalid_argument, "difference set has repeated elements");
  }
  for (int x : xs_) {
    if (x < 1 || x > n_ / 2) {
      throw Error(ErrorCode::invalid_argument, "difference " + std::to_string(x) + " outside 1.." +
                                                   std::to_string(n_ / 2));
    }
    if (n_ % 2 == 0 && 2 * x == n_) {
      throw Error(ErrorCode::invalid_argument,
                  "difference n/2 = " + std::to_string(x) + " is not allowed for even n");
    }
  }
}

bool DifferenceSet::contains(int x) const { return std::binary_search(xs_.begin(), xs_.end(), x); }

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Vertex v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::invalid_argument, "images do not form a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Vertex> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::shift(int n, int k) {
  std::vector<Vertex> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = static_cast<Vertex>(detail::mod(i + k, n));
  return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw Error(ErrorCode::size_mismatch, "composing permutations of different sizes");
  std::vector<Vertex> images(images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = (*this)(other(static_cast<Vertex>(i)));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> images(images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[static_cast<std::size_t>(images_[i])] = static_cast<Vertex>(i);
  return Permutation(std::move(images));
}

Graph make_complete(int n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "complete graph needs n >= 1");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_circulant(const DifferenceSet& d) {
  const int n = d.modulus();
  Graph g(n);
  for (int x : d.elements()) {
    for (Vertex i = 0; i < n; ++i) g.add_edge(i, static_cast<Vertex>((i + x) % n));
  }
  return g;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

int component_count(const Graph& g) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int components = n;
  for (const auto& e : g.edges()) {
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

Graph apply_permutation(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) {
    throw Error(ErrorCode::size_mismatch, "permutation of size " + std::to_string(p.size()) +
                                              " applied to graph of order " + std::to_string(g.order()));
  }
  Graph out(g.order());
  for (const auto& e : g.edges()) out.add_edge(p(e.u), p(e.v));
  return out;
}

bool is_antimorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) throw Error(ErrorCode::size_mismatch, "permutation size differs from graph order");
  // Equivalent to apply_permutation(g, p) == complement(g) without building both.
  const auto total = static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(g.order() - 1) / 2;
  if (g.order() > 0 && 2 * g.size() != total) return false;
  for (const auto& e : g.edges()) {
    if (g.has_edge(p(e.u), p(e.v))) return false;
  }
  return true;
}

Graph parse_graph(std::string_view text) {
  auto lines = detail::split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && detail::trim(lines[i]).empty()) ++i;
  if (i == lines.size()) throw Error(ErrorCode::parse_error, "graph text is empty");
  auto header = detail::split_ws(lines[i]);
  std::optional<long long> n;
  if (header.size() == 1) n = detail::parse_int(header[0]);
  if (!n || *n < 0) throw Error(ErrorCode::parse_error, detail::line_ref(i) + ": expected vertex count");
  Graph g(static_cast<int>(*n));
  for (++i; i < lines.size(); ++i) {
    auto toks = detail::split_ws(lines[i]);
    if (toks.empty()) continue;
    std::optional<long long> u, v;
    if (toks.size() == 2) {
      u = detail::parse_int(toks[0]);
      v = detail::parse_int(toks[1]);
    }
    if (!u || !v) throw Error(ErrorCode::parse_error, detail::line_ref(i) + ": expected `u v`");
    if (*u < 0 || *v < 0 || *u >= *n || *v >= *n || *u == *v) {
      throw Error(ErrorCode::parse_error, detail::line_ref(i) + ": invalid edge");
    }
    if (!g.add_edge(static_cast<Vertex>(*u), static_cast<Vertex>(*v))) {
      throw Error(ErrorCode::parse_error, detail::line_ref(i) + ": duplicate edge");
    }
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace biembed
