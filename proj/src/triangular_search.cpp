#include <algorithm>
#include <numeric>

#include "biembed/selfcomp.hpp"
#include "branching.hpp"

namespace biembed {

const char* to_string(SearchStatus status) noexcept {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::infeasible: return "infeasible";
    case SearchStatus::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

namespace {

// Partial rotation: succ(v, u) = w records that w follows u around v.
class PartialRotation {
 public:
  explicit PartialRotation(const Graph& g) : g_(g), n_(g.order()) {
    const auto cells = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
    succ_.assign(cells, -1);
    pred_.assign(cells, -1);
    degree_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) degree_[static_cast<std::size_t>(v)] = g.degree(v);
  }

  int succ(Vertex v, Vertex u) const { return succ_[at(v, u)]; }

  // Setting succ(x, a) = b must not close a cycle shorter than deg(x).
  bool can_link(Vertex x, Vertex a, Vertex b) const {
    if (succ_[at(x, a)] != -1 || pred_[at(x, b)] != -1) return false;
    int len = 1;
    for (int c = b; succ_[at(x, c)] != -1;) {
      c = succ_[at(x, c)];
      ++len;
      if (c == a) return len == degree_[static_cast<std::size_t>(x)];
    }
    return true;
  }

  // Face (u, v, w) traversed u -> v -> w -> u.
  bool can_place(Vertex u, Vertex v, Vertex w) const {
    return can_link(v, u, w) && can_link(w, v, u) && can_link(u, w, v);
  }

  void place(Vertex u, Vertex v, Vertex w) {
    link(v, u, w);
    link(w, v, u);
    link(u, w, v);
  }

  void unplace(Vertex u, Vertex v, Vertex w) {
    unlink(v, u, w);
    unlink(w, v, u);
    unlink(u, w, v);
  }

  RotationSystem materialize() const {
    std::vector<std::vector<Vertex>> rows(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) {
      auto nb = g_.neighbors(v);
      if (nb.empty()) continue;
      auto& row = rows[static_cast<std::size_t>(v)];
      for (Vertex c = nb.front(); row.size() < nb.size(); c = succ(v, c)) row.push_back(c);
    }
    return RotationSystem(std::move(rows));
  }

 private:
  std::size_t at(Vertex v, Vertex u) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(u);
  }
  void link(Vertex x, Vertex a, Vertex b) {
    succ_[at(x, a)] = b;
    pred_[at(x, b)] = a;
  }
  void unlink(Vertex x, Vertex a, Vertex b) {
    succ_[at(x, a)] = -1;
    pred_[at(x, b)] = -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> succ_;
  std::vector<int> pred_;
  std::vector<int> degree_;
};

struct Arc {
  Vertex tail;
  Vertex head;
};

class TriangularSearch {
 public:
  explicit TriangularSearch(const Graph& g) : g_(g), state_(g) {
    const int n = g.order();
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    for (Vertex v : order) {
      for (Vertex u : g.neighbors(v)) arcs_.push_back({u, v});
    }
    common_.resize(arcs_.size());
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      for (Vertex w : g.neighbors(arcs_[i].head)) {
        if (w != arcs_[i].tail && g.has_edge(arcs_[i].tail, w)) common_[i].push_back(w);
      }
    }
    // Every arc lies on exactly one face, and each face covers three arcs.
    faces_needed_ = arcs_.size() / 3;
  }

  // Arc whose face is still open with the fewest completions, and those completions.
  std::size_t pick(std::vector<Vertex>& options) const {
    std::size_t best = arcs_.size();
    std::vector<Vertex> scratch;
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      const auto [u, v] = arcs_[i];
      if (state_.succ(v, u) != -1) continue;
      scratch.clear();
      for (Vertex w : common_[i]) {
        if (state_.can_place(u, v, w)) scratch.push_back(w);
      }
      if (best == arcs_.size() || scratch.size() < options.size()) {
        best = i;
        options = scratch;
        if (options.empty()) break;
      }
    }
    return best;
  }

  std::vector<Vertex> root_options() {
    std::vector<Vertex> options;
    root_ = pick(options);
    return options;
  }

  detail::BranchResult<RotationSystem> run_branch(Vertex w, std::uint64_t cap) {
    detail::BranchResult<RotationSystem> result;
    nodes_ = 0;
    cap_ = cap;
    capped_ = false;
    const auto [u, v] = arcs_[root_];
    if (!charge()) {
      result.capped = true;
      return result;
    }
    state_.place(u, v, w);
    if (dfs(1)) result.value = state_.materialize();
    state_.unplace(u, v, w);
    result.nodes = nodes_;
    result.capped = capped_;
    return result;
  }

 private:
  bool charge() {
    if (nodes_ >= cap_) {
      capped_ = true;
      return false;
    }
    ++nodes_;
    return true;
  }

  bool dfs(std::size_t placed) {
    if (placed == faces_needed_) return true;
    std::vector<Vertex> options;
    const std::size_t i = pick(options);
    const auto [u, v] = arcs_[i];
    for (Vertex w : options) {
      if (!charge()) return false;
      state_.place(u, v, w);
      const bool done = dfs(placed + 1);
      if (done) return true;
      state_.unplace(u, v, w);
      if (capped_) return false;
    }
    return false;
  }

  const Graph& g_;
  PartialRotation state_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> common_;
  std::size_t faces_needed_ = 0;
  std::size_t root_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t cap_ = 0;
  bool capped_ = false;
};

}  // namespace

TriangularSearchResult search_triangular(const Graph& g, const SearchOptions& options) {
  TriangularSearchResult result;
  const auto arcs = 2 * g.size();
  if (g.size() == 0 || arcs % 3 != 0) return result;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) return result;
  }

  TriangularSearch root(g);
  const auto first = root.root_options();
  if (first.empty()) return result;
  auto outcome = detail::run_branches<RotationSystem>(
      first.size(), options, [&](std::size_t i, std::uint64_t cap) {
        TriangularSearch local(g);
        local.root_options();
        return local.run_branch(first[i], cap);
      });
  result.status = outcome.status;
  result.rotation = std::move(outcome.value);
  result.nodes = outcome.nodes;
  if (result.status == SearchStatus::found) {
    auto faces = trace_faces(*result.rotation);
    if (!is_triangular(faces)) result.status = SearchStatus::infeasible;
  }
  return result;
}

}  // namespace biembed
