#include <algorithm>
#include <array>

#include "biembed/error.hpp"
#include "biembed/family.hpp"
#include "branching.hpp"
#include "text.hpp"

namespace biembed {

namespace {

// Vertices of a candidate current graph are zero-sum triples covering +-X.
struct CoverProblem {
  long long n = 0;
  std::vector<long long> values;             // the 2|X| signed currents
  std::vector<std::array<int, 3>> triples;   // indices into values, ascending
  std::vector<std::vector<int>> containing;  // triples through each value
  std::vector<int> index_of;                 // value -> index, -1 if absent

  explicit CoverProblem(const DifferenceSet& x) : n(x.modulus()) {
    for (int e : x.elements()) {
      values.push_back(e);
      values.push_back(n - e);
    }
    std::sort(values.begin(), values.end());
    index_of.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < values.size(); ++i) index_of[static_cast<std::size_t>(values[i])] = static_cast<int>(i);
    containing.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (std::size_t j = i + 1; j < values.size(); ++j) {
        const long long c = detail::mod(-values[i] - values[j], n);
        const int k = index_of[static_cast<std::size_t>(c)];
        if (k <= static_cast<int>(j)) continue;
        const int id = static_cast<int>(triples.size());
        triples.push_back({static_cast<int>(i), static_cast<int>(j), k});
        containing[i].push_back(id);
        containing[j].push_back(id);
        containing[static_cast<std::size_t>(k)].push_back(id);
      }
    }
  }

  int partner(int i) const {
    return index_of[static_cast<std::size_t>(detail::mod(-values[static_cast<std::size_t>(i)], n))];
  }
};

class CoverSearch {
 public:
  explicit CoverSearch(const CoverProblem& p) : p_(p), covered_(p.values.size(), false) {}

  // Uncovered value with the fewest usable triples, and those triples.
  int pick(std::vector<int>& options) const {
    int best = -1;
    std::vector<int> scratch;
    for (std::size_t i = 0; i < p_.values.size(); ++i) {
      if (covered_[i]) continue;
      scratch.clear();
      for (int t : p_.containing[i]) {
        if (usable(t)) scratch.push_back(t);
      }
      if (best == -1 || scratch.size() < options.size()) {
        best = static_cast<int>(i);
        options = scratch;
        if (options.empty()) break;
      }
    }
    return best;
  }

  detail::BranchResult<CurrentGraph> run(int first_triple, std::uint64_t cap) {
    cap_ = cap;
    detail::BranchResult<CurrentGraph> result;
    if (charge()) {
      place(first_triple);
      dfs();
    }
    result.value = std::move(found_);
    result.nodes = nodes_;
    result.capped = capped_;
    return result;
  }

 private:
  bool usable(int t) const {
    const auto& tr = p_.triples[static_cast<std::size_t>(t)];
    return !covered_[static_cast<std::size_t>(tr[0])] && !covered_[static_cast<std::size_t>(tr[1])] &&
           !covered_[static_cast<std::size_t>(tr[2])];
  }

  void place(int t) {
    for (int i : p_.triples[static_cast<std::size_t>(t)]) covered_[static_cast<std::size_t>(i)] = true;
    chosen_.push_back(t);
  }

  void unplace() {
    for (int i : p_.triples[static_cast<std::size_t>(chosen_.back())]) covered_[static_cast<std::size_t>(i)] = false;
    chosen_.pop_back();
  }

  bool charge() {
    if (nodes_ >= cap_) {
      capped_ = true;
      return false;
    }
    ++nodes_;
    return true;
  }

  bool dfs() {
    if (chosen_.size() * 3 == p_.values.size()) return orient();
    std::vector<int> options;
    pick(options);
    for (int t : options) {
      if (!charge()) return false;
      place(t);
      if (dfs()) return true;
      unplace();
      if (capped_) return false;
    }
    return false;
  }

  // Tries both cyclic orders of every triple except the first; each attempt costs one node.
  bool orient() {
    const std::size_t v = chosen_.size();
    const std::size_t k = p_.values.size();
    std::vector<int> vertex_of(k), slot(k);
    for (std::size_t a = 0; a < v; ++a) {
      const auto& tr = p_.triples[static_cast<std::size_t>(chosen_[a])];
      for (int j = 0; j < 3; ++j) {
        vertex_of[static_cast<std::size_t>(tr[static_cast<std::size_t>(j)])] = static_cast<int>(a);
        slot[static_cast<std::size_t>(tr[static_cast<std::size_t>(j)])] = j;
      }
    }
    std::vector<int> succ(k);
    std::vector<char> seen(k);
    const std::size_t free_bits = v - 1;
    std::uint64_t mask = 0;
    auto flipped = [&mask](std::size_t a) { return a > 0 && a - 1 < 64 && ((mask >> (a - 1)) & 1U); };
    for (mask = 0; free_bits >= 64 || mask < (std::uint64_t{1} << free_bits); ++mask) {
      if (!charge()) return false;
      for (std::size_t i = 0; i < k; ++i) {
        const int a = vertex_of[i];
        const int step = flipped(static_cast<std::size_t>(a)) ? 2 : 1;
        const auto& tr = p_.triples[static_cast<std::size_t>(chosen_[static_cast<std::size_t>(a)])];
        succ[i] = tr[static_cast<std::size_t>((slot[i] + step) % 3)];
      }
      // Along a face, dart t is followed by the successor of -t at the tail of -t.
      std::fill(seen.begin(), seen.end(), 0);
      std::size_t length = 0;
      for (int t = 0; !seen[static_cast<std::size_t>(t)]; t = succ[static_cast<std::size_t>(p_.partner(t))]) {
        seen[static_cast<std::size_t>(t)] = 1;
        ++length;
      }
      if (length != k) continue;
      std::vector<std::vector<long long>> rows;
      for (std::size_t a = 0; a < v; ++a) {
        const auto& tr = p_.triples[static_cast<std::size_t>(chosen_[a])];
        const bool flip = flipped(a);
        std::vector<long long> row{p_.values[static_cast<std::size_t>(tr[0])]};
        row.push_back(p_.values[static_cast<std::size_t>(tr[flip ? 2 : 1])]);
        row.push_back(p_.values[static_cast<std::size_t>(tr[flip ? 1 : 2])]);
        rows.push_back(std::move(row));
      }
      found_ = CurrentGraph::from_outgoing_currents(static_cast<int>(p_.n), rows);
      return true;
    }
    return false;
  }

  const CoverProblem& p_;
  std::vector<bool> covered_;
  std::vector<int> chosen_;
  std::optional<CurrentGraph> found_;
  std::uint64_t nodes_ = 0;
  std::uint64_t cap_ = 0;
  bool capped_ = false;
};

}  // namespace

CurrentGraphSearchResult search_current_graph(const DifferenceSet& x, const SearchOptions& options) {
  if (x.size() == 0 || x.size() % 3 != 0) {
    throw Error(ErrorCode::invalid_argument,
                "current set of size " + std::to_string(x.size()) + " cannot label a cubic graph");
  }
  CurrentGraphSearchResult result;
  // The face permutation has sign (-1)^|X| and must be a single even-length cycle.
  if (x.size() % 2 == 0) return result;
  for (int e : x.elements()) {
    if (2 * e == x.modulus()) return result;
  }

  CoverProblem problem(x);
  std::vector<int> roots;
  CoverSearch(problem).pick(roots);
  if (roots.empty()) return result;
  auto outcome = detail::run_branches<CurrentGraph>(roots.size(), options, [&](std::size_t i, std::uint64_t cap) {
    return CoverSearch(problem).run(roots[i], cap);
  });
  result.status = outcome.status;
  result.graph = std::move(outcome.value);
  result.nodes = outcome.nodes;
  return result;
}

PairSearchResult search_pair(const DifferenceSet& x1, const DifferenceSet& x2, const SearchOptions& options) {
  if (x1.modulus() != x2.modulus()) throw Error(ErrorCode::size_mismatch, "current sets use different moduli");
  if (x1.size() != x2.size()) throw Error(ErrorCode::invalid_argument, "current sets differ in size");
  const int n = x1.modulus();
  const int half = (n - 1) / 2;
  std::vector<int> all(x1.elements());
  all.insert(all.end(), x2.elements().begin(), x2.elements().end());
  std::sort(all.begin(), all.end());
  bool partition = static_cast<int>(all.size()) == half;
  for (int i = 0; partition && i < half; ++i) partition = all[static_cast<std::size_t>(i)] == i + 1;
  if (!partition) throw Error(ErrorCode::invalid_argument, "current sets must partition 1.." + std::to_string(half));

  PairSearchResult result;
  auto first = search_current_graph(x1, options);
  result.nodes = first.nodes;
  result.status = first.status;
  if (first.status != SearchStatus::found) return result;
  SearchOptions rest = options;
  rest.budget = options.budget - first.nodes;
  auto second = search_current_graph(x2, rest);
  result.nodes += second.nodes;
  result.status = second.status;
  if (second.status == SearchStatus::found) result.pair = CurrentPair{std::move(*first.graph), std::move(*second.graph)};
  return result;
}

}  // namespace biembed
