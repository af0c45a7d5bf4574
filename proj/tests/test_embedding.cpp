#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "biembed/embedding.hpp"
#include "biembed/error.hpp"
#include "test_fixtures.hpp"

using namespace biembed;

namespace {

// Independent tracer: explicit visited set over arcs, one arc at a time.
std::multiset<std::size_t> oracle_face_lengths(const std::vector<std::vector<int>>& rows) {
  std::set<std::pair<int, int>> visited;
  std::multiset<std::size_t> lengths;
  for (int u = 0; u < static_cast<int>(rows.size()); ++u) {
    for (int v : rows[static_cast<std::size_t>(u)]) {
      if (visited.count({u, v})) continue;
      std::size_t len = 0;
      int a = u, b = v;
      while (!visited.count({a, b})) {
        visited.insert({a, b});
        ++len;
        const auto& rot = rows[static_cast<std::size_t>(b)];
        auto it = std::find(rot.begin(), rot.end(), a);
        const int next = (it + 1 == rot.end()) ? rot.front() : *(it + 1);
        a = b;
        b = next;
      }
      lengths.insert(len);
    }
  }
  return lengths;
}

std::multiset<std::size_t> lengths_of(const FaceSet& fs) {
  auto l = fs.lengths();
  return {l.begin(), l.end()};
}

// Calls visit on every rotation system of g, fixing the first neighbor of each row.
void for_each_rotation(const Graph& g, const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(g.order()));
  std::function<void(int)> rec = [&](int v) {
    if (v == g.order()) {
      visit(rows);
      return;
    }
    auto nb = g.neighbors(v);
    if (nb.empty()) {
      rows[static_cast<std::size_t>(v)].clear();
      rec(v + 1);
      return;
    }
    std::vector<int> rest(nb.begin() + 1, nb.end());
    do {
      rows[static_cast<std::size_t>(v)] = {nb.front()};
      rows[static_cast<std::size_t>(v)].insert(rows[static_cast<std::size_t>(v)].end(), rest.begin(), rest.end());
      rec(v + 1);
    } while (std::next_permutation(rest.begin(), rest.end()));
  };
  rec(0);
}

Graph random_connected_graph(int n, std::mt19937& rng) {
  for (;;) {
    std::bernoulli_distribution coin(0.5);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    if (g.size() > 0 && is_connected(g)) return g;
  }
}

// Random r-regular simple graph by the configuration model with rejection.
Graph random_regular_graph(int n, int r, std::mt19937& rng) {
  for (;;) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < r; ++k) points.push_back(v);
    std::shuffle(points.begin(), points.end(), rng);
    Graph g(n);
    bool ok = true;
    for (std::size_t i = 0; ok && i < points.size(); i += 2) {
      if (points[i] == points[i + 1] || g.has_edge(points[i], points[i + 1])) ok = false;
      else g.add_edge(points[i], points[i + 1]);
    }
    if (ok && is_connected(g)) return g;
  }
}

RotationSystem random_rotation(const Graph& g, std::mt19937& rng) {
  std::vector<std::vector<int>> rows;
  for (int v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    std::shuffle(nb.begin(), nb.end(), rng);
    rows.push_back(nb);
  }
  return RotationSystem(rows);
}

void check_invariants(const RotationSystem& r) {
  auto faces = trace_faces(r);
  std::multiset<std::pair<int, int>> arcs;
  for (const auto& f : faces.faces) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      arcs.insert({f[i].tail, f[i].head});
      CHECK(f[i].head == f[(i + 1) % f.size()].tail);
    }
  }
  std::multiset<std::pair<int, int>> expected;
  for (int v = 0; v < r.order(); ++v)
    for (int w : r.rotation(v)) expected.insert({v, w});
  CHECK(arcs == expected);

  auto stats = surface_stats(r, faces);
  CHECK(stats.euler_characteristic() % 2 == 0);
  CHECK(stats.genus >= 0);
  CHECK(stats.euler_characteristic() == 2 - 2 * stats.genus);
  CHECK(is_triangular(faces) == (3 * stats.faces == 2 * stats.edges));

  auto mirror = r.reversed();
  auto mirror_faces = trace_faces(mirror);
  CHECK(mirror_faces.size() == faces.size());
  CHECK(lengths_of(mirror_faces) == lengths_of(faces));
  CHECK(surface_stats(mirror).genus == stats.genus);
}

std::vector<std::vector<int>> ascending_k4() { return {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}; }

}  // namespace

TEST_CASE("spherical triangle") {
  RotationSystem r({{1, 2}, {2, 0}, {0, 1}});
  auto faces = trace_faces(r);
  CHECK(faces.size() == 2);
  CHECK(is_triangular(faces));
  CHECK(surface_stats(r) == SurfaceStats{3, 3, 2, 0});
}

TEST_CASE("ascending K4 embeds in the torus with faces of length 4 and 8") {
  RotationSystem r(ascending_k4());
  auto faces = trace_faces(r);
  auto lengths = faces.lengths();
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<std::size_t>{4, 8});
  CHECK_FALSE(is_triangular(faces));
  CHECK(surface_stats(r).genus == 1);
  // after 0->1 comes 1->2, since 2 follows 0 at vertex 1
  const auto& first = faces.faces.front();
  CHECK(first[0] == Arc{0, 1});
  CHECK(first[1] == Arc{1, 2});
}

TEST_CASE("faces are canonical") {
  RotationSystem r(ascending_k4());
  auto faces = trace_faces(r);
  for (const auto& f : faces.faces) CHECK(*std::min_element(f.begin(), f.end()) == f.front());
  for (std::size_t i = 1; i < faces.size(); ++i) CHECK(faces.faces[i - 1].front() < faces.faces[i].front());
  CHECK(trace_faces(RotationSystem(ascending_k4())) == faces);
}

TEST_CASE("tracer matches the brute-force oracle on all 1296 rotation systems of K4") {
  auto k4 = make_complete(4);
  std::vector<std::vector<int>> rows(4);
  std::size_t count = 0;
  std::function<void(int)> rec = [&](int v) {
    if (v == 4) {
      ++count;
      RotationSystem r(rows);
      CHECK(lengths_of(trace_faces(r)) == oracle_face_lengths(rows));
      return;
    }
    auto nb = k4.neighbors(v);
    do {
      rows[static_cast<std::size_t>(v)] = nb;
      rec(v + 1);
    } while (std::next_permutation(nb.begin(), nb.end()));
  };
  rec(0);
  CHECK(count == 1296);
}

TEST_CASE("tracer matches the oracle on every graph with at most 6 edges on 5 vertices") {
  std::vector<Edge> pairs;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) pairs.push_back({u, v});
  std::size_t systems = 0;
  for (unsigned mask = 1; mask < (1U << pairs.size()); ++mask) {
    if (__builtin_popcount(mask) > 6) continue;
    Graph g(5);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask & (1U << i)) g.add_edge(pairs[i].u, pairs[i].v);
    for_each_rotation(g, [&](const std::vector<std::vector<int>>& rows) {
      ++systems;
      RotationSystem r(rows);
      REQUIRE(lengths_of(trace_faces(r)) == oracle_face_lengths(rows));
    });
  }
  CHECK(systems > 1000);
}

TEST_CASE("at least 1000 random rotation systems on at most 8 vertices") {
  std::mt19937 rng(20240611);
  int checked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 2 + trial % 7;
    check_invariants(random_rotation(random_connected_graph(n, rng), rng));
    ++checked;
  }
  for (int trial = 0; trial < 250; ++trial) {
    check_invariants(random_rotation(random_regular_graph(trial % 2 == 0 ? 6 : 8, 3, rng), rng));
    check_invariants(random_rotation(random_regular_graph(trial % 3 == 0 ? 5 : 7, 4, rng), rng));
    checked += 2;
  }
  CHECK(checked >= 1000);
}

TEST_CASE("empty face set is triangular") { CHECK(is_triangular(FaceSet{})); }

TEST_CASE("shipped rotation tables") {
  auto t16 = load_table(16);
  CHECK(validate_rotation(t16).ok());
  CHECK(t16.rotation(0) == std::vector<Vertex>{1, 9, 5, 3});
  auto f16 = trace_faces(t16);
  CHECK(f16.size() == 40);
  CHECK(is_triangular(f16));
  CHECK(surface_stats(t16) == SurfaceStats{16, 60, 40, 3});
  CHECK(surface_stats(load_table(21)) == SurfaceStats{21, 105, 70, 8});
  CHECK(surface_stats(load_table(24)) == SurfaceStats{24, 138, 92, 12});
}

TEST_CASE("rotation validation reports each violation") {
  auto self = validate_rotation(RotationSystem({{0, 1}, {0}}));
  REQUIRE_FALSE(self.ok());
  CHECK(self.violations.front().kind == ViolationKind::self_in_rotation);
  CHECK(self.violations.front().vertex == 0);
  CHECK(std::string(to_string(ViolationKind::self_in_rotation)) == "self in rotation");

  auto missing = validate_rotation(RotationSystem({{1, 2}, {0, 2}, {1}}));
  REQUIRE_FALSE(missing.ok());
  CHECK(missing.violations.front().kind == ViolationKind::missing_arc);
  CHECK(std::string(to_string(ViolationKind::missing_arc)) == "missing arc");

  auto dup = validate_rotation(RotationSystem({{1, 1}, {0}}));
  CHECK_FALSE(dup.ok());
  CHECK(std::any_of(dup.violations.begin(), dup.violations.end(),
                    [](const RotationViolation& v) { return v.kind == ViolationKind::duplicate_neighbor; }));

  CHECK_FALSE(validate_rotation(RotationSystem({{5}, {0}})).ok());

  auto k4 = make_complete(4);
  RotationSystem partial({{1, 2}, {0, 2, 3}, {0, 1, 3}, {1, 2}});
  CHECK(validate_rotation(partial).ok());
  auto against = validate_rotation(partial, k4);
  CHECK_FALSE(against.ok());
  CHECK(std::any_of(against.violations.begin(), against.violations.end(),
                    [](const RotationViolation& v) { return v.kind == ViolationKind::missing_neighbor; }));
  CHECK(validate_rotation(RotationSystem(ascending_k4()), k4).ok());
  CHECK_FALSE(validate_rotation(RotationSystem(ascending_k4()), Graph(4)).ok());
}

TEST_CASE("invalid or disconnected embeddings are rejected") {
  CHECK_THROWS_AS(trace_faces(RotationSystem({{1, 2}, {0, 2}, {1}})), Error);
  RotationSystem two_edges({{1}, {0}, {3}, {2}});
  try {
    surface_stats(two_edges);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::disconnected);
    CHECK(std::string(e.what()).find("genus undefined for disconnected embedding") != std::string::npos);
  }
}

TEST_CASE("rotation file format") {
  const auto t16 = read_fixture("table16.rot");
  CHECK(t16.substr(0, t16.find('\n')) == "0. 1 9 5 3");
  CHECK(parse_rotation(t16).rotation(0) == std::vector<Vertex>{1, 9, 5, 3});

  const auto text = read_fixture("table24.rot");
  auto t24 = parse_rotation(text);
  CHECK(parse_rotation(serialize_rotation(t24)) == t24);
  CHECK(serialize_rotation(t24) == text);

  CHECK(parse_rotation("1.   2 0\n0. 1 2\n2.\t0   1\n\n\n") == RotationSystem({{1, 2}, {2, 0}, {0, 1}}));
  CHECK_THROWS_AS(parse_rotation("0. 1 2\n0. 2 1\n1. 0 2\n2. 0 1\n"), Error);
  CHECK_THROWS_AS(parse_rotation("0 1 2\n"), Error);
  CHECK_THROWS_AS(parse_rotation("0. 1 x\n1. 0\n"), Error);
  CHECK_THROWS_AS(parse_rotation("0. 1 2\n1. 0 2\n2. 1\n"), Error);
  CHECK_THROWS_AS(parse_rotation("0. 1\n2. 0\n"), Error);
}

TEST_CASE("relabeling") {
  RotationSystem r(ascending_k4());
  auto p = Permutation::shift(4, 1);
  auto moved = r.relabeled(p);
  CHECK(moved.rotation(1) == std::vector<Vertex>{2, 3, 0});
  CHECK(lengths_of(trace_faces(moved)) == lengths_of(trace_faces(r)));
  CHECK_THROWS_AS(r.relabeled(Permutation::identity(3)), Error);
}
