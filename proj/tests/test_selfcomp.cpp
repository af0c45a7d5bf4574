#include <doctest.h>

#include <algorithm>
#include <random>

#include "biembed/error.hpp"
#include "biembed/selfcomp.hpp"
#include "test_fixtures.hpp"

using namespace biembed;

namespace {

const AntimorphismForm kForm16{AntimorphismKind::full_cycle, 16};
const AntimorphismForm kForm21{AntimorphismKind::cycle_plus_fixed_point, 21};
const AntimorphismForm kForm24{AntimorphismKind::full_cycle, 24};

std::vector<std::size_t> sorted_lengths(const RotationSystem& r) {
  auto l = trace_faces(r).lengths();
  std::sort(l.begin(), l.end());
  return l;
}

}  // namespace

TEST_CASE("standard antimorphisms") {
  auto s16 = standard_antimorphism(kForm16);
  CHECK(s16 == Permutation::shift(16, 1));
  auto s21 = standard_antimorphism(kForm21);
  CHECK(s21(19) == 0);
  CHECK(s21(20) == 20);
  CHECK(s21(4) == 5);
  CHECK(standard_antimorphism({AntimorphismKind::full_cycle, 2}) == Permutation({1, 0}));
  CHECK_THROWS_AS(standard_antimorphism({AntimorphismKind::full_cycle, 1}), Error);
}

TEST_CASE("seeded construction reproduces the tables") {
  auto g16 = build_from_seed(kForm16, {1, 9, 5, 3});
  CHECK(g16.size() == 60);
  CHECK(g16 == load_table(16).graph());

  auto g24 = build_from_seed(kForm24, {1, 13, 16, 6, 21, 2, 17, 20, 15, 18, 8, 14, 22, 19, 4, 10});
  CHECK(g24.size() == 138);
  CHECK(g24 == load_table(24).graph());

  auto row0 = load_table(21).rotation(0);
  auto g21 = build_from_seed(kForm21, row0);
  CHECK(g21.size() == 105);
  CHECK(g21 == load_table(21).graph());
}

TEST_CASE("seeded construction errors") {
  try {
    build_from_seed({AntimorphismKind::full_cycle, 6}, {1});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::no_such_graph);
  }
  CHECK_THROWS_AS(build_from_seed(kForm16, {}), Error);
  CHECK_THROWS_AS(build_from_seed(kForm16, {0}), Error);
  CHECK_THROWS_AS(build_from_seed(kForm16, {16}), Error);
  // {0,15} is fifteen shifts away from {0,1}, so exactly one of them is an edge.
  try {
    build_from_seed(kForm16, {1, 15});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::inconsistent_seed);
    CHECK(std::string(e.what()).find("orbit") != std::string::npos);
  }
}

TEST_CASE("every consistent seed gives a self-complementary graph with the orbit rule") {
  std::mt19937 rng(1);
  int built = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Vertex> seed;
    std::bernoulli_distribution coin(0.5);
    for (int x = 1; x < 16; ++x)
      if (coin(rng)) seed.push_back(x);
    if (seed.empty()) continue;
    try {
      auto g = build_from_seed(kForm16, seed);
      ++built;
      CHECK(g.size() == 60);
      CHECK(is_antimorphism(g, standard_antimorphism(kForm16)));
      for (int i = 0; i < 16; ++i)
        for (int j = i + 1; j < 16; ++j) CHECK(g.has_edge(i, j) == g.has_edge((i + 2) % 16, (j + 2) % 16));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::inconsistent_seed);
    }
  }
  CHECK(built > 0);

  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vertex> seed;
    std::bernoulli_distribution coin(0.5);
    for (int x = 1; x < 21; ++x)
      if (coin(rng)) seed.push_back(x);
    if (seed.empty()) continue;
    try {
      auto g = build_from_seed(kForm21, seed);
      CHECK(g.size() == 105);
      CHECK(is_antimorphism(g, standard_antimorphism(kForm21)));
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::inconsistent_seed);
    }
  }
}

TEST_CASE("tables verify end to end") {
  struct Case {
    int n;
    AntimorphismForm form;
    long long edges, faces, genus;
  } cases[] = {{16, kForm16, 60, 40, 3}, {21, kForm21, 105, 70, 8}, {24, kForm24, 138, 92, 12}};
  for (const auto& c : cases) {
    auto report = verify_table(load_table(c.n), c.form);
    INFO("n=" << c.n << "\n" << serialize_report(report));
    CHECK(report.passed());
    CHECK(report.achieves_bound);
    CHECK(report.bound_value == c.genus);
    for (const auto& h : report.halves) {
      CHECK(h.edges == static_cast<std::size_t>(c.edges));
      CHECK(h.faces == c.faces);
      CHECK(h.genus == c.genus);
      CHECK(h.triangular);
    }
    CHECK(biembedding_edge_bound(c.n, c.genus) == static_cast<long long>(c.n) * (c.n - 1) / 2);
  }
}

TEST_CASE("wrong antimorphism form fails the self-complementary stage") {
  auto report = verify_table(load_table(21), {AntimorphismKind::full_cycle, 21});
  CHECK_FALSE(report.passed());
  REQUIRE(report.first_failure() != nullptr);
  CHECK(report.first_failure()->name == "self_complementary");
}

TEST_CASE("corrupted table fails verification") {
  auto rows = load_table(16).rows();
  std::swap(rows[1][0], rows[1][1]);
  auto report = verify_table(RotationSystem(rows), kForm16);
  CHECK_FALSE(report.passed());
  CHECK(report.first_failure()->name == "triangular");
}

TEST_CASE("doubling reuses the embedding on the complement") {
  for (auto [n, form] : {std::pair{16, kForm16}, std::pair{24, kForm24}, std::pair{21, kForm21}}) {
    auto r = load_table(n);
    auto [a, b] = biembed_from_selfcomp(r, standard_antimorphism(form));
    CHECK(a == r);
    CHECK(b.graph() == complement(r.graph()));
    CHECK(sorted_lengths(a) == sorted_lengths(b));
    CHECK(surface_stats(a).genus == surface_stats(b).genus);
    auto report = verify_biembedding(a, b, n);
    CHECK(report.partition_ok);
    CHECK(report.achieves_bound);
  }
  CHECK_THROWS_AS(biembed_from_selfcomp(load_table(16), Permutation::identity(16)), Error);
}

TEST_CASE("triangular search") {
  auto k4 = search_triangular(make_complete(4));
  REQUIRE(k4.status == SearchStatus::found);
  REQUIRE(k4.rotation);
  auto faces = trace_faces(*k4.rotation);
  CHECK(faces.size() == 4);
  CHECK(is_triangular(faces));
  CHECK(surface_stats(*k4.rotation).genus == 0);

  auto k5 = search_triangular(make_complete(5));
  CHECK(k5.status == SearchStatus::infeasible);
  CHECK(k5.nodes == 0);

  auto k7 = search_triangular(make_complete(7));
  REQUIRE(k7.status == SearchStatus::found);
  CHECK(k7.rotation->graph() == make_complete(7));
  CHECK(surface_stats(*k7.rotation).genus == 1);

  // Octahedron K_{2,2,2}: 12 edges, triangulates the sphere.
  auto octa = complement(Graph::from_edges(6, std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}}));
  auto o = search_triangular(octa);
  REQUIRE(o.status == SearchStatus::found);
  CHECK(surface_stats(*o.rotation).genus == 0);

  // K_{3,3} has no triangles at all.
  Graph k33(6);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
  CHECK(search_triangular(k33).status == SearchStatus::infeasible);
}

TEST_CASE("triangular search respects its budget") {
  auto g = load_table(16).graph();
  auto tiny = search_triangular(g, {3, 1});
  CHECK(tiny.status == SearchStatus::budget_exhausted);
  CHECK(tiny.nodes == 3);
  CHECK_FALSE(tiny.rotation);
}

TEST_CASE("triangular search on a table graph") {
  auto g = load_table(16).graph();
  auto result = search_triangular(g, {2'000'000, 1});
  if (result.status == SearchStatus::found) {
    CHECK(validate_rotation(*result.rotation, g).ok());
    CHECK(is_triangular(trace_faces(*result.rotation)));
    CHECK(surface_stats(*result.rotation).genus == 3);
  } else {
    MESSAGE("no embedding within budget: " << to_string(result.status));
  }
}

TEST_CASE("parallel search reports the sequential result") {
  const Graph graphs[] = {make_complete(7), load_table(16).graph(), make_complete(4)};
  for (const auto& g : graphs) {
    for (std::uint64_t budget : {5ULL, 40ULL, 1000ULL, 100000ULL}) {
      auto seq = search_triangular(g, {budget, 1});
      for (unsigned threads : {2U, 4U, 8U}) {
        auto par = search_triangular(g, {budget, threads});
        CHECK(par.status == seq.status);
        CHECK(par.nodes == seq.nodes);
        CHECK(par.rotation == seq.rotation);
      }
    }
  }
}
