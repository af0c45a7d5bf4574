#include <doctest.h>

#include <cmath>

#include "biembed/error.hpp"
#include "biembed/family.hpp"
#include "biembed/selfcomp.hpp"
#include "biembed/verifier.hpp"
#include "test_fixtures.hpp"

using namespace biembed;

TEST_CASE("bigenus lower bound") {
  CHECK(bigenus_lower_bound(8) == 0);
  CHECK(bigenus_lower_bound(9) == 0);
  CHECK(bigenus_lower_bound(13) == 1);
  CHECK(bigenus_lower_bound(14) == 2);
  CHECK(bigenus_lower_bound(16) == 3);
  CHECK(bigenus_lower_bound(21) == 8);
  CHECK(bigenus_lower_bound(24) == 12);
  CHECK(bigenus_lower_bound(37) == 38);
  CHECK(bigenus_lower_bound(3) == 0);
  CHECK_THROWS_AS(bigenus_lower_bound(2), Error);
}

TEST_CASE("bigenus bound is nondecreasing from 13 and clamps at zero") {
  for (long long n = 3; n <= 10; ++n) CHECK(bigenus_lower_bound(n) == 0);
  for (long long n = 13; n < 2000; ++n) CHECK(bigenus_lower_bound(n) <= bigenus_lower_bound(n + 1));
}

TEST_CASE("bound is integral exactly on the residues 0, 13, 16, 21 mod 24") {
  for (long long n = 3; n <= 1000; ++n) {
    const long long r = n % 24;
    const bool listed = r == 0 || r == 13 || r == 16 || r == 21;
    CHECK(bound_is_integral(n) == listed);
    if (listed) CHECK((n * n - 13 * n + 24) % 24 == 0);
  }
}

TEST_CASE("bichromatic upper bound") {
  CHECK(bichromatic_upper_bound(1) == 13);
  CHECK(bichromatic_upper_bound(2) == 14);
  CHECK_THROWS_AS(bichromatic_upper_bound(0), Error);
  for (long long g = 1; g <= 1'000'000; ++g) {
    const long double exact = (13.0L + std::sqrt(static_cast<long double>(73 + 96 * g))) / 2.0L;
    const auto approx = static_cast<long long>(std::floor(exact));
    const long long ours = bichromatic_upper_bound(g);
    if (ours != approx) {
      // Differ only when 73+96g sits within rounding of a perfect square.
      const long long root = integer_sqrt(73 + 96 * g);
      FAIL_CHECK("g=" << g << " ours=" << ours << " float=" << approx << " isqrt=" << root);
    }
  }
}

TEST_CASE("integer square root") {
  CHECK(integer_sqrt(0) == 0);
  CHECK(integer_sqrt(168) == 12);
  CHECK(integer_sqrt(169) == 13);
  CHECK(integer_sqrt(170) == 13);
  CHECK(integer_sqrt(9'223'372'036'854'775'807LL) == 3'037'000'499LL);
  for (long long r = 0; r < 100'000; r += 7) {
    CHECK(integer_sqrt(r * r) == r);
    if (r > 0) CHECK(integer_sqrt(r * r - 1) == r - 1);
  }
}

TEST_CASE("edge bound") {
  CHECK(biembedding_edge_bound(16, 3) == 120);
  CHECK(biembedding_edge_bound(37, 38) == 666);
  CHECK(biembedding_edge_bound(3, 0) == 6);
}

TEST_CASE("family pair achieves the bound for K37") {
  auto pair = build_pair(FamilyParameter::of(1));
  auto report = verify_biembedding(derive_embedding(pair.first), derive_embedding(pair.second), 37);
  CHECK(report.passed());
  CHECK(report.partition_ok);
  CHECK(report.achieves_bound);
  CHECK(report.bound_value == 38);
  CHECK(report.halves[0].genus == 38);
  CHECK(report.halves[1].genus == 38);
  CHECK(report.halves[0].edges + report.halves[1].edges == 666);
  CHECK(report.residue_integral);
  CHECK(biembedding_edge_bound(37, *report.halves[0].genus) == 666);
}

TEST_CASE("self-complementary doubling achieves the bound for K21") {
  auto r = load_table(21);
  auto sigma = standard_antimorphism({AntimorphismKind::cycle_plus_fixed_point, 21});
  auto [a, b] = biembed_from_selfcomp(r, sigma);
  auto report = verify_biembedding(a, b, 21);
  CHECK(report.passed());
  CHECK(report.achieves_bound);
  CHECK(report.halves[0].genus == 8);
  CHECK(report.halves[0].edges == 105);
  CHECK(report.halves[1].edges == 105);
}

TEST_CASE("two copies of one embedding do not partition K_n") {
  auto r = load_table(16);
  auto report = verify_biembedding(r, r, 16);
  CHECK_FALSE(report.partition_ok);
  CHECK_FALSE(report.passed());
  CHECK(report.overlapping_edges == 60);
  CHECK(report.missing_edges == 60);
  REQUIRE(report.first_failure() != nullptr);
  CHECK(report.first_failure()->name == "edge_disjoint");
}

TEST_CASE("invalid halves are reported") {
  RotationSystem broken({{1, 2}, {0, 2}, {1}});
  RotationSystem empty({{}, {}, {}});
  auto report = verify_biembedding(broken, empty, 3);
  CHECK_FALSE(report.passed());
  CHECK_FALSE(report.halves[0].valid);

  auto wrong_size = verify_biembedding(load_table(16), load_table(16), 17);
  CHECK_FALSE(wrong_size.passed());
  CHECK(wrong_size.first_failure()->name == "vertex_sets");
}

TEST_CASE("isolated vertices are accepted but flagged") {
  // The second half is edgeless, so it has no surface at all.
  RotationSystem tetra({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
  RotationSystem nothing({{}, {}, {}, {}});
  auto report = verify_biembedding(tetra, nothing, 4);
  CHECK(report.partition_ok);
  CHECK(report.halves[1].isolated_vertices == 4);
  CHECK_FALSE(report.achieves_bound);

  // A spanning half with one isolated vertex still counts.
  RotationSystem star_free({{1, 2}, {2, 0}, {0, 1}, {}, {}});
  auto report2 = verify_biembedding(star_free, RotationSystem({{}, {}, {}, {}, {}}), 5);
  CHECK(report2.halves[0].isolated_vertices == 2);
  CHECK(report2.halves[0].genus == 0);
  CHECK(report2.halves[0].triangular);
}

TEST_CASE("report serialization is stable") {
  auto r = load_table(16);
  auto report = verify_table(r, {AntimorphismKind::full_cycle, 16});
  auto text = serialize_report(report);
  CHECK(text == serialize_report(verify_table(r, {AntimorphismKind::full_cycle, 16})));
  CHECK(text.find("n: 16\n") != std::string::npos);
  CHECK(text.find("half[0].genus: 3\n") != std::string::npos);
  CHECK(text.rfind("verdict: pass\n") == text.size() - std::string("verdict: pass\n").size());
}
