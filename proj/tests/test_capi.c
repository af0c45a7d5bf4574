/* Exercises the shared library through its C header only. */

#include <stdio.h>
#include <string.h>

#include "biembed/biembed.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void test_bounds(void) {
  long long v = -1;
  EXPECT(be_bigenus_lower_bound(37, &v) == BE_OK && v == 38);
  EXPECT(be_bigenus_lower_bound(8, &v) == BE_OK && v == 0);
  EXPECT(be_bichromatic_upper_bound(1, &v) == BE_OK && v == 13);
  EXPECT(be_bichromatic_upper_bound(0, &v) == BE_INVALID_ARGUMENT);
  EXPECT(strstr(be_last_error(), "sphere") != NULL);
  EXPECT(be_edge_bound(37, 38, &v) == BE_OK && v == 666);
  EXPECT(be_bound_is_integral(37) == 1);
  EXPECT(be_bound_is_integral(38) == 0);
  EXPECT(be_bigenus_lower_bound(37, NULL) == BE_INVALID_ARGUMENT);
}

static void test_tables(void) {
  static const char* paths[] = {BIEMBED_DATA_DIR "/table16.rot", BIEMBED_DATA_DIR "/table21.rot",
                                BIEMBED_DATA_DIR "/table24.rot"};
  static const be_antimorphism kinds[] = {BE_FULL_CYCLE, BE_CYCLE_PLUS_FIXED_POINT, BE_FULL_CYCLE};
  static const long long genus[] = {3, 8, 12};
  for (int i = 0; i < 3; ++i) {
    be_rotation* r = NULL;
    be_report* report = NULL;
    be_surface_stats stats;
    EXPECT(be_rotation_load(paths[i], &r) == BE_OK);
    EXPECT(be_rotation_stats(r, &stats) == BE_OK);
    EXPECT(stats.genus == genus[i] && stats.triangular == 1);
    EXPECT(be_verify_table(r, kinds[i], &report) == BE_OK);
    EXPECT(be_report_passed(report) == 1);
    EXPECT(be_report_first_failure(report) == NULL);
    be_report_free(report);
    EXPECT(be_verify_table(r, i == 1 ? BE_FULL_CYCLE : BE_CYCLE_PLUS_FIXED_POINT, &report) == BE_OK);
    EXPECT(be_report_passed(report) == 0);
    EXPECT(be_report_first_failure(report) != NULL);
    be_report_free(report);
    be_rotation_free(r);
  }
  be_rotation* missing = NULL;
  EXPECT(be_rotation_load("/nonexistent.rot", &missing) == BE_IO_ERROR);
  EXPECT(missing == NULL);
  EXPECT(be_rotation_parse("0. 1 2\n0. 2 1\n", &missing) == BE_PARSE_ERROR);
}

static void test_seed(void) {
  const int seed[] = {1, 9, 5, 3};
  be_graph* g = NULL;
  EXPECT(be_graph_from_seed(BE_FULL_CYCLE, 16, seed, 4, &g) == BE_OK);
  EXPECT(be_graph_size(g) == 60);
  EXPECT(be_graph_is_antimorphic(g, BE_FULL_CYCLE) == 1);
  be_graph_free(g);
  EXPECT(be_graph_from_seed(BE_FULL_CYCLE, 6, seed, 1, &g) == BE_NO_SUCH_GRAPH);
  const int bad[] = {1, 15};
  EXPECT(be_graph_from_seed(BE_FULL_CYCLE, 16, bad, 2, &g) == BE_INCONSISTENT_SEED);
}

static void test_family(void) {
  be_report* report = NULL;
  EXPECT(be_family_verify(1, NULL, &report) == BE_OK);
  EXPECT(be_report_passed(report) == 1);
  char* text = NULL;
  EXPECT(be_report_serialize(report, &text) == BE_OK);
  EXPECT(strstr(text, "half[0].genus: 38\n") != NULL);
  be_string_free(text);
  be_report_free(report);

  EXPECT(be_family_verify(0, NULL, &report) == BE_INVALID_ARGUMENT);
  EXPECT(be_family_verify(1, "/nonexistent.tmpl", &report) == BE_TEMPLATE_MISSING);

  be_current_graph* first = NULL;
  be_current_graph* second = NULL;
  EXPECT(be_family_build(2, NULL, &first, &second) == BE_OK);
  char* summary = NULL;
  EXPECT(be_current_graph_validate(first, &summary) == BE_OK);
  be_string_free(summary);
  be_rotation* derived = NULL;
  EXPECT(be_derive_embedding(second, &derived) == BE_OK);
  be_surface_stats stats;
  EXPECT(be_rotation_stats(derived, &stats) == BE_OK);
  EXPECT(stats.vertices == 61 && stats.genus == 123 && stats.triangular == 1);
  be_rotation_free(derived);
  be_current_graph_free(first);
  be_current_graph_free(second);

  be_search_options options = {1000000, 1};
  be_search_info info;
  EXPECT(be_family_search(1, &options, &info, &report, &first, &second) == BE_OK);
  EXPECT(info.status == BE_SEARCH_FOUND);
  EXPECT(be_report_passed(report) == 1);
  be_report_free(report);
  be_current_graph_free(first);
  be_current_graph_free(second);

  options.budget = 0;
  EXPECT(be_family_search(1, &options, &info, &report, NULL, NULL) == BE_INVALID_ARGUMENT);
}

static void test_search(void) {
  be_graph* k4 = NULL;
  be_rotation* r = NULL;
  be_search_info info;
  be_search_options options = {1000, 1};
  EXPECT(be_graph_complete(4, &k4) == BE_OK);
  EXPECT(be_search_triangular(k4, &options, &info, &r) == BE_OK);
  EXPECT(info.status == BE_SEARCH_FOUND && r != NULL);
  be_rotation_free(r);
  be_graph_free(k4);

  be_graph* k5 = NULL;
  EXPECT(be_graph_complete(5, &k5) == BE_OK);
  EXPECT(be_search_triangular(k5, &options, &info, &r) == BE_OK);
  EXPECT(info.status == BE_SEARCH_INFEASIBLE && r == NULL);
  EXPECT(strcmp(be_search_status_name(info.status), "infeasible") == 0);
  be_graph_free(k5);
}

static void test_biembedding(void) {
  be_rotation* r = NULL;
  be_report* report = NULL;
  EXPECT(be_rotation_load(BIEMBED_DATA_DIR "/table16.rot", &r) == BE_OK);
  EXPECT(be_verify_biembedding(r, r, 16, &report) == BE_OK);
  EXPECT(be_report_passed(report) == 0);
  EXPECT(strcmp(be_report_first_failure(report), "edge_disjoint") == 0);
  be_report_free(report);
  be_rotation_free(r);
  EXPECT(strcmp(be_status_name(BE_TEMPLATE_MISSING), "template missing") == 0);
}

int main(void) {
  test_bounds();
  test_tables();
  test_seed();
  test_family();
  test_search();
  test_biembedding();
  if (failures) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
