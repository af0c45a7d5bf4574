#ifndef BIEMBED_BIEMBED_H
#define BIEMBED_BIEMBED_H

/* C interface to the biembedding library. Objects are opaque handles owned by
 * the caller and released with the matching *_free function. Every function
 * returning be_status leaves a message in be_last_error() on failure. Strings
 * returned through char** must be released with be_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(BIEMBED_BUILDING)
#define BE_API __attribute__((visibility("default")))
#else
#define BE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum be_status {
  BE_OK = 0,
  BE_INVALID_ARGUMENT,
  BE_SIZE_MISMATCH,
  BE_PARSE_ERROR,
  BE_IO_ERROR,
  BE_VALIDATION_FAILED,
  BE_DISCONNECTED,
  BE_INCONSISTENT_SEED,
  BE_NO_SUCH_GRAPH,
  BE_TEMPLATE_MISSING,
  BE_BUDGET_EXHAUSTED,
  BE_INTERNAL
} be_status;

typedef enum be_antimorphism {
  BE_FULL_CYCLE = 0,
  BE_CYCLE_PLUS_FIXED_POINT = 1
} be_antimorphism;

typedef enum be_search_status {
  BE_SEARCH_FOUND = 0,
  BE_SEARCH_INFEASIBLE = 1,
  BE_SEARCH_BUDGET_EXHAUSTED = 2
} be_search_status;

typedef struct be_search_options {
  uint64_t budget;  /* node budget, must be > 0 */
  unsigned threads; /* 0 or 1 runs single-threaded */
} be_search_options;

typedef struct be_search_info {
  be_search_status status;
  uint64_t nodes;
} be_search_info;

typedef struct be_surface_stats {
  long long vertices;
  long long edges;
  long long faces;
  long long genus;
  int triangular;
} be_surface_stats;

typedef struct be_graph be_graph;
typedef struct be_rotation be_rotation;
typedef struct be_current_graph be_current_graph;
typedef struct be_report be_report;

BE_API const char* be_last_error(void);
BE_API const char* be_status_name(be_status status);
BE_API const char* be_search_status_name(be_search_status status);
BE_API void be_string_free(char* s);

/* Bounds. */
BE_API be_status be_bigenus_lower_bound(long long n, long long* out);
BE_API be_status be_bichromatic_upper_bound(long long g, long long* out);
BE_API be_status be_edge_bound(long long v, long long g, long long* out);
BE_API int be_bound_is_integral(long long n);

/* Graphs. */
BE_API be_status be_graph_parse(const char* text, be_graph** out);
BE_API be_status be_graph_load(const char* path, be_graph** out);
BE_API be_status be_graph_complete(int n, be_graph** out);
BE_API be_status be_graph_from_seed(be_antimorphism kind, int n, const int* seed, size_t count, be_graph** out);
BE_API be_status be_graph_serialize(const be_graph* g, char** out);
BE_API int be_graph_order(const be_graph* g);
BE_API long long be_graph_size(const be_graph* g);
BE_API int be_graph_is_antimorphic(const be_graph* g, be_antimorphism kind);
BE_API void be_graph_free(be_graph* g);

/* Rotation systems. */
BE_API be_status be_rotation_parse(const char* text, be_rotation** out);
BE_API be_status be_rotation_load(const char* path, be_rotation** out);
BE_API be_status be_rotation_serialize(const be_rotation* r, char** out);
BE_API be_status be_rotation_stats(const be_rotation* r, be_surface_stats* out);
BE_API be_status be_rotation_graph(const be_rotation* r, be_graph** out);
BE_API void be_rotation_free(be_rotation* r);

/* Current graphs. */
BE_API be_status be_current_graph_parse(const char* text, be_current_graph** out);
BE_API be_status be_current_graph_load(const char* path, be_current_graph** out);
BE_API be_status be_current_graph_serialize(const be_current_graph* cg, char** out);
BE_API be_status be_current_graph_validate(const be_current_graph* cg, char** summary);
BE_API be_status be_derive_embedding(const be_current_graph* cg, be_rotation** out);
BE_API void be_current_graph_free(be_current_graph* cg);

/* Family over Z_(24s+13). template_path may be NULL for the shipped template. */
BE_API be_status be_family_build(int s, const char* template_path, be_current_graph** first, be_current_graph** second);
BE_API be_status be_family_verify(int s, const char* template_path, be_report** out);
/* On BE_SEARCH_FOUND, *report certifies the pair; first/second may be NULL. */
BE_API be_status be_family_search(int s, const be_search_options* options, be_search_info* info, be_report** report,
                                  be_current_graph** first, be_current_graph** second);

/* Self-complementary graphs and biembeddings. */
BE_API be_status be_verify_table(const be_rotation* r, be_antimorphism kind, be_report** out);
BE_API be_status be_search_triangular(const be_graph* g, const be_search_options* options, be_search_info* info,
                                      be_rotation** out);
BE_API be_status be_verify_biembedding(const be_rotation* r1, const be_rotation* r2, int n, be_report** out);

/* Reports. */
BE_API int be_report_passed(const be_report* report);
BE_API be_status be_report_serialize(const be_report* report, char** out);
/* Name of the first failing stage, or NULL when every stage passes. */
BE_API const char* be_report_first_failure(const be_report* report);
BE_API void be_report_free(be_report* report);

#ifdef __cplusplus
}
#endif

#endif
