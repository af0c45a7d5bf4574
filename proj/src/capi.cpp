#include "biembed/biembed.h"

#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "biembed/current_graph.hpp"
#include "biembed/error.hpp"
#include "biembed/family.hpp"
#include "biembed/selfcomp.hpp"
#include "biembed/verifier.hpp"

struct be_graph {
  biembed::Graph value;
};
struct be_rotation {
  biembed::RotationSystem value;
};
struct be_current_graph {
  biembed::CurrentGraph value;
};
struct be_report {
  biembed::BiembeddingReport value;
};

namespace {

thread_local std::string last_error;

be_status status_of(biembed::ErrorCode code) {
  using biembed::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return BE_INVALID_ARGUMENT;
    case ErrorCode::size_mismatch: return BE_SIZE_MISMATCH;
    case ErrorCode::parse_error: return BE_PARSE_ERROR;
    case ErrorCode::io_error: return BE_IO_ERROR;
    case ErrorCode::validation_failed: return BE_VALIDATION_FAILED;
    case ErrorCode::disconnected: return BE_DISCONNECTED;
    case ErrorCode::inconsistent_seed: return BE_INCONSISTENT_SEED;
    case ErrorCode::no_such_graph: return BE_NO_SUCH_GRAPH;
    case ErrorCode::template_missing: return BE_TEMPLATE_MISSING;
    case ErrorCode::budget_exhausted: return BE_BUDGET_EXHAUSTED;
  }
  return BE_INTERNAL;
}

be_status fail(be_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
be_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const biembed::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(BE_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BE_INTERNAL, e.what());
  }
}

std::string read_file(const char* path) {
  if (!path) throw biembed::Error(biembed::ErrorCode::invalid_argument, "null path");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw biembed::Error(biembed::ErrorCode::io_error, std::string("cannot open ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw biembed::Error(biembed::ErrorCode::invalid_argument, std::string("null ") + what);
}

biembed::AntimorphismForm form_of(be_antimorphism kind, int n) {
  switch (kind) {
    case BE_FULL_CYCLE: return {biembed::AntimorphismKind::full_cycle, n};
    case BE_CYCLE_PLUS_FIXED_POINT: return {biembed::AntimorphismKind::cycle_plus_fixed_point, n};
  }
  throw biembed::Error(biembed::ErrorCode::invalid_argument, "unknown antimorphism form");
}

biembed::SearchOptions options_of(const be_search_options* options) {
  biembed::SearchOptions o;
  if (options) {
    if (options->budget == 0) throw biembed::Error(biembed::ErrorCode::invalid_argument, "search budget must be > 0");
    o.budget = options->budget;
    o.threads = options->threads == 0 ? 1 : options->threads;
  }
  return o;
}

be_search_status search_status_of(biembed::SearchStatus s) {
  switch (s) {
    case biembed::SearchStatus::found: return BE_SEARCH_FOUND;
    case biembed::SearchStatus::infeasible: return BE_SEARCH_INFEASIBLE;
    case biembed::SearchStatus::budget_exhausted: return BE_SEARCH_BUDGET_EXHAUSTED;
  }
  return BE_SEARCH_INFEASIBLE;
}

std::filesystem::path template_of(const char* path) {
  return path ? std::filesystem::path(path) : biembed::default_template_path();
}

}  // namespace

extern "C" {

const char* be_last_error(void) { return last_error.c_str(); }

const char* be_status_name(be_status status) {
  switch (status) {
    case BE_OK: return "ok";
    case BE_INVALID_ARGUMENT: return "invalid argument";
    case BE_SIZE_MISMATCH: return "size mismatch";
    case BE_PARSE_ERROR: return "parse error";
    case BE_IO_ERROR: return "io error";
    case BE_VALIDATION_FAILED: return "validation failed";
    case BE_DISCONNECTED: return "disconnected";
    case BE_INCONSISTENT_SEED: return "inconsistent seed";
    case BE_NO_SUCH_GRAPH: return "no such graph";
    case BE_TEMPLATE_MISSING: return "template missing";
    case BE_BUDGET_EXHAUSTED: return "budget exhausted";
    case BE_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* be_search_status_name(be_search_status status) {
  switch (status) {
    case BE_SEARCH_FOUND: return biembed::to_string(biembed::SearchStatus::found);
    case BE_SEARCH_INFEASIBLE: return biembed::to_string(biembed::SearchStatus::infeasible);
    case BE_SEARCH_BUDGET_EXHAUSTED: return biembed::to_string(biembed::SearchStatus::budget_exhausted);
  }
  return "unknown";
}

void be_string_free(char* s) { delete[] s; }

be_status be_bigenus_lower_bound(long long n, long long* out) {
  return guarded([&] {
    require(out, "output");
    if (n < 3) return fail(BE_INVALID_ARGUMENT, "bigenus bound needs n >= 3");
    *out = biembed::bigenus_lower_bound(n);
    return BE_OK;
  });
}

be_status be_bichromatic_upper_bound(long long g, long long* out) {
  return guarded([&] {
    require(out, "output");
    if (g < 1) return fail(BE_INVALID_ARGUMENT, "bichromatic bound needs g >= 1; the sphere is not covered");
    *out = biembed::bichromatic_upper_bound(g);
    return BE_OK;
  });
}

be_status be_edge_bound(long long v, long long g, long long* out) {
  return guarded([&] {
    require(out, "output");
    *out = biembed::biembedding_edge_bound(v, g);
    return BE_OK;
  });
}

int be_bound_is_integral(long long n) { return biembed::bound_is_integral(n) ? 1 : 0; }

be_status be_graph_parse(const char* text, be_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    *out = new be_graph{biembed::parse_graph(text)};
    return BE_OK;
  });
}

be_status be_graph_load(const char* path, be_graph** out) {
  return guarded([&] {
    require(out, "output");
    *out = new be_graph{biembed::parse_graph(read_file(path))};
    return BE_OK;
  });
}

be_status be_graph_complete(int n, be_graph** out) {
  return guarded([&] {
    require(out, "output");
    if (n < 1) return fail(BE_INVALID_ARGUMENT, "complete graph needs n >= 1");
    *out = new be_graph{biembed::make_complete(n)};
    return BE_OK;
  });
}

be_status be_graph_from_seed(be_antimorphism kind, int n, const int* seed, size_t count, be_graph** out) {
  return guarded([&] {
    require(out, "output");
    if (count > 0) require(seed, "seed");
    std::vector<biembed::Vertex> s(seed, seed + count);
    *out = new be_graph{biembed::build_from_seed(form_of(kind, n), s)};
    return BE_OK;
  });
}

be_status be_graph_serialize(const be_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output");
    *out = copy_string(biembed::serialize_graph(g->value));
    return BE_OK;
  });
}

int be_graph_order(const be_graph* g) { return g ? g->value.order() : 0; }

long long be_graph_size(const be_graph* g) { return g ? static_cast<long long>(g->value.size()) : 0; }

int be_graph_is_antimorphic(const be_graph* g, be_antimorphism kind) {
  if (!g || g->value.order() < 2) return 0;
  try {
    auto sigma = biembed::standard_antimorphism(form_of(kind, g->value.order()));
    return biembed::is_antimorphism(g->value, sigma) ? 1 : 0;
  } catch (const std::exception&) {
    return 0;
  }
}

void be_graph_free(be_graph* g) { delete g; }

be_status be_rotation_parse(const char* text, be_rotation** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    *out = new be_rotation{biembed::parse_rotation(text)};
    return BE_OK;
  });
}

be_status be_rotation_load(const char* path, be_rotation** out) {
  return guarded([&] {
    require(out, "output");
    *out = new be_rotation{biembed::parse_rotation(read_file(path))};
    return BE_OK;
  });
}

be_status be_rotation_serialize(const be_rotation* r, char** out) {
  return guarded([&] {
    require(r, "rotation");
    require(out, "output");
    *out = copy_string(biembed::serialize_rotation(r->value));
    return BE_OK;
  });
}

be_status be_rotation_stats(const be_rotation* r, be_surface_stats* out) {
  return guarded([&] {
    require(r, "rotation");
    require(out, "output");
    auto faces = biembed::trace_faces(r->value);
    auto stats = biembed::surface_stats(r->value, faces);
    *out = be_surface_stats{stats.vertices, stats.edges, stats.faces, stats.genus,
                            biembed::is_triangular(faces) ? 1 : 0};
    return BE_OK;
  });
}

be_status be_rotation_graph(const be_rotation* r, be_graph** out) {
  return guarded([&] {
    require(r, "rotation");
    require(out, "output");
    *out = new be_graph{r->value.graph()};
    return BE_OK;
  });
}

void be_rotation_free(be_rotation* r) { delete r; }

be_status be_current_graph_parse(const char* text, be_current_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    *out = new be_current_graph{biembed::parse_current_graph(text)};
    return BE_OK;
  });
}

be_status be_current_graph_load(const char* path, be_current_graph** out) {
  return guarded([&] {
    require(out, "output");
    *out = new be_current_graph{biembed::parse_current_graph(read_file(path))};
    return BE_OK;
  });
}

be_status be_current_graph_serialize(const be_current_graph* cg, char** out) {
  return guarded([&] {
    require(cg, "current graph");
    require(out, "output");
    *out = copy_string(biembed::serialize_current_graph(cg->value));
    return BE_OK;
  });
}

be_status be_current_graph_validate(const be_current_graph* cg, char** summary) {
  return guarded([&] {
    require(cg, "current graph");
    auto report = biembed::validate_current_graph(cg->value);
    if (summary) *summary = copy_string(report.summary());
    return report.ok() ? BE_OK : fail(BE_VALIDATION_FAILED, report.summary());
  });
}

be_status be_derive_embedding(const be_current_graph* cg, be_rotation** out) {
  return guarded([&] {
    require(cg, "current graph");
    require(out, "output");
    *out = new be_rotation{biembed::derive_embedding(cg->value)};
    return BE_OK;
  });
}

void be_current_graph_free(be_current_graph* cg) { delete cg; }

be_status be_family_build(int s, const char* template_path, be_current_graph** first, be_current_graph** second) {
  return guarded([&] {
    require(first, "output");
    require(second, "output");
    auto pair = biembed::build_pair(biembed::FamilyParameter::of(s), template_of(template_path));
    *first = new be_current_graph{std::move(pair.first)};
    *second = new be_current_graph{std::move(pair.second)};
    return BE_OK;
  });
}

be_status be_family_verify(int s, const char* template_path, be_report** out) {
  return guarded([&] {
    require(out, "output");
    *out = new be_report{biembed::verify_family(biembed::FamilyParameter::of(s), template_of(template_path))};
    return BE_OK;
  });
}

be_status be_family_search(int s, const be_search_options* options, be_search_info* info, be_report** report,
                           be_current_graph** first, be_current_graph** second) {
  return guarded([&] {
    require(info, "search info");
    require(report, "output");
    *report = nullptr;
    const auto p = biembed::FamilyParameter::of(s);
    auto sets = biembed::current_sets(p);
    auto result = biembed::search_pair(sets.first, sets.second, options_of(options));
    *info = be_search_info{search_status_of(result.status), result.nodes};
    if (!result.pair) return BE_OK;
    *report = new be_report{biembed::verify_pair(p, *result.pair)};
    if (first) *first = new be_current_graph{result.pair->first};
    if (second) *second = new be_current_graph{result.pair->second};
    return BE_OK;
  });
}

be_status be_verify_table(const be_rotation* r, be_antimorphism kind, be_report** out) {
  return guarded([&] {
    require(r, "rotation");
    require(out, "output");
    *out = new be_report{biembed::verify_table(r->value, form_of(kind, r->value.order()))};
    return BE_OK;
  });
}

be_status be_search_triangular(const be_graph* g, const be_search_options* options, be_search_info* info,
                               be_rotation** out) {
  return guarded([&] {
    require(g, "graph");
    require(info, "search info");
    require(out, "output");
    *out = nullptr;
    auto result = biembed::search_triangular(g->value, options_of(options));
    *info = be_search_info{search_status_of(result.status), result.nodes};
    if (result.rotation) *out = new be_rotation{std::move(*result.rotation)};
    return BE_OK;
  });
}

be_status be_verify_biembedding(const be_rotation* r1, const be_rotation* r2, int n, be_report** out) {
  return guarded([&] {
    require(r1, "rotation");
    require(r2, "rotation");
    require(out, "output");
    *out = new be_report{biembed::verify_biembedding(r1->value, r2->value, n)};
    return BE_OK;
  });
}

int be_report_passed(const be_report* report) { return report && report->value.passed() ? 1 : 0; }

be_status be_report_serialize(const be_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "output");
    *out = copy_string(biembed::serialize_report(report->value));
    return BE_OK;
  });
}

const char* be_report_first_failure(const be_report* report) {
  if (!report) return nullptr;
  const auto* stage = report->value.first_failure();
  return stage ? stage->name.c_str() : nullptr;
}

void be_report_free(be_report* report) { delete report; }

}  // extern "C"
