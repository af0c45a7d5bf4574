#include "biembed/verifier.hpp"

#include <algorithm>
#include <sstream>

#include "biembed/error.hpp"

namespace biembed {

namespace {

long long ceil_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

/// Rotation restricted to non-isolated vertices, relabeled densely.
RotationSystem drop_isolated(const RotationSystem& r) {
  std::vector<Vertex> label(static_cast<std::size_t>(r.order()), -1);
  Vertex next = 0;
  for (Vertex v = 0; v < r.order(); ++v)
    if (!r.rotation(v).empty()) label[static_cast<std::size_t>(v)] = next++;
  std::vector<std::vector<Vertex>> rows;
  for (Vertex v = 0; v < r.order(); ++v) {
    if (r.rotation(v).empty()) continue;
    std::vector<Vertex> row;
    for (Vertex w : r.rotation(v)) row.push_back(label[static_cast<std::size_t>(w)]);
    rows.push_back(std::move(row));
  }
  return RotationSystem(std::move(rows));
}

HalfReport examine_half(const RotationSystem& r) {
  HalfReport half;
  half.valid = validate_rotation(r).ok();
  if (!half.valid) return half;
  auto g = r.graph();
  half.edges = g.size();
  for (Vertex v = 0; v < r.order(); ++v)
    if (r.rotation(v).empty()) ++half.isolated_vertices;
  auto core = drop_isolated(r);
  if (core.order() == 0) return half;
  half.connected = is_connected(core.graph());
  auto faces = trace_faces(core);
  half.faces = static_cast<long long>(faces.size());
  half.triangular = is_triangular(faces);
  if (half.connected) half.genus = surface_stats(core, faces).genus;
  return half;
}

std::string flag(bool b) { return b ? "true" : "false"; }

template <class T>
std::string opt(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string("n/a");
}

}  // namespace

long long integer_sqrt(long long x) {
  if (x < 0) throw Error(ErrorCode::invalid_argument, "square root of a negative number");
  long long lo = 0, hi = 3037000499LL;  // floor(sqrt(2^63 - 1))
  while (lo < hi) {
    long long mid = lo + (hi - lo + 1) / 2;
    if (mid <= x / mid) lo = mid;
    else hi = mid - 1;
  }
  return lo;
}

long long bigenus_lower_bound(long long n) {
  if (n < 3) throw Error(ErrorCode::invalid_argument, "bigenus bound needs n >= 3");
  return std::max(0LL, ceil_div(n * n - 13 * n + 24, 24));
}

long long bichromatic_upper_bound(long long g) {
  if (g < 1) throw Error(ErrorCode::invalid_argument, "bichromatic bound needs genus g >= 1 (the sphere is excluded)");
  return (13 + integer_sqrt(73 + 96 * g)) / 2;
}

long long biembedding_edge_bound(long long v, long long g) {
  if (v < 3) throw Error(ErrorCode::invalid_argument, "edge bound needs at least 3 vertices");
  if (g < 0) throw Error(ErrorCode::invalid_argument, "genus must be nonnegative");
  return 6 * v - 12 + 12 * g;
}

bool bound_is_integral(long long n) {
  long long r = ((n % 24) + 24) % 24;
  return r == 0 || r == 13 || r == 16 || r == 21;
}

void BiembeddingReport::add_stage(std::string name, bool passed, std::string detail) {
  stages.push_back({std::move(name), passed, std::move(detail)});
}

bool BiembeddingReport::passed() const {
  return !stages.empty() && std::all_of(stages.begin(), stages.end(), [](const Stage& s) { return s.passed; });
}

const Stage* BiembeddingReport::first_failure() const {
  for (const auto& s : stages)
    if (!s.passed) return &s;
  return nullptr;
}

BiembeddingReport verify_biembedding(const RotationSystem& r1, const RotationSystem& r2, int n) {
  BiembeddingReport report;
  report.n = n;
  report.residue_integral = bound_is_integral(n);
  report.bound_value = n >= 3 ? bigenus_lower_bound(n) : 0;

  bool orders = r1.order() == n && r2.order() == n;
  report.add_stage("vertex_sets", orders,
                   orders ? "" : "orders " + std::to_string(r1.order()) + " and " + std::to_string(r2.order()));
  if (!orders) return report;

  const RotationSystem* halves[2] = {&r1, &r2};
  for (int i = 0; i < 2; ++i) {
    report.halves[static_cast<std::size_t>(i)] = examine_half(*halves[i]);
    std::string detail = report.halves[static_cast<std::size_t>(i)].valid ? "" : validate_rotation(*halves[i]).summary();
    report.add_stage("rotation_valid[" + std::to_string(i) + "]", report.halves[static_cast<std::size_t>(i)].valid, detail);
  }
  const auto& h0 = report.halves[0];
  const auto& h1 = report.halves[1];
  if (!h0.valid || !h1.valid) return report;

  auto g1 = r1.graph(), g2 = r2.graph();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      bool a = g1.has_edge(u, v), b = g2.has_edge(u, v);
      if (a && b) ++report.overlapping_edges;
      if (!a && !b) ++report.missing_edges;
    }
  }
  report.partition_ok = report.overlapping_edges == 0 && report.missing_edges == 0;
  report.add_stage("edge_disjoint", report.overlapping_edges == 0,
                   std::to_string(report.overlapping_edges) + " edges in both halves");
  report.add_stage("edge_union", report.missing_edges == 0,
                   std::to_string(report.missing_edges) + " edges of K_n in neither half");
  report.add_stage("connected", h0.connected && h1.connected);
  bool spanning = h0.isolated_vertices == 0 && h1.isolated_vertices == 0;
  // Isolated vertices are tolerated; the stage records them without failing.
  report.add_stage("isolated_vertices", true,
                   spanning ? "none" : std::to_string(h0.isolated_vertices + h1.isolated_vertices) + " flagged");
  report.add_stage("triangular", h0.triangular && h1.triangular);
  bool same_genus = h0.genus && h1.genus && *h0.genus == *h1.genus;
  report.add_stage("genus_equal", same_genus, "genera " + opt(h0.genus) + " and " + opt(h1.genus));
  report.achieves_bound = h0.triangular && h1.triangular && h0.genus && h1.genus &&
                          *h0.genus == report.bound_value && *h1.genus == report.bound_value;
  report.add_stage("achieves_bound", report.achieves_bound, "bound " + std::to_string(report.bound_value));
  return report;
}

std::string serialize_report(const BiembeddingReport& report) {
  std::ostringstream out;
  if (!report.subject.empty()) out << "subject: " << report.subject << '\n';
  out << "n: " << report.n << '\n';
  out << "bound_value: " << report.bound_value << '\n';
  out << "residue_integral: " << flag(report.residue_integral) << '\n';
  for (std::size_t i = 0; i < report.halves.size(); ++i) {
    const auto& h = report.halves[i];
    const std::string key = "half[" + std::to_string(i) + "].";
    out << key << "valid: " << flag(h.valid) << '\n';
    out << key << "edges: " << h.edges << '\n';
    out << key << "faces: " << opt(h.faces) << '\n';
    out << key << "genus: " << opt(h.genus) << '\n';
    out << key << "triangular: " << flag(h.triangular) << '\n';
    out << key << "connected: " << flag(h.connected) << '\n';
    out << key << "isolated_vertices: " << h.isolated_vertices << '\n';
  }
  out << "overlapping_edges: " << report.overlapping_edges << '\n';
  out << "missing_edges: " << report.missing_edges << '\n';
  out << "partition_ok: " << flag(report.partition_ok) << '\n';
  out << "achieves_bound: " << flag(report.achieves_bound) << '\n';
  for (const auto& s : report.stages) {
    out << "stage." << s.name << ": " << (s.passed ? "pass" : "FAIL");
    if (!s.detail.empty()) out << " (" << s.detail << ')';
    out << '\n';
  }
  out << "verdict: " << (report.passed() ? "pass" : "FAIL") << '\n';
  return out.str();
}

}  // namespace biembed
