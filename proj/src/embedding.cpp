#include "biembed/embedding.hpp"

#include <algorithm>
#include <sstream>

#include "biembed/error.hpp"
#include "text.hpp"

namespace biembed {

namespace {

/// Dense lookup of the position of u inside the rotation at v.
class PositionIndex {
 public:
  explicit PositionIndex(const RotationSystem& r)
      : n_(static_cast<std::size_t>(r.order())), pos_(n_ * n_, -1), offset_(n_ + 1, 0) {
    for (std::size_t v = 0; v < n_; ++v) {
      const auto& row = r.rows()[v];
      offset_[v + 1] = offset_[v] + static_cast<int>(row.size());
      for (std::size_t i = 0; i < row.size(); ++i) pos_[v * n_ + static_cast<std::size_t>(row[i])] = static_cast<int>(i);
    }
  }

  int position(Vertex v, Vertex u) const { return pos_[static_cast<std::size_t>(v) * n_ + static_cast<std::size_t>(u)]; }
  int arc_id(Vertex v, int index) const { return offset_[static_cast<std::size_t>(v)] + index; }

 private:
  std::size_t n_;
  std::vector<int> pos_;
  std::vector<int> offset_;
};

void require_valid(const RotationSystem& r) {
  auto report = validate_rotation(r);
  if (!report.ok()) throw Error(ErrorCode::validation_failed, "invalid rotation system: " + report.summary());
}

}  // namespace

RotationSystem::RotationSystem(std::vector<std::vector<Vertex>> rows) : rows_(std::move(rows)) {}

std::size_t RotationSystem::arc_count() const noexcept {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return total;
}

Graph RotationSystem::graph() const {
  require_valid(*this);
  Graph g(order());
  for (Vertex v = 0; v < order(); ++v)
    for (Vertex w : rows_[static_cast<std::size_t>(v)])
      if (v < w) g.add_edge(v, w);
  return g;
}

RotationSystem RotationSystem::reversed() const {
  auto rows = rows_;
  for (auto& row : rows) std::reverse(row.begin(), row.end());
  return RotationSystem(std::move(rows));
}

RotationSystem RotationSystem::relabeled(const Permutation& p) const {
  if (p.size() != order()) throw Error(ErrorCode::size_mismatch, "relabeling permutation has the wrong size");
  std::vector<std::vector<Vertex>> rows(rows_.size());
  for (std::size_t v = 0; v < rows_.size(); ++v) {
    auto& target = rows[static_cast<std::size_t>(p(static_cast<Vertex>(v)))];
    target.reserve(rows_[v].size());
    for (Vertex w : rows_[v]) target.push_back(p(w));
  }
  return RotationSystem(std::move(rows));
}

const char* to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::vertex_out_of_range: return "vertex out of range";
    case ViolationKind::self_in_rotation: return "self in rotation";
    case ViolationKind::duplicate_neighbor: return "duplicate neighbor";
    case ViolationKind::missing_arc: return "missing arc";
    case ViolationKind::non_neighbor: return "non-neighbor present";
    case ViolationKind::missing_neighbor: return "missing neighbor";
  }
  return "unknown";
}

std::string RotationViolation::describe() const {
  return std::string(to_string(kind)) + " at vertex " + std::to_string(vertex) + " (neighbor " +
         std::to_string(neighbor) + ")";
}

std::string RotationReport::summary() const {
  if (violations.empty()) return "ok";
  std::string out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i == 5) {
      out += "; ... " + std::to_string(violations.size() - 5) + " more";
      break;
    }
    if (i) out += "; ";
    out += violations[i].describe();
  }
  return out;
}

RotationReport validate_rotation(const RotationSystem& r) {
  RotationReport report;
  const int n = r.order();
  std::vector<std::vector<bool>> listed(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : r.rotation(v)) {
      if (w < 0 || w >= n) {
        report.violations.push_back({v, w, ViolationKind::vertex_out_of_range});
      } else if (w == v) {
        report.violations.push_back({v, w, ViolationKind::self_in_rotation});
      } else if (listed[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) {
        report.violations.push_back({v, w, ViolationKind::duplicate_neighbor});
      } else {
        listed[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] = true;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = 0; w < n; ++w) {
      if (listed[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] &&
          !listed[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)]) {
        report.violations.push_back({w, v, ViolationKind::missing_arc});
      }
    }
  }
  return report;
}

RotationReport validate_rotation(const RotationSystem& r, const Graph& expected) {
  auto report = validate_rotation(r);
  if (expected.order() != r.order()) {
    throw Error(ErrorCode::size_mismatch, "rotation system and graph have different orders");
  }
  for (Vertex v = 0; v < r.order(); ++v) {
    const auto& row = r.rotation(v);
    for (Vertex w : row) {
      if (w >= 0 && w < r.order() && w != v && !expected.has_edge(v, w)) {
        report.violations.push_back({v, w, ViolationKind::non_neighbor});
      }
    }
    for (Vertex w : expected.neighbors(v)) {
      if (std::find(row.begin(), row.end(), w) == row.end()) {
        report.violations.push_back({v, w, ViolationKind::missing_neighbor});
      }
    }
  }
  return report;
}

std::vector<std::size_t> FaceSet::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(faces.size());
  for (const auto& f : faces) out.push_back(f.size());
  return out;
}

std::vector<std::vector<int>> permutation_cycles(std::span<const int> next) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(next.size(), false);
  for (std::size_t start = 0; start < next.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    auto x = static_cast<int>(start);
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
      x = next[static_cast<std::size_t>(x)];
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

FaceSet trace_faces(const RotationSystem& r) {
  require_valid(r);
  PositionIndex index(r);
  std::vector<Arc> arcs;
  arcs.reserve(r.arc_count());
  for (Vertex v = 0; v < r.order(); ++v)
    for (Vertex w : r.rotation(v)) arcs.push_back({v, w});

  // Arc ids follow (tail, position in rotation); next[] maps an arc to its successor on the face.
  std::vector<int> next(arcs.size());
  for (std::size_t id = 0; id < arcs.size(); ++id) {
    const auto [u, v] = arcs[id];
    const auto& row = r.rotation(v);
    int back = index.position(v, u);
    int succ = (back + 1) % static_cast<int>(row.size());
    next[id] = index.arc_id(v, succ);
  }

  FaceSet fs;
  for (const auto& cycle : permutation_cycles(next)) {
    Face face;
    face.reserve(cycle.size());
    for (int id : cycle) face.push_back(arcs[static_cast<std::size_t>(id)]);
    std::rotate(face.begin(), std::min_element(face.begin(), face.end()), face.end());
    fs.faces.push_back(std::move(face));
  }
  std::sort(fs.faces.begin(), fs.faces.end(), [](const Face& a, const Face& b) { return a.front() < b.front(); });
  return fs;
}

bool is_triangular(const FaceSet& fs) {
  return std::all_of(fs.faces.begin(), fs.faces.end(), [](const Face& f) { return f.size() == 3; });
}

SurfaceStats surface_stats(const RotationSystem& r) { return surface_stats(r, trace_faces(r)); }

SurfaceStats surface_stats(const RotationSystem& r, const FaceSet& faces) {
  if (r.order() == 0) throw Error(ErrorCode::invalid_argument, "empty rotation system has no surface");
  auto g = r.graph();
  if (!is_connected(g)) {
    throw Error(ErrorCode::disconnected, "genus undefined for disconnected embedding (" +
                                             std::to_string(component_count(g)) + " components)");
  }
  SurfaceStats stats;
  stats.vertices = g.order();
  stats.edges = static_cast<long long>(g.size());
  // A lone vertex sits on the sphere with one face and no arcs to trace.
  stats.faces = g.size() == 0 ? 1 : static_cast<long long>(faces.size());
  long long chi = stats.euler_characteristic();
  if (chi % 2 != 0 || chi > 2) {
    throw Error(ErrorCode::validation_failed, "Euler characteristic " + std::to_string(chi) + " is impossible");
  }
  stats.genus = (2 - chi) / 2;
  return stats;
}

RotationSystem parse_rotation(std::string_view text) {
  auto lines = detail::split_lines(text);
  struct Row {
    long long vertex;
    std::vector<Vertex> entries;
    std::size_t line;
  };
  std::vector<Row> parsed;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto toks = detail::split_ws(lines[i]);
    if (toks.empty()) continue;
    auto head = toks[0];
    if (head.size() < 2 || head.back() != '.') {
      throw Error(ErrorCode::parse_error, detail::line_ref(i) + ": malformed row, expected `<v>.`");
    }
    auto v = detail::parse_int(head.substr(0, head.size() - 1));
    if (!v || *v < 0) throw Error(ErrorCode::parse_error, detail::line_ref(i) + ": malformed vertex id");
    Row row{*v, {}, i};
    for (std::size_t k = 1; k < toks.size(); ++k) {
      auto w = detail::parse_int(toks[k]);
      if (!w || *w < 0) {
        throw Error(ErrorCode::parse_error, detail::line_ref(i) + ": malformed neighbor `" + std::string(toks[k]) + "`");
      }
      row.entries.push_back(static_cast<Vertex>(*w));
    }
    parsed.push_back(std::move(row));
  }
  if (parsed.empty()) throw Error(ErrorCode::parse_error, "rotation text contains no rows");

  const auto n = parsed.size();
  std::vector<std::vector<Vertex>> rows(n);
  std::vector<bool> seen(n, false);
  for (auto& row : parsed) {
    if (row.vertex >= static_cast<long long>(n)) {
      throw Error(ErrorCode::parse_error, detail::line_ref(row.line) + ": vertex " + std::to_string(row.vertex) +
                                              " exceeds row count " + std::to_string(n));
    }
    auto v = static_cast<std::size_t>(row.vertex);
    if (seen[v]) throw Error(ErrorCode::parse_error, detail::line_ref(row.line) + ": duplicate vertex row " + std::to_string(v));
    seen[v] = true;
    rows[v] = std::move(row.entries);
  }
  RotationSystem r(std::move(rows));
  auto report = validate_rotation(r);
  if (!report.ok()) {
    throw Error(ErrorCode::parse_error, "rotation inconsistent with implied edge set: " + report.summary());
  }
  return r;
}

std::string serialize_rotation(const RotationSystem& r) {
  std::ostringstream out;
  for (Vertex v = 0; v < r.order(); ++v) {
    out << v << '.';
    for (Vertex w : r.rotation(v)) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

}  // namespace biembed
