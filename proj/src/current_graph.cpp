#include "biembed/current_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "biembed/error.hpp"
#include "text.hpp"

namespace biembed {

namespace {

long long current_class(long long c, long long n) {
  c = detail::mod(c, n);
  return std::min(c, n - c);
}

}  // namespace

CurrentGraph::CurrentGraph(int modulus, std::vector<Edge> edges, std::vector<std::vector<int>> rotation)
    : n_(modulus), edges_(std::move(edges)), rotation_(std::move(rotation)) {
  if (n_ < 2) throw Error(ErrorCode::invalid_argument, "current group Z_n needs n >= 2");
  const int vertices = vertex_count();
  for (auto& e : edges_) {
    if (e.tail < 0 || e.tail >= vertices || e.head < 0 || e.head >= vertices) {
      throw Error(ErrorCode::invalid_argument, "edge endpoint outside the vertex range");
    }
    e.current = detail::mod(e.current, n_);
  }
  position_.assign(2 * edges_.size(), -1);
  for (int v = 0; v < vertices; ++v) {
    const auto& row = rotation_[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < row.size(); ++i) {
      int d = row[i];
      if (d < 0 || static_cast<std::size_t>(d) >= position_.size()) {
        throw Error(ErrorCode::invalid_argument, "rotation at vertex " + std::to_string(v) + " names unknown dart");
      }
      if (position_[static_cast<std::size_t>(d)] != -1) {
        throw Error(ErrorCode::invalid_argument, "dart " + std::to_string(d) + " listed twice");
      }
      if (dart_tail(d) != v) {
        throw Error(ErrorCode::invalid_argument,
                    "dart " + std::to_string(d) + " listed at vertex " + std::to_string(v) + " but leaves another vertex");
      }
      position_[static_cast<std::size_t>(d)] = static_cast<int>(i);
    }
  }
  for (std::size_t d = 0; d < position_.size(); ++d) {
    if (position_[d] == -1) throw Error(ErrorCode::invalid_argument, "dart " + std::to_string(d) + " missing from rotations");
  }
}

CurrentGraph CurrentGraph::from_outgoing_currents(int modulus, const std::vector<std::vector<long long>>& outgoing) {
  if (modulus < 2) throw Error(ErrorCode::invalid_argument, "current group Z_n needs n >= 2");
  const long long n = modulus;
  // class -> occurrences (vertex, slot, reduced value)
  std::map<long long, std::vector<std::tuple<int, std::size_t, long long>>> by_class;
  for (std::size_t v = 0; v < outgoing.size(); ++v) {
    for (std::size_t i = 0; i < outgoing[v].size(); ++i) {
      long long c = detail::mod(outgoing[v][i], n);
      if (c == 0) throw Error(ErrorCode::invalid_argument, "zero current at vertex " + std::to_string(v));
      by_class[std::min(c, n - c)].emplace_back(static_cast<int>(v), i, c);
    }
  }
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rotation(outgoing.size());
  for (std::size_t v = 0; v < outgoing.size(); ++v) rotation[v].assign(outgoing[v].size(), -1);
  for (const auto& [cls, occ] : by_class) {
    if (occ.size() != 2 || detail::mod(std::get<2>(occ[0]) + std::get<2>(occ[1]), n) != 0) {
      throw Error(ErrorCode::invalid_argument,
                  "current " + std::to_string(cls) + " must occur exactly once in each direction");
    }
    // Reference arc carries the value in 1..n/2.
    std::size_t ref = std::get<2>(occ[0]) == cls ? 0 : 1;
    const auto& [tv, ti, tc] = occ[ref];
    const auto& [hv, hi, hc] = occ[1 - ref];
    int e = static_cast<int>(edges.size());
    edges.push_back({tv, hv, tc});
    rotation[static_cast<std::size_t>(tv)][ti] = 2 * e;
    rotation[static_cast<std::size_t>(hv)][hi] = 2 * e + 1;
  }
  return CurrentGraph(modulus, std::move(edges), std::move(rotation));
}

int CurrentGraph::dart_tail(int dart) const {
  const auto& e = edges_.at(static_cast<std::size_t>(dart / 2));
  return dart % 2 == 0 ? e.tail : e.head;
}

int CurrentGraph::dart_head(int dart) const {
  const auto& e = edges_.at(static_cast<std::size_t>(dart / 2));
  return dart % 2 == 0 ? e.head : e.tail;
}

long long CurrentGraph::dart_current(int dart) const {
  const auto& e = edges_.at(static_cast<std::size_t>(dart / 2));
  return dart % 2 == 0 ? e.current : detail::mod(-e.current, n_);
}

int CurrentGraph::face_successor(int dart) const {
  int back = reverse(dart);
  const auto& row = rotation_[static_cast<std::size_t>(dart_tail(back))];
  auto next = (static_cast<std::size_t>(position_[static_cast<std::size_t>(back)]) + 1) % row.size();
  return row[next];
}

CurrentGraph CurrentGraph::with_edge_reversed(std::size_t e) const {
  auto edges = edges_;
  auto& edge = edges.at(e);
  std::swap(edge.tail, edge.head);
  edge.current = detail::mod(-edge.current, n_);
  auto rotation = rotation_;
  const int fwd = static_cast<int>(2 * e), bwd = fwd + 1;
  for (auto& row : rotation)
    for (auto& d : row)
      if (d == fwd) d = bwd;
      else if (d == bwd) d = fwd;
  return CurrentGraph(n_, std::move(edges), std::move(rotation));
}

std::vector<std::vector<long long>> CurrentGraph::outgoing_currents() const {
  std::vector<std::vector<long long>> out(rotation_.size());
  for (std::size_t v = 0; v < rotation_.size(); ++v)
    for (int d : rotation_[v]) out[v].push_back(dart_current(d));
  return out;
}

std::string CurrentGraphReport::summary() const {
  std::ostringstream out;
  out << "faces=" << face_count;
  for (const auto& [v, deg] : non_cubic) out << "; vertex " << v << " has degree " << deg;
  for (const auto& k : kirchhoff) out << "; Kirchhoff fails at vertex " << k.vertex << " (inbound sum " << k.inbound_sum << ")";
  for (auto c : repeated_currents) out << "; current " << c << " used more than once";
  for (auto c : degenerate_currents) out << "; current " << c << " is its own inverse";
  return out.str();
}

std::vector<std::vector<int>> current_graph_faces(const CurrentGraph& cg) {
  std::vector<int> next(2 * cg.edge_count());
  for (std::size_t d = 0; d < next.size(); ++d) next[d] = cg.face_successor(static_cast<int>(d));
  return permutation_cycles(next);
}

CurrentGraphReport validate_current_graph(const CurrentGraph& cg) {
  CurrentGraphReport report;
  const long long n = cg.modulus();
  report.face_count = current_graph_faces(cg).size();
  for (int v = 0; v < cg.vertex_count(); ++v) {
    const auto& row = cg.rotation(v);
    if (row.size() != 3) report.non_cubic.emplace_back(v, static_cast<int>(row.size()));
    long long inbound = 0;
    for (int d : row) inbound += cg.dart_current(CurrentGraph::reverse(d));
    inbound = detail::mod(inbound, n);
    if (inbound != 0) report.kirchhoff.push_back({v, inbound});
  }
  std::map<long long, int> uses;
  for (const auto& e : cg.edges()) {
    long long c = detail::mod(e.current, n);
    if (c == 0 || 2 * c == n) {
      report.degenerate_currents.push_back(c);
      continue;
    }
    ++uses[current_class(c, n)];
  }
  for (const auto& [c, count] : uses)
    if (count > 1) report.repeated_currents.push_back(c);
  return report;
}

CircuitLog circuit_log(const CurrentGraph& cg) {
  auto faces = current_graph_faces(cg);
  if (faces.size() != 1) {
    throw Error(ErrorCode::validation_failed,
                "circuit log needs a one-face current graph, found " + std::to_string(faces.size()) + " faces");
  }
  auto key = [&](int d) { return std::make_tuple(cg.dart_tail(d), cg.dart_head(d), cg.dart_current(d)); };
  int start = 0;
  for (int d = 1; d < static_cast<int>(2 * cg.edge_count()); ++d)
    if (key(d) < key(start)) start = d;
  CircuitLog log;
  log.reserve(2 * cg.edge_count());
  int d = start;
  do {
    log.push_back(cg.dart_current(d));
    d = cg.face_successor(d);
  } while (d != start);
  return log;
}

DifferenceSet current_set(const CurrentGraph& cg) {
  std::vector<int> xs;
  for (const auto& e : cg.edges()) xs.push_back(static_cast<int>(current_class(e.current, cg.modulus())));
  return DifferenceSet(cg.modulus(), std::move(xs));
}

RotationSystem derive_embedding(const CurrentGraph& cg) {
  auto report = validate_current_graph(cg);
  if (!report.ok()) throw Error(ErrorCode::validation_failed, "invalid current graph: " + report.summary());
  const long long n = cg.modulus();
  long long g = n;
  for (const auto& e : cg.edges()) g = std::gcd(g, e.current);
  if (g != 1) {
    throw Error(ErrorCode::disconnected, "derived graph is disconnected: currents and n share the factor " +
                                             std::to_string(g) + ", so the result would be more than one surface");
  }
  auto log = circuit_log(cg);
  std::vector<std::vector<Vertex>> rows(static_cast<std::size_t>(n));
  for (long long k = 0; k < n; ++k) {
    auto& row = rows[static_cast<std::size_t>(k)];
    row.reserve(log.size());
    for (long long d : log) row.push_back(static_cast<Vertex>(detail::mod(k + d, n)));
  }
  RotationSystem derived(std::move(rows));

  auto expected = make_circulant(current_set(cg));
  auto check = validate_rotation(derived, expected);
  if (!check.ok()) throw Error(ErrorCode::validation_failed, "derived rotation is not an embedding of the circulant: " + check.summary());
  if (!is_triangular(trace_faces(derived))) {
    throw Error(ErrorCode::validation_failed, "derived embedding is not triangular");
  }
  return derived;
}

CurrentGraph parse_current_graph(std::string_view text) {
  auto lines = detail::split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && detail::trim(lines[i]).empty()) ++i;
  if (i == lines.size()) throw Error(ErrorCode::parse_error, "current graph text is empty");
  auto header = detail::split_ws(lines[i]);
  std::optional<long long> modulus;
  if (header.size() == 2 && header[0] == "n") modulus = detail::parse_int(header[1]);
  if (!modulus || *modulus < 2) throw Error(ErrorCode::parse_error, detail::line_ref(i) + ": expected `n <modulus>`");
  const long long n = *modulus;

  struct Entry {
    int vertex;
    std::size_t slot;
    long long neighbor;
    long long signed_current;
  };
  std::vector<std::vector<std::pair<long long, long long>>> rows;
  std::vector<bool> seen;
  std::vector<std::size_t> row_line;
  for (++i; i < lines.size(); ++i) {
    auto line = detail::trim(lines[i]);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorCode::parse_error, detail::line_ref(i) + ": expected `<v>: ...`");
    auto v = detail::parse_int(detail::trim(line.substr(0, colon)));
    if (!v || *v < 0) throw Error(ErrorCode::parse_error, detail::line_ref(i) + ": malformed vertex id");
    std::string body;
    for (char c : line.substr(colon + 1))
      if (!detail::is_space(c)) body.push_back(c);
    std::vector<std::pair<long long, long long>> row;
    std::size_t p = 0;
    while (p < body.size()) {
      auto close = body.find(')', p);
      auto comma = body.find(',', p);
      if (body[p] != '(' || close == std::string::npos || comma == std::string::npos || comma > close) {
        throw Error(ErrorCode::parse_error, detail::line_ref(i) + ": expected `(<neighbor>,<current>)`");
      }
      auto w = detail::parse_int(std::string_view(body).substr(p + 1, comma - p - 1));
      auto c = detail::parse_int(std::string_view(body).substr(comma + 1, close - comma - 1));
      if (!w || !c || *w < 0) throw Error(ErrorCode::parse_error, detail::line_ref(i) + ": malformed arc entry");
      row.emplace_back(*w, *c);
      p = close + 1;
    }
    auto idx = static_cast<std::size_t>(*v);
    if (idx >= rows.size()) {
      rows.resize(idx + 1);
      seen.resize(idx + 1, false);
      row_line.resize(idx + 1, 0);
    }
    if (seen[idx]) throw Error(ErrorCode::parse_error, detail::line_ref(i) + ": duplicate vertex row " + std::to_string(idx));
    seen[idx] = true;
    row_line[idx] = i;
    rows[idx] = std::move(row);
  }
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (!seen[v]) throw Error(ErrorCode::parse_error, "missing row for vertex " + std::to_string(v));

  std::map<long long, std::vector<Entry>> by_class;
  for (std::size_t v = 0; v < rows.size(); ++v) {
    for (std::size_t k = 0; k < rows[v].size(); ++k) {
      auto [w, c] = rows[v][k];
      if (w >= static_cast<long long>(rows.size())) {
        throw Error(ErrorCode::parse_error, detail::line_ref(row_line[v]) + ": neighbor " + std::to_string(w) + " has no row");
      }
      if (detail::mod(c, n) == 0) throw Error(ErrorCode::parse_error, detail::line_ref(row_line[v]) + ": zero current");
      by_class[current_class(c, n)].push_back({static_cast<int>(v), k, w, c});
    }
  }
  std::vector<CurrentGraph::Edge> edges;
  std::vector<std::vector<int>> rotation(rows.size());
  for (std::size_t v = 0; v < rows.size(); ++v) rotation[v].assign(rows[v].size(), -1);
  for (const auto& [cls, entries] : by_class) {
    if (entries.size() != 2) {
      throw Error(ErrorCode::parse_error, "current class " + std::to_string(cls) + " appears " +
                                              std::to_string(entries.size()) + " times, expected once per direction");
    }
    const auto& a = entries[0];
    const auto& b = entries[1];
    if (a.neighbor != b.vertex || b.neighbor != a.vertex || detail::mod(a.signed_current + b.signed_current, n) != 0) {
      throw Error(ErrorCode::parse_error, "arc entries for current " + std::to_string(cls) + " do not match up");
    }
    bool a_ref = (a.signed_current > 0) != (b.signed_current > 0) ? a.signed_current > 0
                                                                  : detail::mod(a.signed_current, n) == cls;
    const auto& ref = a_ref ? a : b;
    const auto& other = a_ref ? b : a;
    int e = static_cast<int>(edges.size());
    edges.push_back({ref.vertex, other.vertex, detail::mod(ref.signed_current, n)});
    rotation[static_cast<std::size_t>(ref.vertex)][ref.slot] = 2 * e;
    rotation[static_cast<std::size_t>(other.vertex)][other.slot] = 2 * e + 1;
  }
  return CurrentGraph(static_cast<int>(n), std::move(edges), std::move(rotation));
}

std::string serialize_current_graph(const CurrentGraph& cg) {
  std::ostringstream out;
  out << "n " << cg.modulus() << '\n';
  for (int v = 0; v < cg.vertex_count(); ++v) {
    out << v << ':';
    for (int d : cg.rotation(v)) {
      const auto& e = cg.edges()[static_cast<std::size_t>(d / 2)];
      long long signed_current = d % 2 == 0 ? e.current : -e.current;
      out << " (" << cg.dart_head(d) << ',' << signed_current << ')';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace biembed
