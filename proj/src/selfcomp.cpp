#include "biembed/selfcomp.hpp"

#include <algorithm>

#include "biembed/error.hpp"

namespace biembed {

Permutation standard_antimorphism(const AntimorphismForm& form) {
  if (form.n < 2) throw Error(ErrorCode::invalid_argument, "antimorphism needs n >= 2");
  if (form.kind == AntimorphismKind::full_cycle) return Permutation::shift(form.n, 1);
  std::vector<Vertex> images(static_cast<std::size_t>(form.n));
  const int cycle = form.n - 1;
  for (int i = 0; i < cycle; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % cycle;
  images[static_cast<std::size_t>(cycle)] = cycle;
  return Permutation(std::move(images));
}

Graph build_from_seed(const AntimorphismForm& form, const std::vector<Vertex>& seed) {
  const int n = form.n;
  if (n < 2) throw Error(ErrorCode::invalid_argument, "self-complementary graph needs n >= 2");
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  if (pairs % 2 != 0) {
    throw Error(ErrorCode::no_such_graph, "no self-complementary graph on " + std::to_string(n) +
                                              " vertices: n(n-1)/2 = " + std::to_string(pairs) + " is odd");
  }
  if (seed.empty()) throw Error(ErrorCode::invalid_argument, "seed neighborhood must be nonempty");
  std::vector<bool> in_seed(static_cast<std::size_t>(n), false);
  for (Vertex x : seed) {
    if (x < 1 || x >= n) throw Error(ErrorCode::invalid_argument, "seed vertex " + std::to_string(x) + " outside 1..n-1");
    if (in_seed[static_cast<std::size_t>(x)]) throw Error(ErrorCode::invalid_argument, "seed vertex repeated");
    in_seed[static_cast<std::size_t>(x)] = true;
  }

  const auto sigma = standard_antimorphism(form);
  auto index = [n](Edge e) { return static_cast<std::size_t>(e.u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e.v); };
  std::vector<signed char> status(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);

  // Along an orbit p, s(p), s^2(p), ... the edge status alternates.
  for (Vertex x = 1; x < n; ++x) {
    const Edge start = Edge::of(0, x);
    const signed char first = in_seed[static_cast<std::size_t>(x)] ? 1 : 0;
    Edge p = start;
    signed char want = first;
    std::size_t steps = 0;
    do {
      auto& slot = status[index(p)];
      if (slot == -1) {
        slot = want;
      } else if (slot != want) {
        throw Error(ErrorCode::inconsistent_seed,
                    "seed is inconsistent on the orbit of {0," + std::to_string(x) + "}: pair {" + std::to_string(p.u) +
                        "," + std::to_string(p.v) + "} would be both edge and non-edge");
      }
      p = Edge::of(sigma(p.u), sigma(p.v));
      want = static_cast<signed char>(1 - want);
      ++steps;
    } while (p != start);
    if (steps % 2 != 0) {
      throw Error(ErrorCode::inconsistent_seed, "orbit of {0," + std::to_string(x) + "} has odd length " +
                                                    std::to_string(steps) + ", so no graph is mapped onto its complement");
    }
  }

  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      auto s = status[index({u, v})];
      if (s == -1) throw Error(ErrorCode::inconsistent_seed, "seed does not determine every pair");
      if (s == 1) g.add_edge(u, v);
    }
  }
  if (!is_antimorphism(g, sigma)) throw Error(ErrorCode::inconsistent_seed, "propagated graph is not self-complementary");
  return g;
}

std::pair<RotationSystem, RotationSystem> biembed_from_selfcomp(const RotationSystem& r, const Permutation& p) {
  const auto g = r.graph();
  if (!is_antimorphism(g, p)) {
    throw Error(ErrorCode::validation_failed, "permutation is not an antimorphism of the embedded graph");
  }
  return {r, r.relabeled(p)};
}

BiembeddingReport verify_table(const RotationSystem& r, const AntimorphismForm& form) {
  BiembeddingReport head;
  head.subject = "self-complementary table, n=" + std::to_string(form.n);
  head.n = form.n;
  head.residue_integral = bound_is_integral(form.n);
  head.bound_value = form.n >= 3 ? bigenus_lower_bound(form.n) : 0;

  auto rotation = validate_rotation(r);
  head.add_stage("rotation_valid", rotation.ok(), rotation.ok() ? "" : rotation.summary());
  bool order_ok = r.order() == form.n;
  head.add_stage("order", order_ok, std::to_string(r.order()) + " rows for n=" + std::to_string(form.n));
  if (!rotation.ok() || !order_ok || form.n < 2) return head;

  const auto g = r.graph();
  const auto sigma = standard_antimorphism(form);
  bool anti = is_antimorphism(g, sigma);
  head.add_stage("self_complementary", anti, form.kind == AntimorphismKind::full_cycle ? "sigma = (0 1 ... n-1)" : "sigma = (0 1 ... n-2)(n-1)");
  // Self-complementary graphs are connected; a disconnected table is a transcription error.
  bool connected = is_connected(g);
  head.add_stage("graph_connected", connected);
  if (connected) {
    auto faces = trace_faces(r);
    auto stats = surface_stats(r, faces);
    head.add_stage("triangular", is_triangular(faces), std::to_string(stats.faces) + " faces");
    head.add_stage("genus", stats.genus == head.bound_value,
                   "genus " + std::to_string(stats.genus) + ", bound " + std::to_string(head.bound_value));
  }
  if (!anti || !connected) return head;

  auto [first, second] = biembed_from_selfcomp(r, sigma);
  auto report = verify_biembedding(first, second, form.n);
  report.subject = head.subject;
  head.stages.insert(head.stages.end(), report.stages.begin(), report.stages.end());
  report.stages = std::move(head.stages);
  return report;
}

}  // namespace biembed
