#include "gcg/families.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gcg/degen.hpp"
#include "gcg/planecfg.hpp"

namespace gcg {

namespace {

constexpr double kTau = 6.283185307179586;

struct Builder {
  int vertex_count = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<double, 2>> pos;

  void place(int v, double radius, double angle) {
    pos[static_cast<size_t>(v - 1)] = {radius * std::cos(angle), radius * std::sin(angle)};
  }
  void edge(int a, int b) { edges.push_back({std::min(a, b), std::max(a, b)}); }

  // Rotation at each vertex: incident edges sorted counterclockwise by the
  // direction toward the other endpoint.  The coordinates come from planar
  // straight-line drawings, so this reproduces the intended embedding.
  TrivalentPlanarGraph finish(int genus) const {
    TrivalentPlanarGraph g;
    g.genus = genus;
    g.vertex_count = vertex_count;
    g.edges = edges;
    g.rotation.assign(static_cast<size_t>(vertex_count), {0, 0, 0});
    for (int v = 1; v <= vertex_count; ++v) {
      auto inc = g.incident_edges(v);
      if (inc.size() != 3)
        throw InvariantViolation("family constructor produced degree " +
                                 std::to_string(inc.size()) + " at vertex " + std::to_string(v));
      std::sort(inc.begin(), inc.end(), [&](int e1, int e2) {
        auto angle = [&](int e) {
          int w = g.other_end(e, v);
          const auto& pv = pos[static_cast<size_t>(v - 1)];
          const auto& pw = pos[static_cast<size_t>(w - 1)];
          return std::atan2(pw[1] - pv[1], pw[0] - pv[0]);
        };
        return angle(e1) < angle(e2);
      });
      g.rotation[static_cast<size_t>(v - 1)] = {inc[0], inc[1], inc[2]};
    }
    return g;
  }
};

TrivalentPlanarGraph standard_graph_odd(int n) {
  Builder b;
  b.vertex_count = 4 * n;
  b.pos.assign(static_cast<size_t>(b.vertex_count), {0, 0});
  for (int i = 1; i <= n; ++i) b.place(i, 1.0, kTau * (i - 1) / n);
  for (int j = 1; j <= 2 * n; ++j) b.place(n + j, 2.0, kTau * (j - 1) / (2 * n));
  for (int j = 1; j <= n; ++j) b.place(3 * n + j, 3.0, kTau * (2 * j - 1) / (2 * n));
  for (int i = 1; i < n; ++i) b.edge(i, i + 1);
  b.edge(n, 1);
  for (int j = 1; j < 2 * n; ++j) b.edge(n + j, n + j + 1);
  b.edge(3 * n, n + 1);
  for (int j = 1; j < n; ++j) b.edge(3 * n + j, 3 * n + j + 1);
  b.edge(4 * n, 3 * n + 1);
  for (int i = 1; i <= n; ++i) b.edge(i, n + 2 * i - 1);
  for (int j = 1; j <= n; ++j) b.edge(n + 2 * j, 3 * n + j);
  return b.finish(2 * n + 1);
}

TrivalentPlanarGraph standard_graph_even(int n) {
  // Genus 2n+1 graph with vertices n+1 (on the ring edge joining n and 1) and
  // n+2 (on the ring edge joining h and h+1, h = floor((n+1)/2)) inserted and
  // joined by a chord; middle and outer vertices shift up by two.
  const int h = (n + 1) / 2;
  Builder b;
  b.vertex_count = 4 * n + 2;
  b.pos.assign(static_cast<size_t>(b.vertex_count), {0, 0});
  for (int i = 1; i <= n; ++i) b.place(i, 1.0, kTau * (i - 1) / n);
  b.place(n + 1, 1.0, -kTau / (2 * n));
  b.place(n + 2, 1.0, kTau * (h - 1) / n + kTau / (2 * n));
  for (int j = 1; j <= 2 * n; ++j) b.place(n + 2 + j, 2.0, kTau * (j - 1) / (2 * n));
  for (int j = 1; j <= n; ++j) b.place(3 * n + 2 + j, 3.0, kTau * (2 * j - 1) / (2 * n));

  std::vector<int> ring;
  for (int i = 1; i <= h; ++i) ring.push_back(i);
  ring.push_back(n + 2);
  for (int i = h + 1; i <= n; ++i) ring.push_back(i);
  ring.push_back(n + 1);
  for (size_t i = 0; i < ring.size(); ++i) b.edge(ring[i], ring[(i + 1) % ring.size()]);

  for (int j = 1; j < 2 * n; ++j) b.edge(n + 2 + j, n + 3 + j);
  b.edge(3 * n + 2, n + 3);
  for (int j = 1; j < n; ++j) b.edge(3 * n + 2 + j, 3 * n + 3 + j);
  b.edge(4 * n + 2, 3 * n + 3);
  for (int i = 1; i <= n; ++i) b.edge(i, n + 2 * i + 1);
  for (int j = 1; j <= n; ++j) b.edge(n + 2 * j + 2, 3 * n + 2 + j);
  b.edge(n + 1, n + 2);
  return b.finish(2 * n + 2);
}

bool is_path(const TrivalentPlanarGraph& g, const std::vector<int>& verts) {
  for (size_t i = 0; i + 1 < verts.size(); ++i) {
    auto nb = g.neighbors(verts[i]);
    if (std::find(nb.begin(), nb.end(), verts[i + 1]) == nb.end()) return false;
  }
  return true;
}

}  // namespace

TrivalentPlanarGraph standard_graph(int g) {
  if (g < 7)
    throw ValidationError("standard family starts at genus 7; use the prism constructor "
                          "(genus 4..10) or the tilde constructors (genus 7, 8) below that");
  return g % 2 == 1 ? standard_graph_odd((g - 1) / 2) : standard_graph_even((g - 2) / 2);
}

ChainDecomposition ab_decomposition(int g) {
  ChainDecomposition d;
  d.genus = g;
  if (g % 2 == 1) {
    const int n = (g - 1) / 2;
    d.part_A.push_back(1);
    for (int v = n + 1; v <= 3 * n - 2; ++v) d.part_A.push_back(v);
    d.part_A.push_back(4 * n - 1);
    for (int v = 2; v <= n; ++v) d.part_B.push_back(v);
    d.part_B.push_back(3 * n - 1);
    d.part_B.push_back(3 * n);
    d.part_B.push_back(4 * n);
    for (int v = 3 * n + 1; v <= 4 * n - 2; ++v) d.part_B.push_back(v);
  } else {
    const int n = (g - 2) / 2;
    const int h = (n + 1) / 2;
    d.part_A.push_back(n + 1);
    d.part_A.push_back(1);
    for (int v = n + 3; v <= 3 * n; ++v) d.part_A.push_back(v);
    d.part_A.push_back(4 * n + 1);
    for (int v = 2; v <= h; ++v) d.part_B.push_back(v);
    d.part_B.push_back(n + 2);
    for (int v = h + 1; v <= n; ++v) d.part_B.push_back(v);
    d.part_B.push_back(3 * n + 1);
    d.part_B.push_back(3 * n + 2);
    d.part_B.push_back(4 * n + 2);
    for (int v = 3 * n + 3; v <= 4 * n; ++v) d.part_B.push_back(v);
  }
  auto graph = standard_graph(g);
  if (static_cast<int>(d.part_A.size()) != g - 1 || static_cast<int>(d.part_B.size()) != g - 1)
    throw InvariantViolation("chain parts must have g-1 vertices each");
  std::set<int> all(d.part_A.begin(), d.part_A.end());
  all.insert(d.part_B.begin(), d.part_B.end());
  if (static_cast<int>(all.size()) != graph.vertex_count)
    throw InvariantViolation("chain parts do not partition the vertex set");
  if (!is_path(graph, d.part_A) || !is_path(graph, d.part_B))
    throw InvariantViolation("chain part is not a path in the graph");
  return d;
}

TrivalentPlanarGraph prism_graph(int m) {
  if (m < 3) throw ValidationError("prism needs m >= 3");
  Builder b;
  b.vertex_count = 2 * m;
  b.pos.assign(static_cast<size_t>(b.vertex_count), {0, 0});
  for (int i = 1; i <= m; ++i) {
    b.place(i, 1.0, kTau * (i - 1) / m);
    b.place(m + i, 2.0, kTau * (i - 1) / m);
  }
  for (int i = 1; i < m; ++i) b.edge(i, i + 1);
  b.edge(m, 1);
  for (int i = 1; i < m; ++i) b.edge(m + i, m + i + 1);
  b.edge(2 * m, m + 1);
  for (int i = 1; i <= m; ++i) b.edge(i, m + i);
  return b.finish(m + 1);
}

TrivalentPlanarGraph tilde_graph(int g) {
  if (g != 7 && g != 8) throw ValidationError("tilde graphs exist for genus 7 and 8 only");
  GenusData data = tilde_data(g);
  LimitChain a = limit_planes(data.survivors, data.corrA);
  LimitChain b = limit_planes(data.survivors, data.corrB);
  PlaneConfig uni = union_config(a.config, b.config);
  TrivalentPlanarGraph graph = graph_from_config(uni);
  auto rep = validate(graph);
  if (!rep.valid() || rep.genus != g)
    throw InvariantViolation("tilde reconstruction produced an invalid graph");
  if (edge_connectivity(graph) != 3)
    throw InvariantViolation("tilde reconstruction is not 3-edge-connected");
  return graph;
}

std::vector<int> crossing_edges(const TrivalentPlanarGraph& g, const ChainDecomposition& d) {
  std::set<int> in_a(d.part_A.begin(), d.part_A.end());
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    bool a0 = in_a.count(g.edges[static_cast<size_t>(e)][0]) > 0;
    bool a1 = in_a.count(g.edges[static_cast<size_t>(e)][1]) > 0;
    if (a0 != a1) out.push_back(e);
  }
  return out;
}

}  // namespace gcg
