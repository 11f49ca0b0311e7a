#include "gcg/planecfg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>

namespace gcg {

namespace {

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

int shared_count(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) ++count;
  return count;
}

}  // namespace

bool PlaneConfig::is_face(const std::vector<int>& labels) const {
  for (const auto& f : facets) {
    bool inside = true;
    for (int x : labels)
      if (std::find(f.begin(), f.end(), x) == f.end()) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

PlaneConfig config_from_graph(const TrivalentPlanarGraph& g) {
  auto rep = validate(g);
  if (!rep.valid()) throw ValidationError("plane configuration requires a valid graph");
  int conn = edge_connectivity(g);
  if (conn < 3)
    throw ValidationError("plane configuration requires edge connectivity >= 3, got " +
                          std::to_string(conn) +
                          ": facet intersections would not mirror graph adjacency");
  FaceSet fs = faces(g);
  PlaneConfig c;
  c.ambient = g.genus;
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) c.points.push_back(f);
  for (int v = 1; v <= g.vertex_count; ++v) {
    auto fv = fs.faces_at_vertex(v);
    if (fv.size() != 3)
      throw ValidationError("vertex " + std::to_string(v) + " does not have 3 distinct faces");
    c.facets.push_back(sorted(fv));
    c.facet_names.push_back(v);
  }
  return c;
}

std::vector<std::array<int, 3>> pairwise_intersections(const PlaneConfig& c) {
  std::vector<std::array<int, 3>> out;
  const int n = static_cast<int>(c.facets.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out.push_back({i, j, shared_count(c.facets[static_cast<size_t>(i)],
                                        c.facets[static_cast<size_t>(j)])});
  return out;
}

std::array<long long, 3> f_vector(const PlaneConfig& c) {
  std::set<int> verts;
  std::set<std::array<int, 2>> pairs;
  std::set<std::array<int, 3>> triples;
  for (const auto& f : c.facets) {
    auto s = sorted(f);
    for (size_t i = 0; i < s.size(); ++i) {
      verts.insert(s[i]);
      for (size_t j = i + 1; j < s.size(); ++j) {
        pairs.insert({s[i], s[j]});
        for (size_t k = j + 1; k < s.size(); ++k) triples.insert({s[i], s[j], s[k]});
      }
    }
  }
  return {static_cast<long long>(verts.size()), static_cast<long long>(pairs.size()),
          static_cast<long long>(triples.size())};
}

long long hilbert_function(const PlaneConfig& c, int d) {
  if (d < 0) throw ValidationError("degree must be nonnegative");
  if (d == 0) return 1;
  auto [f0, f1, f2] = f_vector(c);
  return f0 + f1 * (d - 1) + f2 * binomial(d - 1, 2);
}

namespace {

long long count_monomials(const PlaneConfig& c, const std::vector<int>& pts, size_t idx,
                          int remaining, std::vector<int>& support) {
  if (remaining == 0) return c.is_face(support) ? 1 : 0;
  if (idx == pts.size()) return 0;
  long long total = 0;
  // Exponent 0 for pts[idx]:
  total += count_monomials(c, pts, idx + 1, remaining, support);
  // Any positive exponent: the count of tails only depends on the support.
  support.push_back(pts[idx]);
  for (int e = 1; e <= remaining; ++e) {
    total += count_monomials(c, pts, idx + 1, remaining - e, support);
  }
  support.pop_back();
  return total;
}

}  // namespace

long long hilbert_monomial_count(const PlaneConfig& c, int d) {
  if (d == 0) return 1;
  std::vector<int> support;
  return count_monomials(c, c.points, 0, d, support);
}

PlaneConfig chain_config(const TrivalentPlanarGraph& g, const ChainDecomposition& d, Part part) {
  PlaneConfig full = config_from_graph(g);
  std::map<int, int> facet_of_vertex;
  for (int i = 0; i < static_cast<int>(full.facet_names.size()); ++i)
    facet_of_vertex[full.facet_names[static_cast<size_t>(i)]] = i;
  const auto& verts = part == Part::A ? d.part_A : d.part_B;
  PlaneConfig c;
  c.ambient = full.ambient;
  c.points = full.points;
  for (int v : verts) {
    auto it = facet_of_vertex.find(v);
    if (it == facet_of_vertex.end())
      throw ValidationError("chain vertex " + std::to_string(v) + " is not a graph vertex");
    c.facets.push_back(full.facets[static_cast<size_t>(it->second)]);
    c.facet_names.push_back(v);
  }
  const int n = static_cast<int>(c.facets.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int s = shared_count(c.facets[static_cast<size_t>(i)], c.facets[static_cast<size_t>(j)]);
      int want = (j == i + 1) ? 2 : 1;
      if ((j == i + 1 && s != 2) || (j > i + 1 && s > want))
        throw ValidationError("facets " + std::to_string(i) + " and " + std::to_string(j) +
                              " share " + std::to_string(s) + " labels; chain property fails");
    }
  return c;
}

PlaneConfig double_curve(const PlaneConfig& a, const PlaneConfig& b) {
  if (a.ambient != b.ambient) throw ValidationError("chains live in different ambient spaces");
  std::set<std::vector<int>> lines;
  for (const auto& fa : a.facets)
    for (size_t i = 0; i < fa.size(); ++i)
      for (size_t j = i + 1; j < fa.size(); ++j) {
        std::vector<int> pair = {fa[i], fa[j]};
        std::sort(pair.begin(), pair.end());
        if (b.is_face(pair)) lines.insert(pair);
      }
  PlaneConfig c;
  c.ambient = a.ambient;
  std::set<int> pts;
  std::map<int, int> degree;
  for (const auto& l : lines) {
    c.facets.push_back(l);
    for (int x : l) {
      pts.insert(x);
      degree[x] += 1;
    }
  }
  c.points.assign(pts.begin(), pts.end());
  const int expected = a.ambient + 1;
  if (static_cast<int>(lines.size()) != expected || static_cast<int>(pts.size()) != expected)
    throw InvariantViolation("double curve has " + std::to_string(lines.size()) + " lines on " +
                             std::to_string(pts.size()) + " points, expected " +
                             std::to_string(expected) + " of each");
  for (const auto& [p, deg] : degree)
    if (deg != 2)
      throw InvariantViolation("double curve point " + std::to_string(p) + " lies on " +
                               std::to_string(deg) + " lines, expected 2");
  // Degree 2 everywhere with equal line and point counts leaves only a union
  // of cycles; walk one and require it to close over all points.
  std::map<int, std::vector<int>> adj;
  for (const auto& l : c.facets) {
    adj[l[0]].push_back(l[1]);
    adj[l[1]].push_back(l[0]);
  }
  std::set<int> seen;
  int cur = c.points[0], prev = -1;
  while (seen.insert(cur).second) {
    auto& nb = adj[cur];
    int next = (nb[0] == prev) ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(seen.size()) != expected)
    throw InvariantViolation("double curve is not a single cycle");
  return c;
}

std::string to_string(const SpanRef& r) { return std::string(1, r.kind) + std::to_string(r.index); }

std::string to_string(const SpanTable& t) {
  std::ostringstream out;
  for (const auto& row : t.rows)
    out << row.plane << ": (" << to_string(row.first) << ", " << to_string(row.second) << ")\n";
  return out.str();
}

namespace {

// Cyclic point order of a double curve, starting anywhere.
std::vector<int> cycle_order(const PlaneConfig& dcurve) {
  std::map<int, std::vector<int>> adj;
  for (const auto& l : dcurve.facets) {
    adj[l[0]].push_back(l[1]);
    adj[l[1]].push_back(l[0]);
  }
  std::vector<int> order;
  int start = dcurve.points.at(0);
  int cur = start, prev = -1;
  do {
    order.push_back(cur);
    auto& nb = adj[cur];
    int next = (nb[0] == prev) ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  } while (cur != start);
  return order;
}

struct Numbering {
  std::map<int, int> pos;  // point -> 0-based position r_0..r_g
  int size = 0;

  // l_j = {r_{j-1}, r_j}, 1-based j; p_j = r_{j mod size}.
  std::optional<int> line_index(int x, int y) const {
    int px = pos.at(x), py = pos.at(y);
    if ((px + 1) % size == py) return py == 0 ? size : py;
    if ((py + 1) % size == px) return px == 0 ? size : px;
    return std::nullopt;
  }
  int point_index(int x) const {
    int p = pos.at(x);
    return p == 0 ? size : p;
  }
};

std::optional<SpanTable> try_span_table(const PlaneConfig& chain, const PlaneConfig& dcurve,
                                        const Numbering& numbering) {
  SpanTable table;
  for (size_t i = 0; i < chain.facets.size(); ++i) {
    const auto& f = chain.facets[i];
    std::vector<std::array<int, 2>> lines;
    for (size_t x = 0; x < f.size(); ++x)
      for (size_t y = x + 1; y < f.size(); ++y) {
        std::vector<int> pair = {f[x], f[y]};
        std::sort(pair.begin(), pair.end());
        if (dcurve.is_face(pair)) lines.push_back({pair[0], pair[1]});
      }
    SpanRow row;
    row.plane = chain.facet_names.empty() ? static_cast<int>(i + 1)
                                          : chain.facet_names[i];
    if (lines.size() == 2) {
      auto j1 = numbering.line_index(lines[0][0], lines[0][1]);
      auto j2 = numbering.line_index(lines[1][0], lines[1][1]);
      if (!j1 || !j2) return std::nullopt;
      row.first = {'l', std::min(*j1, *j2)};
      row.second = {'l', std::max(*j1, *j2)};
    } else if (lines.size() == 1) {
      auto j = numbering.line_index(lines[0][0], lines[0][1]);
      if (!j) return std::nullopt;
      int third = -1;
      for (int x : f)
        if (x != lines[0][0] && x != lines[0][1]) third = x;
      row.first = {'p', numbering.point_index(third)};
      row.second = {'l', *j};
    } else {
      throw ValidationError("chain plane " + std::to_string(row.plane) + " contains " +
                            std::to_string(lines.size()) +
                            " double-curve lines; expected 1 or 2");
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace

SpanTable span_table(const PlaneConfig& chain, const PlaneConfig& dcurve) {
  auto order = cycle_order(dcurve);
  const int n = static_cast<int>(order.size());
  if (chain.facets.empty()) throw ValidationError("empty chain");
  for (int offset = 0; offset < n; ++offset) {
    for (int dir : {1, -1}) {
      Numbering numbering;
      numbering.size = n;
      for (int i = 0; i < n; ++i) {
        int idx = ((offset + dir * i) % n + n) % n;
        numbering.pos[order[static_cast<size_t>(idx)]] = i;
      }
      auto table = try_span_table(chain, dcurve, numbering);
      if (!table) continue;
      const auto& rows = table->rows;
      bool first_ok = rows[0].first == SpanRef{'l', 1} && rows[0].second == SpanRef{'l', n};
      if (!first_ok) continue;
      if (rows.size() > 1 && rows[1].first.kind == 'p' && rows[1].first.index != 1) continue;
      return *table;
    }
  }
  throw ValidationError("no line numbering matches the chain ends");
}

TrivalentPlanarGraph graph_from_config(const PlaneConfig& c) {
  const int n = static_cast<int>(c.facets.size());
  for (const auto& f : c.facets)
    if (f.size() != 3) throw ValidationError("dual graph needs size-3 facets");

  std::map<std::array<int, 2>, std::vector<int>> facets_of_pair;
  for (int i = 0; i < n; ++i) {
    auto f = sorted(c.facets[static_cast<size_t>(i)]);
    facets_of_pair[{f[0], f[1]}].push_back(i);
    facets_of_pair[{f[0], f[2]}].push_back(i);
    facets_of_pair[{f[1], f[2]}].push_back(i);
  }
  TrivalentPlanarGraph g;
  g.vertex_count = n;
  g.genus = c.ambient;
  std::map<std::array<int, 2>, std::array<int, 2>> flank_of_edge;  // (u,v) -> shared pair
  for (const auto& [pair, facets] : facets_of_pair) {
    if (facets.size() > 2)
      throw ValidationError("label pair shared by " + std::to_string(facets.size()) + " facets");
    if (facets.size() == 2)
      flank_of_edge[{facets[0] + 1, facets[1] + 1}] = pair;
  }
  std::map<std::array<int, 2>, int> edge_id;
  for (const auto& [verts, pair] : flank_of_edge) {
    edge_id[verts] = static_cast<int>(g.edges.size());
    g.edges.push_back(verts);
  }

  // Orientation propagation: each vertex gets a cyclic order of its three
  // labels; across an edge with flank pair {x, y}, the ordered pair (x, y)
  // at one endpoint must appear as (y, x) at the other.
  auto ordered_flank = [&](const std::array<int, 3>& cyc, const std::array<int, 2>& pair) {
    for (int i = 0; i < 3; ++i) {
      int a = cyc[static_cast<size_t>(i)], b = cyc[static_cast<size_t>((i + 1) % 3)];
      if ((a == pair[0] && b == pair[1]) || (a == pair[1] && b == pair[0]))
        return std::array<int, 2>{a, b};
    }
    throw InvariantViolation("flank pair not adjacent in cyclic label order");
  };
  std::vector<std::array<int, 3>> cyc(static_cast<size_t>(n));
  std::vector<char> assigned(static_cast<size_t>(n), 0);
  {
    auto f = sorted(c.facets[0]);
    cyc[0] = {f[0], f[1], f[2]};
    assigned[0] = 1;
  }
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (const auto& [verts, pair] : flank_of_edge) {
      int other;
      if (verts[0] == u + 1)
        other = verts[1] - 1;
      else if (verts[1] == u + 1)
        other = verts[0] - 1;
      else
        continue;
      if (assigned[static_cast<size_t>(other)]) continue;
      auto [x, y] = ordered_flank(cyc[static_cast<size_t>(u)], pair);
      // The other endpoint must see (y, x); its third label follows.
      auto f = sorted(c.facets[static_cast<size_t>(other)]);
      int z = -1;
      for (int lbl : f)
        if (lbl != x && lbl != y) z = lbl;
      cyc[static_cast<size_t>(other)] = {y, x, z};
      assigned[static_cast<size_t>(other)] = 1;
      q.push(other);
    }
  }
  for (int i = 0; i < n; ++i)
    if (!assigned[static_cast<size_t>(i)])
      throw ValidationError("facet adjacency graph is not connected");
  for (const auto& [verts, pair] : flank_of_edge) {
    auto fu = ordered_flank(cyc[static_cast<size_t>(verts[0] - 1)], pair);
    auto fv = ordered_flank(cyc[static_cast<size_t>(verts[1] - 1)], pair);
    if (fu[0] != fv[1] || fu[1] != fv[0])
      throw ValidationError("no consistent planar orientation of the facet union");
  }

  g.rotation.assign(static_cast<size_t>(n), {0, 0, 0});
  for (int v = 0; v < n; ++v) {
    const auto& cy = cyc[static_cast<size_t>(v)];
    for (int i = 0; i < 3; ++i) {
      int a = cy[static_cast<size_t>(i)], b = cy[static_cast<size_t>((i + 1) % 3)];
      std::array<int, 2> pair{std::min(a, b), std::max(a, b)};
      auto facets = facets_of_pair.at(pair);
      if (facets.size() != 2)
        throw ValidationError("facet " + std::to_string(v + 1) +
                              " has a boundary line not shared with another facet");
      int u = facets[0] == v ? facets[1] : facets[0];
      auto key = std::array<int, 2>{std::min(v + 1, u + 1), std::max(v + 1, u + 1)};
      g.rotation[static_cast<size_t>(v)][static_cast<size_t>(i)] = edge_id.at(key);
    }
  }
  return g;
}

bool isomorphic_configs(const PlaneConfig& a, const PlaneConfig& b,
                        std::vector<int>* facet_witness) {
  const int n = static_cast<int>(a.facets.size());
  if (n != static_cast<int>(b.facets.size())) return false;
  if (a.points.size() != b.points.size()) return false;
  if (n == 0) return true;

  auto pair_map = [](const PlaneConfig& c) {
    std::map<std::array<int, 2>, std::vector<int>> m;
    for (int i = 0; i < static_cast<int>(c.facets.size()); ++i) {
      auto f = sorted(c.facets[static_cast<size_t>(i)]);
      for (size_t x = 0; x < f.size(); ++x)
        for (size_t y = x + 1; y < f.size(); ++y) m[{f[x], f[y]}].push_back(i);
    }
    return m;
  };
  auto pairs_a = pair_map(a);
  auto pairs_b = pair_map(b);

  auto f0 = sorted(a.facets[0]);
  for (int seed = 0; seed < n; ++seed) {
    auto target = sorted(b.facets[static_cast<size_t>(seed)]);
    if (target.size() != f0.size()) continue;
    std::vector<int> perm(f0.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::map<int, int> point_map;
      bool ok = true;
      for (size_t i = 0; i < f0.size() && ok; ++i) point_map[f0[i]] = target[perm[i]];
      std::vector<int> fmap(static_cast<size_t>(n), -1);
      fmap[0] = seed;
      std::vector<char> used(static_cast<size_t>(n), 0);
      used[static_cast<size_t>(seed)] = 1;
      std::queue<int> q;
      q.push(0);
      while (!q.empty() && ok) {
        int u = q.front();
        q.pop();
        auto fu = sorted(a.facets[static_cast<size_t>(u)]);
        for (size_t x = 0; x < fu.size() && ok; ++x)
          for (size_t y = x + 1; y < fu.size() && ok; ++y) {
            auto& sharers = pairs_a[{fu[x], fu[y]}];
            for (int v : sharers) {
              if (v == u || fmap[static_cast<size_t>(v)] != -1) continue;
              auto ix = point_map.find(fu[x]);
              auto iy = point_map.find(fu[y]);
              if (ix == point_map.end() || iy == point_map.end()) continue;
              std::array<int, 2> key{std::min(ix->second, iy->second),
                                     std::max(ix->second, iy->second)};
              auto it = pairs_b.find(key);
              if (it == pairs_b.end()) {
                ok = false;
                break;
              }
              int image = -1;
              for (int cand : it->second)
                if (cand != fmap[static_cast<size_t>(u)]) image = cand;
              if (image < 0 || used[static_cast<size_t>(image)]) {
                ok = false;
                break;
              }
              // Map the remaining label of v to the remaining label of image.
              auto fv = sorted(a.facets[static_cast<size_t>(v)]);
              auto fi = sorted(b.facets[static_cast<size_t>(image)]);
              int zv = -1, zi = -1;
              for (int lbl : fv)
                if (lbl != fu[x] && lbl != fu[y]) zv = lbl;
              for (int lbl : fi)
                if (lbl != ix->second && lbl != iy->second) zi = lbl;
              auto existing = point_map.find(zv);
              if (existing != point_map.end() && existing->second != zi) {
                ok = false;
                break;
              }
              point_map[zv] = zi;
              fmap[static_cast<size_t>(v)] = image;
              used[static_cast<size_t>(image)] = 1;
              q.push(v);
            }
          }
      }
      if (ok) {
        for (int i = 0; i < n && ok; ++i) ok = fmap[static_cast<size_t>(i)] != -1;
        // Full re-verification of the candidate bijection.
        std::set<int> images;
        for (int i = 0; i < n && ok; ++i) {
          auto fa = sorted(a.facets[static_cast<size_t>(i)]);
          std::vector<int> mapped;
          for (int lbl : fa) {
            auto it = point_map.find(lbl);
            if (it == point_map.end()) {
              ok = false;
              break;
            }
            mapped.push_back(it->second);
          }
          if (!ok) break;
          std::sort(mapped.begin(), mapped.end());
          if (mapped != sorted(b.facets[static_cast<size_t>(fmap[static_cast<size_t>(i)])]))
            ok = false;
          if (!images.insert(fmap[static_cast<size_t>(i)]).second) ok = false;
        }
        if (ok) {
          if (facet_witness) *facet_witness = fmap;
          return true;
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

}  // namespace gcg
