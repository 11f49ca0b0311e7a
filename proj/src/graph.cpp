#include "gcg/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

namespace gcg {

int TrivalentPlanarGraph::other_end(int e, int v) const {
  const auto& [a, b] = edges.at(static_cast<size_t>(e));
  if (a == v) return b;
  if (b == v) return a;
  throw InvariantViolation("vertex " + std::to_string(v) + " is not an endpoint of edge " +
                           std::to_string(e));
}

bool TrivalentPlanarGraph::has_endpoint(int e, int v) const {
  const auto& [a, b] = edges.at(static_cast<size_t>(e));
  return a == v || b == v;
}

std::vector<int> TrivalentPlanarGraph::incident_edges(int v) const {
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    if (has_endpoint(e, v)) out.push_back(e);
  return out;
}

std::vector<int> TrivalentPlanarGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int e : incident_edges(v)) out.push_back(other_end(e, v));
  return out;
}

bool ValidationReport::valid() const {
  if (!shape_ok()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.pass; });
}

namespace {

void shape_check(const TrivalentPlanarGraph& g, std::vector<std::string>& errs) {
  if (g.vertex_count <= 0) errs.push_back("vertex count must be positive");
  const int n = g.vertex_count;
  const int m = static_cast<int>(g.edges.size());
  for (int e = 0; e < m; ++e) {
    for (int v : g.edges[static_cast<size_t>(e)])
      if (v < 1 || v > n)
        errs.push_back("edge " + std::to_string(e) + " references vertex " + std::to_string(v) +
                       " outside 1.." + std::to_string(n));
  }
  if (static_cast<int>(g.rotation.size()) != n)
    errs.push_back("rotation has " + std::to_string(g.rotation.size()) + " entries, expected " +
                   std::to_string(n));
  for (size_t i = 0; i < g.rotation.size(); ++i)
    for (int e : g.rotation[i])
      if (e < 0 || e >= m)
        errs.push_back("rotation of vertex " + std::to_string(i + 1) + " references edge " +
                       std::to_string(e) + " outside 0.." + std::to_string(m - 1));
}

bool connected(const TrivalentPlanarGraph& g) {
  if (g.vertex_count <= 0) return false;
  std::vector<char> seen(static_cast<size_t>(g.vertex_count) + 1, 0);
  std::queue<int> q;
  q.push(1);
  seen[1] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v))
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++count;
        q.push(w);
      }
  }
  return count == g.vertex_count;
}

}  // namespace

ValidationReport validate(const TrivalentPlanarGraph& g) {
  ValidationReport rep;
  shape_check(g, rep.shape_errors);
  if (!rep.shape_ok()) return rep;

  const int n = g.vertex_count;
  const int m = static_cast<int>(g.edges.size());

  auto add = [&rep](const std::string& name, bool pass, const std::string& detail = "") {
    rep.checks.push_back({name, pass, detail});
  };

  bool simple = true;
  std::string simple_detail;
  std::set<std::pair<int, int>> seen_edges;
  for (int e = 0; e < m; ++e) {
    auto [a, b] = g.edges[static_cast<size_t>(e)];
    if (a == b) {
      simple = false;
      simple_detail = "edge " + std::to_string(e) + " is a loop at vertex " + std::to_string(a);
      break;
    }
    auto key = std::minmax(a, b);
    if (!seen_edges.insert(key).second) {
      simple = false;
      simple_detail = "edge " + std::to_string(e) + " repeats {" + std::to_string(key.first) + "," +
                      std::to_string(key.second) + "}";
      break;
    }
  }
  add("simple", simple, simple_detail);

  bool trivalent = true;
  std::string tri_detail;
  for (int v = 1; v <= n; ++v) {
    int deg = static_cast<int>(g.incident_edges(v).size());
    if (deg != 3) {
      trivalent = false;
      tri_detail = "vertex " + std::to_string(v) + " has degree " + std::to_string(deg);
      break;
    }
  }
  add("trivalent", trivalent, tri_detail);

  add("connected", connected(g));

  bool count_ok = 2 * m == 3 * n;
  add("edge_count", count_ok,
      count_ok ? "" : "|E| = " + std::to_string(m) + " but 3|V|/2 = " + std::to_string(3 * n) + "/2");

  // |V| = 2g-2 for an integer g >= 3, and the declared genus must agree.
  bool genus_ok = n >= 4 && n % 2 == 0;
  int derived_genus = genus_ok ? (n + 2) / 2 : 0;
  if (genus_ok && g.genus != 0 && g.genus != derived_genus) genus_ok = false;
  add("genus", genus_ok,
      genus_ok ? "genus " + std::to_string(derived_genus)
               : "no integer g >= 3 with |V| = 2g-2 = " + std::to_string(n) +
                     (g.genus != 0 ? " matching declared genus " + std::to_string(g.genus) : ""));
  rep.genus = derived_genus;

  bool rot_ok = true;
  std::string rot_detail;
  for (int v = 1; v <= n && rot_ok; ++v) {
    auto inc = g.incident_edges(v);
    std::array<int, 3> rot = g.rotation[static_cast<size_t>(v - 1)];
    std::vector<int> rs(rot.begin(), rot.end());
    std::sort(rs.begin(), rs.end());
    std::sort(inc.begin(), inc.end());
    if (rs != inc) {
      rot_ok = false;
      rot_detail = "rotation of vertex " + std::to_string(v) + " is not its incident edge set";
    }
  }
  add("rotation", rot_ok, rot_detail);

  bool faces_ok = false;
  std::string faces_detail;
  if (simple && trivalent && rot_ok && genus_ok && count_ok) {
    FaceSet fs = faces(g);
    faces_ok = static_cast<int>(fs.faces.size()) == derived_genus + 1;
    if (!faces_ok)
      faces_detail = std::to_string(fs.faces.size()) + " faces, expected " +
                     std::to_string(derived_genus + 1);
    bool distinct = true;
    for (int v = 1; v <= n && faces_ok; ++v) {
      auto fv = fs.faces_at_vertex(v);
      std::set<int> uniq(fv.begin(), fv.end());
      if (uniq.size() != 3) {
        distinct = false;
        faces_detail = "vertex " + std::to_string(v) + " has repeated adjacent faces";
        break;
      }
    }
    add("face_count", faces_ok, faces_detail);
    add("distinct_adjacent_faces", faces_ok && distinct, distinct ? "" : faces_detail);
  } else {
    add("face_count", false, "skipped: prerequisite checks failed");
    add("distinct_adjacent_faces", false, "skipped: prerequisite checks failed");
  }
  return rep;
}

bool Face::contains_vertex(int v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::vector<int> FaceSet::faces_at_vertex(int v) const {
  std::vector<int> out;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    if (faces[static_cast<size_t>(f)].contains_vertex(v)) out.push_back(f);
  return out;
}

FaceSet faces(const TrivalentPlanarGraph& g) {
  const int m = static_cast<int>(g.edges.size());
  for (int v = 1; v <= g.vertex_count; ++v) {
    auto inc = g.incident_edges(v);
    std::array<int, 3> rot = g.rotation.at(static_cast<size_t>(v - 1));
    std::vector<int> rs(rot.begin(), rot.end());
    std::sort(rs.begin(), rs.end());
    std::sort(inc.begin(), inc.end());
    if (rs != inc)
      throw ValidationError("rotation of vertex " + std::to_string(v) +
                            " does not list its incident edges");
  }

  // Directed edge (e, tail): tail is edges[e][0] for direction 0, [1] for 1.
  auto dir_index = [&](int e, int tail) {
    return 2 * e + (g.edges[static_cast<size_t>(e)][0] == tail ? 0 : 1);
  };
  std::vector<char> used(static_cast<size_t>(2 * m), 0);
  FaceSet fs;
  for (int e0 = 0; e0 < m; ++e0) {
    for (int d0 = 0; d0 < 2; ++d0) {
      int start = 2 * e0 + d0;
      if (used[static_cast<size_t>(start)]) continue;
      Face face;
      int e = e0;
      int tail = g.edges[static_cast<size_t>(e0)][static_cast<size_t>(d0)];
      while (true) {
        int di = dir_index(e, tail);
        if (used[static_cast<size_t>(di)]) break;
        used[static_cast<size_t>(di)] = 1;
        face.edges.push_back(e);
        face.vertices.push_back(tail);
        int head = g.other_end(e, tail);
        // Continue the face with the successor of e in the rotation at head.
        const auto& rot = g.rotation[static_cast<size_t>(head - 1)];
        int pos = -1;
        for (int i = 0; i < 3; ++i)
          if (rot[static_cast<size_t>(i)] == e) pos = i;
        if (pos < 0) throw InvariantViolation("rotation lookup failed during face walk");
        e = rot[static_cast<size_t>((pos + 1) % 3)];
        tail = head;
      }
      if (!face.edges.empty()) fs.faces.push_back(std::move(face));
    }
  }
  return fs;
}

std::vector<long long> face_boundary(const TrivalentPlanarGraph& g, const Face& f) {
  std::vector<long long> vec(g.edges.size(), 0);
  for (size_t i = 0; i < f.edges.size(); ++i) {
    int e = f.edges[i];
    int tail = f.vertices[i];
    int head = g.other_end(e, tail);
    vec[static_cast<size_t>(e)] += (tail < head) ? 1 : -1;
  }
  return vec;
}

long long divergence(const TrivalentPlanarGraph& g, const std::vector<long long>& vec, int v) {
  long long sum = 0;
  for (int e : g.incident_edges(v)) {
    auto [a, b] = g.edges[static_cast<size_t>(e)];
    int lo = std::min(a, b), hi = std::max(a, b);
    if (v == hi)
      sum += vec[static_cast<size_t>(e)];
    else if (v == lo)
      sum -= vec[static_cast<size_t>(e)];
  }
  return sum;
}

CycleBasis cycle_basis(const TrivalentPlanarGraph& g, int omit_face) {
  FaceSet fs = faces(g);
  const int f = static_cast<int>(fs.faces.size());
  if (omit_face < 0) omit_face = f - 1;
  if (omit_face >= f)
    throw ValidationError("omitted face " + std::to_string(omit_face) + " out of range 0.." +
                          std::to_string(f - 1));
  CycleBasis basis;
  basis.genus = g.genus;
  basis.omitted_face = omit_face;
  for (int i = 0; i < f; ++i) {
    if (i == omit_face) continue;
    basis.vectors.push_back(face_boundary(g, fs.faces[static_cast<size_t>(i)]));
  }
  return basis;
}

namespace {

// Unit-capacity max flow between s and t on the undirected graph; BFS
// augmentation is plenty at these sizes.
int max_flow(const TrivalentPlanarGraph& g, int s, int t) {
  const int m = static_cast<int>(g.edges.size());
  // cap[2e] = capacity u->v, cap[2e+1] = v->u for edge e = {u, v} as stored.
  std::vector<int> cap(static_cast<size_t>(2 * m), 1);
  std::vector<std::vector<int>> inc(static_cast<size_t>(g.vertex_count) + 1);
  for (int e = 0; e < m; ++e) {
    inc[static_cast<size_t>(g.edges[static_cast<size_t>(e)][0])].push_back(e);
    inc[static_cast<size_t>(g.edges[static_cast<size_t>(e)][1])].push_back(e);
  }
  int flow = 0;
  while (true) {
    std::vector<int> prev_arc(static_cast<size_t>(g.vertex_count) + 1, -1);
    std::vector<int> prev_v(static_cast<size_t>(g.vertex_count) + 1, 0);
    std::queue<int> q;
    q.push(s);
    prev_v[static_cast<size_t>(s)] = s;
    while (!q.empty() && prev_v[static_cast<size_t>(t)] == 0) {
      int v = q.front();
      q.pop();
      for (int e : inc[static_cast<size_t>(v)]) {
        int arc = 2 * e + (g.edges[static_cast<size_t>(e)][0] == v ? 0 : 1);
        if (cap[static_cast<size_t>(arc)] <= 0) continue;
        int w = g.other_end(e, v);
        if (prev_v[static_cast<size_t>(w)] != 0 || w == s) continue;
        prev_v[static_cast<size_t>(w)] = v;
        prev_arc[static_cast<size_t>(w)] = arc;
        q.push(w);
      }
    }
    if (prev_v[static_cast<size_t>(t)] == 0) return flow;
    for (int v = t; v != s; v = prev_v[static_cast<size_t>(v)]) {
      int arc = prev_arc[static_cast<size_t>(v)];
      cap[static_cast<size_t>(arc)] -= 1;
      cap[static_cast<size_t>(arc ^ 1)] += 1;
    }
    ++flow;
  }
}

}  // namespace

int edge_connectivity(const TrivalentPlanarGraph& g) {
  if (g.vertex_count < 2) return 0;
  if (!connected(g)) return 0;
  int best = static_cast<int>(g.edges.size());
  for (int t = 2; t <= g.vertex_count; ++t) best = std::min(best, max_flow(g, 1, t));
  return best;
}

int edge_connectivity_bruteforce(const TrivalentPlanarGraph& g) {
  const int n = g.vertex_count;
  if (n < 2) return 0;
  if (n > 20) throw ValidationError("brute-force cut oracle limited to 20 vertices");
  int best = static_cast<int>(g.edges.size());
  // Vertex 1 stays on the fixed side; enumerate the rest.
  for (unsigned mask = 0; mask + 1 < (1u << (n - 1)); ++mask) {
    int crossing = 0;
    for (const auto& [a, b] : g.edges) {
      bool sa = a == 1 || ((mask >> (a - 2)) & 1u);
      bool sb = b == 1 || ((mask >> (b - 2)) & 1u);
      if (sa != sb) ++crossing;
    }
    best = std::min(best, crossing);
  }
  return best;
}

TrivalentPlanarGraph graph_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    TrivalentPlanarGraph g;
    g.genus = j.at("genus").get<int>();
    g.vertex_count = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair");
      g.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    g.rotation.assign(static_cast<size_t>(std::max(g.vertex_count, 0)), {0, 0, 0});
    const auto& rot = j.at("rotation");
    if (!rot.is_object()) throw ParseError("rotation must be an object");
    if (static_cast<int>(rot.size()) != g.vertex_count)
      throw ParseError("rotation lists " + std::to_string(rot.size()) + " vertices, expected " +
                       std::to_string(g.vertex_count));
    for (const auto& [key, val] : rot.items()) {
      int v = 0;
      try {
        v = std::stoi(key);
      } catch (const std::exception&) {
        throw ParseError("rotation key '" + key + "' is not a vertex id");
      }
      if (v < 1 || v > g.vertex_count)
        throw ParseError("rotation key " + key + " outside 1.." + std::to_string(g.vertex_count));
      if (!val.is_array() || val.size() != 3)
        throw ParseError("rotation of vertex " + key + " must list exactly 3 edges");
      for (int i = 0; i < 3; ++i)
        g.rotation[static_cast<size_t>(v - 1)][static_cast<size_t>(i)] =
            val[static_cast<size_t>(i)].get<int>();
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  }
}

std::string graph_to_json_text(const TrivalentPlanarGraph& g) {
  nlohmann::json j;
  j["schema"] = "gcg/1";
  j["genus"] = g.genus;
  j["vertices"] = g.vertex_count;
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : g.edges) j["edges"].push_back({a, b});
  nlohmann::json rot = nlohmann::json::object();
  for (int v = 1; v <= g.vertex_count; ++v)
    rot[std::to_string(v)] = g.rotation[static_cast<size_t>(v - 1)];
  j["rotation"] = rot;
  return j.dump(2) + "\n";
}

std::string graph_to_dot(const TrivalentPlanarGraph& g) {
  std::ostringstream out;
  out << "graph genus" << g.genus << " {\n";
  FaceSet fs = faces(g);
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
    out << "  // face " << f << ":";
    for (int v : fs.faces[static_cast<size_t>(f)].vertices) out << " v" << v;
    out << "\n";
  }
  for (int v = 1; v <= g.vertex_count; ++v) out << "  v" << v << ";\n";
  for (const auto& [a, b] : g.edges) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace gcg
