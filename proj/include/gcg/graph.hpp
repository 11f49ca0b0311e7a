#pragma once

// Trivalent planar graphs with an explicit rotation system, face traversal,
// cycle space, and exact edge connectivity.

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "gcg/errors.hpp"

namespace gcg {

// Vertices are 1-based (1..vertex_count), edges are 0-based indices into
// `edges`.  A valid genus-g graph has 2g-2 vertices, 3g-3 edges and g+1
// faces.  `rotation[v-1]` lists the three incident edges of v in the cyclic
// order of the planar embedding.
struct TrivalentPlanarGraph {
  int genus = 0;
  int vertex_count = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> rotation;

  // Endpoint of e other than v; requires v to be an endpoint of e.
  int other_end(int e, int v) const;
  bool has_endpoint(int e, int v) const;
  std::vector<int> incident_edges(int v) const;
  std::vector<int> neighbors(int v) const;
};

struct ValidationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Shape errors (indices out of range, malformed rotation entries) are kept
// apart from semantic failures: a graph with shape errors never reaches the
// semantic checks.
struct ValidationReport {
  std::vector<std::string> shape_errors;
  std::vector<ValidationCheck> checks;
  int genus = 0;

  bool shape_ok() const { return shape_errors.empty(); }
  bool valid() const;
};

ValidationReport validate(const TrivalentPlanarGraph& g);

// Closed face walk; edges[i] is traversed from vertices[i] to vertices[i+1]
// (cyclically).
struct Face {
  std::vector<int> edges;
  std::vector<int> vertices;

  bool contains_vertex(int v) const;
};

struct FaceSet {
  std::vector<Face> faces;

  // Face indices adjacent to v in ascending order; exactly three distinct
  // ones for a valid graph.
  std::vector<int> faces_at_vertex(int v) const;
};

// Orbits of the rotation system; every directed edge lies in exactly one walk.
// Face indices follow discovery order and are stable for a fixed graph.
FaceSet faces(const TrivalentPlanarGraph& g);

// Integer vectors over the edges, each oriented from lower to higher vertex
// index.  The default basis consists of the boundaries of all faces except
// the distinguished one (highest index unless overridden).
struct CycleBasis {
  int genus = 0;
  int omitted_face = -1;
  std::vector<std::vector<long long>> vectors;
};

CycleBasis cycle_basis(const TrivalentPlanarGraph& g, int omit_face = -1);

// Signed boundary vector of one face, low-to-high orientation convention.
std::vector<long long> face_boundary(const TrivalentPlanarGraph& g, const Face& f);

// Net signed flow of `vec` at v: +entry for edges oriented into v, -entry for
// edges oriented out of v.  Zero at every vertex characterises a cycle.
long long divergence(const TrivalentPlanarGraph& g, const std::vector<long long>& vec, int v);

// Exact global min edge cut via repeated unit-capacity max-flow; 0 for a
// disconnected graph.  Works on any simple graph, not just valid ones.
int edge_connectivity(const TrivalentPlanarGraph& g);

// Independent oracle: minimum crossing-edge count over all proper vertex
// bipartitions.  Exponential; restricted to small graphs.
int edge_connectivity_bruteforce(const TrivalentPlanarGraph& g);

// JSON graph format:
//   {"schema": "gcg/1", "genus": g, "vertices": n,
//    "edges": [[u,v], ...], "rotation": {"1": [e,e,e], ...}}
TrivalentPlanarGraph graph_from_json_text(const std::string& text);
std::string graph_to_json_text(const TrivalentPlanarGraph& g);

// DOT export: one node per vertex, plain undirected edges, faces as comments.
std::string graph_to_dot(const TrivalentPlanarGraph& g);

}  // namespace gcg
