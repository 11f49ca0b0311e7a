#pragma once

// Unions of coordinate planes and lines as simplicial complexes: Hilbert
// functions, chain and double-curve extraction, span tables, and the dual
// graph reconstruction.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gcg/families.hpp"
#include "gcg/graph.hpp"

namespace gcg {

// Pure simplicial complex on coordinate points of P^ambient.  Facets have
// size 3 (planes) or 2 (lines); facet order is meaningful for chains.
// facet_names, when nonempty, carries one external id per facet (the graph
// vertex for graph-derived configs, the chain position for limit chains).
struct PlaneConfig {
  int ambient = 0;
  std::vector<int> points;
  std::vector<std::vector<int>> facets;
  std::vector<int> facet_names;

  bool is_face(const std::vector<int>& labels) const;
};

// One size-3 facet per vertex: its three adjacent faces.  Requires edge
// connectivity >= 3 so that facet intersections mirror graph adjacency.
PlaneConfig config_from_graph(const TrivalentPlanarGraph& g);

// (facet i, facet j, number of shared labels) for all i < j.
std::vector<std::array<int, 3>> pairwise_intersections(const PlaneConfig& c);

// Face counts (f_0, f_1, f_2) of the complex generated by the facets.
std::array<long long, 3> f_vector(const PlaneConfig& c);

// Hilbert function of the coordinate-subspace union: H(0) = 1 and
// H(d) = f_0 + f_1 (d-1) + f_2 (d-1)(d-2)/2 for d >= 1.
long long hilbert_function(const PlaneConfig& c, int d);

// Independent oracle: the number of degree-d monomials whose support is a
// face.  Exponential in the point count; intended for small checks.
long long hilbert_monomial_count(const PlaneConfig& c, int d);

enum class Part { A, B };

// Sub-configuration on the facets of one part, in part order.  Verifies the
// chain property: consecutive facets share 2 labels, others at most 1.
PlaneConfig chain_config(const TrivalentPlanarGraph& g, const ChainDecomposition& d, Part part);

// Size-2 faces lying in a facet of each side; must form one closed cycle
// through all ambient+1 points.
PlaneConfig double_curve(const PlaneConfig& a, const PlaneConfig& b);

// Span vocabulary: lines l_1..l_{g+1} around the double curve and points
// p_j = l_j n l_{j+1}.  An end plane is spanned by two lines, an interior
// plane by a point and a line.
struct SpanRef {
  char kind = 'l';  // 'l' or 'p'
  int index = 0;    // 1-based, cyclic modulo g+1
  bool operator==(const SpanRef&) const = default;
};

struct SpanRow {
  int plane = 0;  // facet name
  SpanRef first, second;
  bool operator==(const SpanRow&) const = default;
};

struct SpanTable {
  std::vector<SpanRow> rows;
  bool operator==(const SpanTable&) const = default;
};

std::string to_string(const SpanRef& r);
std::string to_string(const SpanTable& t);

// Span table of a chain against its double curve.  The line numbering is
// pinned by: the first chain plane is spanned by l_1 and l_{g+1}, and the
// second chain plane contains p_1; remaining ties break by enumeration order
// of the cycle starts.
SpanTable span_table(const PlaneConfig& chain, const PlaneConfig& dcurve);

// Inverse of config_from_graph: dual graph of a plane union with a rotation
// system recovered by orientation propagation.
TrivalentPlanarGraph graph_from_config(const PlaneConfig& c);

// Combinatorial isomorphism test via seeded propagation over the dual graphs.
// On success *facet_witness (if given) maps facet i of a to facet of b.
bool isomorphic_configs(const PlaneConfig& a, const PlaneConfig& b,
                        std::vector<int>* facet_witness = nullptr);

}  // namespace gcg
