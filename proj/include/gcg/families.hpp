#pragma once

// Constructors for the graph families: the standard genus-g graphs with their
// A/B chain decompositions, prisms, and the reconstructed tilde graphs.

#include <vector>

#include "gcg/graph.hpp"

namespace gcg {

// Ordered halves of the vertex set; each part induces a path in the graph.
struct ChainDecomposition {
  int genus = 0;
  std::vector<int> part_A;
  std::vector<int> part_B;
};

// Standard genus-g graph, g >= 7: three concentric rings with spokes for odd
// g; for even g the genus g-1 graph with two vertices inserted on the first
// ring and one chord joining them.  Rotations realise the concentric-ring
// drawing.
TrivalentPlanarGraph standard_graph(int g);

// The fixed path decomposition of standard_graph(g); throws
// InvariantViolation if either part fails the path property.
ChainDecomposition ab_decomposition(int g);

// Two m-cycles joined by m rungs, m >= 3; genus m+1.
TrivalentPlanarGraph prism_graph(int m);

// Genus 7 or 8 graph reconstructed from the cycle degeneration data: the dual
// graph of the union of the two limit plane chains.
TrivalentPlanarGraph tilde_graph(int g);

// Edge ids with one endpoint in each part; exactly g+1 of them.
std::vector<int> crossing_edges(const TrivalentPlanarGraph& g, const ChainDecomposition& d);

}  // namespace gcg
