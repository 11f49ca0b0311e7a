#pragma once

// The Wahl map of a graph curve as an exact integer matrix, with certified
// corank.  Columns are wedge pairs of basis cycles; rows split into one
// 3-differential coefficient per component and one torsion coefficient per
// node, 5g-5 rows in total.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gcg/graph.hpp"
#include "gcg/rank.hpp"

namespace gcg {

// One rational component per vertex with its three nodes at local
// coordinates 0, 1, infinity; slots follow rotation order by default.
// slot_of[e][0] is the slot of edge e on its lower endpoint, [1] the upper.
struct CurveModel {
  std::vector<std::array<int, 3>> edge_at;  // [v-1][slot] -> edge id
  std::vector<std::array<int, 2>> slot_of;  // [e][end] -> slot
  std::vector<int> edge_sign;               // +1 low-to-high, -1 flipped
};

CurveModel curve_model(const TrivalentPlanarGraph& g);

// Restriction of a cycle's differential to every component.  At vertex v the
// form is r0 dz/z + r1 dz/(z-1) with r_inf = -r0 - r1; residue[v-1][slot]
// stores these, and sigma[v-1][slot] the next Laurent coefficient of the
// form in the local coordinate at that slot.
struct OmegaSection {
  std::vector<long long> cycle;
  std::vector<std::array<long long, 3>> residue;
  std::vector<std::array<long long, 3>> sigma;
};

// Signed residues from the low-to-high edge orientation: an oriented edge
// contributes +cycle[e] at its head and -cycle[e] at its tail.  Rejects
// vectors with nonzero divergence.
OmegaSection omega_restrictions(const TrivalentPlanarGraph& g, const CurveModel& m,
                                const std::vector<long long>& cycle);

// Wronskian coefficient of two restricted forms on the component of v,
// expressed against the generator (dz)^3 / (z^2 (z-1)^2).
long long wronskian_component(const OmegaSection& s, const OmegaSection& t, int v);

// Coefficient on the torsion of Omega^1 x omega^2 at the node of edge e;
// derivation documented at the definition.
long long torsion_component(const TrivalentPlanarGraph& g, const CurveModel& m,
                            const OmegaSection& s, const OmegaSection& t, int e);

struct GaussianMatrix {
  int genus = 0;
  std::vector<std::array<int, 2>> columns;  // basis-cycle pairs (i, j), i < j
  IntMatrix entries;                        // 2g-2 component rows, then 3g-3 node rows
};

// Matrix over the default model and face-boundary cycle basis.
GaussianMatrix gaussian_matrix(const TrivalentPlanarGraph& g);

// Matrix over an explicit model and cycle basis (used by convention audits).
GaussianMatrix gaussian_matrix(const TrivalentPlanarGraph& g, const CurveModel& m,
                               const std::vector<std::vector<long long>>& basis);

// (2g-2) + (3g-3) = 5g-5, the nodal-curve count matching h^0 of the cube of
// the dualizing sheaf on a smooth genus-g curve.
int target_dimension(const TrivalentPlanarGraph& g);

struct CorankCertificate {
  int genus = 0;
  int domain_dim = 0;
  int target_dim = 0;
  int rank = 0;
  int corank = 0;
  std::vector<RankBackend> backends;
};

// Certified corank: fraction-free rank plus modular confirmation; backend
// disagreement throws InvariantViolation.
CorankCertificate corank(const GaussianMatrix& m, std::uint64_t seed);

// Rebuilds the matrix under randomized legal re-conventions: per-vertex slot
// permutations, edge orientation flips, a different omitted face, and a
// unimodular change of the cycle basis.  Corank must be unaffected.
GaussianMatrix convention_shuffle(const TrivalentPlanarGraph& g, std::uint64_t seed);

std::string certificate_to_json_text(const CorankCertificate& c);
std::string matrix_to_csv(const GaussianMatrix& m);

}  // namespace gcg
