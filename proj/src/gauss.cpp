#include "gcg/gauss.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "json.hpp"

namespace gcg {

CurveModel curve_model(const TrivalentPlanarGraph& g) {
  CurveModel m;
  m.edge_at.resize(static_cast<size_t>(g.vertex_count));
  m.slot_of.assign(g.edges.size(), {-1, -1});
  m.edge_sign.assign(g.edges.size(), 1);
  for (int v = 1; v <= g.vertex_count; ++v) {
    m.edge_at[static_cast<size_t>(v - 1)] = g.rotation[static_cast<size_t>(v - 1)];
    for (int slot = 0; slot < 3; ++slot) {
      int e = m.edge_at[static_cast<size_t>(v - 1)][static_cast<size_t>(slot)];
      int end = g.edges[static_cast<size_t>(e)][0] == v ? 0 : 1;
      m.slot_of[static_cast<size_t>(e)][static_cast<size_t>(end)] = slot;
    }
  }
  return m;
}

OmegaSection omega_restrictions(const TrivalentPlanarGraph& g, const CurveModel& m,
                                const std::vector<long long>& cycle) {
  if (cycle.size() != g.edges.size())
    throw ValidationError("cycle vector length does not match edge count");
  for (int v = 1; v <= g.vertex_count; ++v) {
    long long div = 0;
    for (int e : g.incident_edges(v)) {
      long long signed_entry = cycle[static_cast<size_t>(e)] * m.edge_sign[static_cast<size_t>(e)];
      div += g.edges[static_cast<size_t>(e)][1] == v ? signed_entry : -signed_entry;
    }
    if (div != 0)
      throw ValidationError("vector has nonzero divergence at vertex " + std::to_string(v) +
                            ": not a cycle");
  }
  OmegaSection s;
  s.cycle = cycle;
  s.residue.assign(static_cast<size_t>(g.vertex_count), {0, 0, 0});
  s.sigma.assign(static_cast<size_t>(g.vertex_count), {0, 0, 0});
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    long long val = cycle[static_cast<size_t>(e)] * m.edge_sign[static_cast<size_t>(e)];
    int lo = g.edges[static_cast<size_t>(e)][0], hi = g.edges[static_cast<size_t>(e)][1];
    s.residue[static_cast<size_t>(lo - 1)][static_cast<size_t>(m.slot_of[static_cast<size_t>(e)][0])] = -val;
    s.residue[static_cast<size_t>(hi - 1)][static_cast<size_t>(m.slot_of[static_cast<size_t>(e)][1])] = val;
  }
  // Next Laurent coefficient of r0 dz/z + r1 dz/(z-1) in the local
  // coordinate at each slot: z at 0, z-1 at 1, 1/z at infinity.
  //   at 0:   r0/z - r1 (1 + z + ...)        -> sigma = -r1
  //   at 1:   r1/u + r0 (1 - u + ...)        -> sigma = +r0   (u = z-1)
  //   at inf: -(r0+r1)/w - r1 (1 + w + ...)  -> sigma = -r1   (w = 1/z)
  for (int v = 0; v < g.vertex_count; ++v) {
    auto& r = s.residue[static_cast<size_t>(v)];
    s.sigma[static_cast<size_t>(v)] = {-r[1], r[0], -r[1]};
  }
  return s;
}

long long wronskian_component(const OmegaSection& s, const OmegaSection& t, int v) {
  const auto& rs = s.residue[static_cast<size_t>(v - 1)];
  const auto& rt = t.residue[static_cast<size_t>(v - 1)];
  // For f = a/z + b/(z-1) and g = c/z + d/(z-1):
  //   f'g - fg' = (ad - bc) / (z^2 (z-1)^2),
  // the order-3 poles cancelling by antisymmetry, so the image on this
  // component is (ad - bc) times the generator (dz)^3 / (z^2 (z-1)^2).
  return rs[0] * rt[1] - rt[0] * rs[1];
}

// Torsion coefficient at a node.  Local model xy = 0, with x the coordinate
// on the lower endpoint's branch and y on the upper's.  Write sections of
// the dualizing sheaf as a(x, y) eta with eta = dx/x = -dy/y and
// a = a0 + a1 x + a2 y (mod degree 2; xy vanishes).  Restricting, the
// residue is a0 on the x-branch and -a0 on the y-branch, and the next
// Laurent coefficients are sigma_x = a1, sigma_y = -a2.
//
// The map sends s ^ t to the conormal class of a(P)b(Q) - b(P)a(Q) along
// the diagonal, which is (a db - b da) eta^2.  On the node, Kaehler
// differentials obey y dx = -x dy and x^2 dy = y^2 dx = 0, so any form
// u dx + v dy splits as branchwise-smooth forms plus
// (dv/dx - du/dy)(0) times the torsion generator tau = x dy.  For
// u dx + v dy = a db - b da this coefficient is 2 (a1 b2 - a2 b1), i.e.
// -2 (sigma_x(s) sigma_y(t) - sigma_x(t) sigma_y(s)).  The factor -2 is a
// fixed row scaling and is dropped.
long long torsion_component(const TrivalentPlanarGraph& g, const CurveModel& m,
                            const OmegaSection& s, const OmegaSection& t, int e) {
  int lo = g.edges[static_cast<size_t>(e)][0], hi = g.edges[static_cast<size_t>(e)][1];
  int slot_lo = m.slot_of[static_cast<size_t>(e)][0], slot_hi = m.slot_of[static_cast<size_t>(e)][1];
  long long su = s.sigma[static_cast<size_t>(lo - 1)][static_cast<size_t>(slot_lo)];
  long long sv = s.sigma[static_cast<size_t>(hi - 1)][static_cast<size_t>(slot_hi)];
  long long tu = t.sigma[static_cast<size_t>(lo - 1)][static_cast<size_t>(slot_lo)];
  long long tv = t.sigma[static_cast<size_t>(hi - 1)][static_cast<size_t>(slot_hi)];
  return su * tv - tu * sv;
}

int target_dimension(const TrivalentPlanarGraph& g) {
  // One row per component (3-differentials with double poles at three marked
  // points of P^1 form a line) plus one torsion row per node.  The count
  // (2g-2) + (3g-3) = 5g-5 agrees with h^0 of omega^3 on a smooth genus-g
  // curve, and the two extractions are jointly injective on the target, so
  // matrix corank equals map corank.
  return 5 * g.genus - 5;
}

GaussianMatrix gaussian_matrix(const TrivalentPlanarGraph& g, const CurveModel& m,
                               const std::vector<std::vector<long long>>& basis) {
  std::vector<OmegaSection> sections;
  sections.reserve(basis.size());
  for (const auto& c : basis) sections.push_back(omega_restrictions(g, m, c));
  GaussianMatrix out;
  out.genus = g.genus;
  const int n = static_cast<int>(basis.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.columns.push_back({i, j});
  const size_t rows = static_cast<size_t>(g.vertex_count + static_cast<int>(g.edges.size()));
  out.entries.assign(rows, std::vector<long long>(out.columns.size(), 0));
  for (size_t col = 0; col < out.columns.size(); ++col) {
    const auto& s = sections[static_cast<size_t>(out.columns[col][0])];
    const auto& t = sections[static_cast<size_t>(out.columns[col][1])];
    for (int v = 1; v <= g.vertex_count; ++v)
      out.entries[static_cast<size_t>(v - 1)][col] = wronskian_component(s, t, v);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
      out.entries[static_cast<size_t>(g.vertex_count + e)][col] =
          torsion_component(g, m, s, t, e);
  }
  return out;
}

GaussianMatrix gaussian_matrix(const TrivalentPlanarGraph& g) {
  return gaussian_matrix(g, curve_model(g), cycle_basis(g).vectors);
}

CorankCertificate corank(const GaussianMatrix& m, std::uint64_t seed) {
  CorankCertificate c;
  c.genus = m.genus;
  c.domain_dim = static_cast<int>(m.columns.size());
  c.target_dim = static_cast<int>(m.entries.size());
  if (c.target_dim != 5 * m.genus - 5)
    throw InvariantViolation("matrix row count is not 5g-5");
  RankCertificate rc = certified_rank(m.entries, seed);
  c.rank = rc.rank;
  c.corank = c.target_dim - c.rank;
  c.backends = rc.backends;
  return c;
}

GaussianMatrix convention_shuffle(const TrivalentPlanarGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CurveModel m = curve_model(g);
  for (int v = 0; v < g.vertex_count; ++v) {
    std::array<int, 3> perm = {0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    auto& at = m.edge_at[static_cast<size_t>(v)];
    std::array<int, 3> old = at;
    for (int slot = 0; slot < 3; ++slot) {
      int e = old[static_cast<size_t>(perm[static_cast<size_t>(slot)])];
      at[static_cast<size_t>(slot)] = e;
      int end = g.edges[static_cast<size_t>(e)][0] == v + 1 ? 0 : 1;
      m.slot_of[static_cast<size_t>(e)][static_cast<size_t>(end)] = slot;
    }
  }

  int face_count = static_cast<int>(faces(g).faces.size());
  int omit = static_cast<int>(rng() % static_cast<std::uint64_t>(face_count));
  auto basis = cycle_basis(g, omit).vectors;

  // Orientation flips: reversing an edge negates every cycle entry there and
  // flips the residue sign rule, leaving the underlying sections unchanged.
  for (size_t e = 0; e < g.edges.size(); ++e)
    if (rng() % 2 == 0) {
      m.edge_sign[e] = -1;
      for (auto& vec : basis) vec[e] = -vec[e];
    }

  // Unimodular basis change, kept to few elementary steps to bound entries.
  const int n = static_cast<int>(basis.size());
  for (int step = 0; step < 12; ++step) {
    int kind = static_cast<int>(rng() % 3);
    int i = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    int j = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (kind == 0 && i != j) {
      long long f = rng() % 2 == 0 ? 1 : -1;
      for (size_t e = 0; e < g.edges.size(); ++e)
        basis[static_cast<size_t>(j)][e] += f * basis[static_cast<size_t>(i)][e];
    } else if (kind == 1) {
      std::swap(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]);
    } else {
      for (size_t e = 0; e < g.edges.size(); ++e)
        basis[static_cast<size_t>(i)][e] = -basis[static_cast<size_t>(i)][e];
    }
  }
  return gaussian_matrix(g, m, basis);
}

std::string certificate_to_json_text(const CorankCertificate& c) {
  nlohmann::json j;
  j["schema"] = "gcg/1";
  j["genus"] = c.genus;
  j["domain_dim"] = c.domain_dim;
  j["target_dim"] = c.target_dim;
  j["rank"] = c.rank;
  j["corank"] = c.corank;
  j["backends"] = nlohmann::json::array();
  for (const auto& b : c.backends) {
    nlohmann::json jb;
    jb["kind"] = b.kind;
    jb["rank"] = b.rank;
    if (b.prime != 0) jb["prime"] = b.prime;
    j["backends"].push_back(jb);
  }
  return j.dump(2) + "\n";
}

std::string matrix_to_csv(const GaussianMatrix& m) {
  std::ostringstream out;
  out << "row";
  for (const auto& col : m.columns) out << ",c" << col[0] << "^c" << col[1];
  out << "\n";
  const int verts = 2 * m.genus - 2;
  for (size_t r = 0; r < m.entries.size(); ++r) {
    if (static_cast<int>(r) < verts)
      out << "component:" << (r + 1);
    else
      out << "node:" << (static_cast<int>(r) - verts);
    for (long long x : m.entries[r]) out << "," << x;
    out << "\n";
  }
  return out.str();
}

}  // namespace gcg
