#pragma once

// Degeneration calculus on cycles of rational curves: double correspondences
// (involutions of the three allowable kinds), survivor sets, compatibility,
// limit plane chains, and verification that the two limits union to the
// plane configuration of the matching graph.

#include <array>
#include <string>
#include <vector>

#include "gcg/planecfg.hpp"

namespace gcg {

// Cycle of k rational components.  `base` is the printed index origin (1 or
// 0); component indices live in [base, base + k) and wrap modulo k.
struct RationalCycle {
  int k = 0;
  int base = 1;

  int normalize(long long j) const;
};

enum class CorrKind { i, ii, iii };

std::string to_string(CorrKind k);

// Involution j <-> shift - j (mod k) of the components.  Fixed behavior
// classifies the kind: i = two self-paired components (k even, shift even);
// ii = one self-paired component (k odd); iii = none (k even, shift odd;
// the fixed loci are two vertices of the cycle).  anchor is a component
// index for kinds i and ii, and for kind iii the vertex between components
// anchor and anchor + 1.
struct DoubleCorrespondence {
  CorrKind kind = CorrKind::iii;
  RationalCycle cycle;
  int shift = 0;
  int anchor = 0;

  int partner(int j) const;
  std::vector<int> self_paired() const;
  // Unordered pairs in walk order: distance d = 1, 2, ... from the anchor
  // locus, each pair listed once.
  std::vector<std::array<int, 2>> walk() const;
};

DoubleCorrespondence make_correspondence(const RationalCycle& c, CorrKind kind, int anchor);

// The g+1 components surviving as lines; indices ascending.
struct SurvivorSet {
  RationalCycle cycle;
  std::vector<int> indices;

  int genus() const { return static_cast<int>(indices.size()) - 1; }
  bool survives(int j) const;
};

SurvivorSet make_survivors(const RationalCycle& c, std::vector<int> indices);

struct Compatibility {
  bool ok = false;
  std::string diagnostic;
  std::array<std::array<int, 2>, 2> end_pairs{{{0, 0}, {0, 0}}};  // first and last alpha pair
};

// Conditions: (a) self-paired components are contracted; (b) from each fixed
// locus, the first pair reached that meets the survivors has both members
// surviving; (c) no other pair has both members surviving.
Compatibility is_compatible(const SurvivorSet& s, const DoubleCorrespondence& c);

// Chain of g-1 planes through the g+1 coordinate points p_1..p_{g+1}:
// survivor number j becomes line l_j = {p_{j-1}, p_j}, the run contracted
// after survivor j becomes p_j.  Walk order from the anchor locus; the two
// ends are alpha planes spanned by line pairs, interior planes span a line
// and a contraction point.
struct LimitChain {
  PlaneConfig config;  // facets in chain order, named by position 1..g-1
  SpanTable spans;
};

LimitChain limit_planes(const SurvivorSet& s, const DoubleCorrespondence& c);

// One degeneration instance: survivors plus the two correspondences.
struct GenusData {
  int genus = 0;
  SurvivorSet survivors;
  DoubleCorrespondence corrA, corrB;
  std::string note;  // nonempty when the data deviates from the series rule
};

GenusData odd_genus_data(int n);   // genus 2n+1, n >= 3
GenusData even_genus_data(int n);  // genus 2n+2; instance validated, may throw
GenusData tilde_data(int g);       // g = 7 or 8
GenusData standard_genus_data(int g);

// Facet union of two chains on the same point set; rejects duplicate facets.
PlaneConfig union_config(const PlaneConfig& a, const PlaneConfig& b);

struct UnionReport {
  bool ok = false;
  std::string diagnostic;
  PlaneConfig unioned;
  std::vector<int> facet_map;  // union facet -> target facet
};

// Runs both limits, checks the union's double curve is the g+1 line cycle,
// and tests isomorphism with the target configuration.
UnionReport verify_union(const GenusData& data, const PlaneConfig& target);

std::string data_to_json_text(const GenusData& d);

}  // namespace gcg
