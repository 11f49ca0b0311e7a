#include "gcg/numerology.hpp"

#include "gcg/errors.hpp"

namespace gcg {

DimensionReport dimensions(int g) {
  if (g < 3) throw ValidationError("dimension formulas need genus >= 3");
  const long long gl = g;
  DimensionReport r;
  r.genus = g;
  r.dim_H = gl * gl + 2 * gl + 19;
  r.dim_C = gl * gl + 4 * gl - 4;
  r.dim_F = gl * gl + 3 * gl + 19;
  r.projective_group_dim = gl * gl + 4 * gl + 3;
  r.t1_degree = 16;
  if (r.dim_F != r.dim_H + gl || r.dim_F - r.dim_C != 23 - gl)
    throw InvariantViolation("dimension identities failed");
  return r;
}

FiberCheck fiber_dimension(int g, int gamma, int h0_tail) {
  if (g < 6) throw ValidationError("fiber dimension table starts at genus 6");
  if (gamma < 0 || h0_tail < 0) throw ValidationError("corank and tail must be nonnegative");
  FiberCheck f;
  f.value = static_cast<long long>(g) + gamma + h0_tail;
  if ((g >= 6 && g <= 9) || g == 11) {
    f.consistent = f.value <= 23 - g;
    f.detail = "bound 23 - g = " + std::to_string(23 - g);
  } else if (g == 10) {
    f.consistent = f.value <= 14;
    f.detail = "bound 14";
  } else if (g == 12) {
    f.consistent = f.value == 14;
    f.detail = "expected exactly 14";
  } else {
    f.consistent = f.value == g + 1;
    f.detail = "expected exactly g + 1 = " + std::to_string(g + 1);
  }
  return f;
}

long long cone_codimension(int gamma, int h0_tail) {
  if (gamma < 0 || h0_tail < 0) throw ValidationError("corank and tail must be nonnegative");
  return static_cast<long long>(gamma) + h0_tail;
}

long long fano_tangent_bound(int g, int gamma) {
  if (g < 6) throw ValidationError("tangent bound needs genus >= 6");
  const long long gl = g;
  return gl * gl + 3 * gl + 19 + gamma + (g == 6 ? 2 : 0);
}

std::vector<TableTwoRow> table_two_rows() {
  return {
      {6, 22, 85, 10}, {7, 18, 98, 9},   {8, 15, 114, 7},
      {9, 12, 132, 5}, {10, 10, 153, 4}, {12, 6, 201, 2},
  };
}

std::vector<TableTwoCheck> table_two() {
  std::vector<TableTwoCheck> out;
  for (const auto& row : table_two_rows()) {
    TableTwoCheck c;
    c.row = row;
    long long via_moduli = row.moduli + dimensions(row.genus).projective_group_dim;
    long long via_bound = fano_tangent_bound(row.genus, row.gamma);
    c.ok = via_moduli == row.parameters && via_bound == row.parameters;
    c.detail = "moduli + group = " + std::to_string(via_moduli) +
               ", tangent bound = " + std::to_string(via_bound) +
               ", parameters = " + std::to_string(row.parameters);
    out.push_back(c);
  }
  return out;
}

}  // namespace gcg
