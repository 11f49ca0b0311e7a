#pragma once

// Closed-form dimension and degree identities for the Hilbert-scheme side,
// plus the six-row parameter table audit.

#include <string>
#include <vector>

namespace gcg {

struct DimensionReport {
  int genus = 0;
  long long dim_H = 0;                // g^2 + 2g + 19
  long long dim_C = 0;                // g^2 + 4g - 4
  long long dim_F = 0;                // g^2 + 3g + 19
  long long projective_group_dim = 0; // g^2 + 4g + 3
  int t1_degree = 16;                 // 2 x 8, one factor per ruling side
};

DimensionReport dimensions(int g);

struct FiberCheck {
  long long value = 0;  // g + gamma + tail
  bool consistent = false;
  std::string detail;
};

// Checks g + gamma + tail against the per-genus expectations: at most 23-g
// for 6 <= g <= 9 and g = 11, at most 14 for g = 10, exactly 14 for g = 12,
// exactly g+1 for g >= 13.
FiberCheck fiber_dimension(int g, int gamma, int h0_tail);

// gamma + tail; with corank at least one this equals 1 exactly when
// (gamma, tail) = (1, 0).
long long cone_codimension(int gamma, int h0_tail);

// g^2 + 3g + 19 + gamma, plus 2 in the special genus-6 case.
long long fano_tangent_bound(int g, int gamma);

struct TableTwoRow {
  int genus = 0;
  int moduli = 0;
  long long parameters = 0;
  int gamma = 0;
};

std::vector<TableTwoRow> table_two_rows();

struct TableTwoCheck {
  TableTwoRow row;
  bool ok = false;
  std::string detail;
};

// Per row: parameters = moduli + (g^2 + 4g + 3) and parameters equals the
// tangent bound at (g, gamma).
std::vector<TableTwoCheck> table_two();

}  // namespace gcg
