#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "gcg/errors.hpp"
#include "gcg/numerology.hpp"

using namespace gcg;

TEST_CASE("dimension formulas at worked genera") {
  auto r11 = dimensions(11);
  CHECK(r11.dim_H == 162);
  CHECK(r11.dim_C == 161);
  CHECK(r11.dim_F == 173);
  CHECK(dimensions(7).dim_H == 82);
  CHECK(dimensions(12).projective_group_dim == 195);
}

TEST_CASE("dimension identities hold across the range") {
  for (int g = 3; g <= 30; ++g) {
    CAPTURE(g);
    auto r = dimensions(g);
    const long long gl = g;
    CHECK(r.dim_F - r.dim_H == gl);
    CHECK(r.dim_F - r.dim_C == 23 - gl);
    CHECK(r.projective_group_dim == gl * gl + 4 * gl + 3);
    CHECK(r.t1_degree == 16);
    CHECK(r.t1_degree == 2 * 8);
  }
  CHECK_THROWS_AS(dimensions(2), ValidationError);
}

TEST_CASE("fiber dimension case table") {
  auto f8 = fiber_dimension(8, 7, 0);
  CHECK(f8.value == 15);
  CHECK(f8.consistent);  // meets the 23 - g ceiling exactly
  CHECK(f8.detail.find("23 - g") != std::string::npos);

  auto f13 = fiber_dimension(13, 1, 0);
  CHECK(f13.value == 14);
  CHECK(f13.consistent);

  auto f12 = fiber_dimension(12, 2, 0);
  CHECK(f12.value == 14);
  CHECK(f12.consistent);
  CHECK(f12.detail.find("14") != std::string::npos);

  // The genus-12 slot demands equality, so any other corank is flagged.
  CHECK_FALSE(fiber_dimension(12, 3, 0).consistent);

  CHECK(fiber_dimension(11, 1, 0).consistent);
  CHECK(fiber_dimension(10, 4, 0).consistent);
  CHECK_FALSE(fiber_dimension(10, 7, 0).consistent);
  CHECK(fiber_dimension(14, 1, 0).consistent);
  CHECK_FALSE(fiber_dimension(14, 2, 0).consistent);
  CHECK_FALSE(fiber_dimension(9, 10, 0).consistent);

  CHECK_THROWS_AS(fiber_dimension(5, 1, 0), ValidationError);
  CHECK_THROWS_AS(fiber_dimension(8, -1, 0), ValidationError);
  CHECK_THROWS_AS(fiber_dimension(8, 1, -1), ValidationError);
}

TEST_CASE("cone codimension is corank plus tail") {
  CHECK(cone_codimension(1, 0) == 1);
  CHECK(cone_codimension(2, 0) == 2);
  CHECK(cone_codimension(0, 0) == 0);
  // Corank is at least 1 for every graph curve, so codimension one pins
  // (1, 0) among the reachable inputs.
  for (int gamma = 1; gamma <= 5; ++gamma)
    for (int tail = 0; tail <= 3; ++tail)
      CHECK((cone_codimension(gamma, tail) == 1) == (gamma == 1 && tail == 0));
  CHECK_THROWS_AS(cone_codimension(-1, 0), ValidationError);
}

TEST_CASE("tangent bound values") {
  CHECK(fano_tangent_bound(12, 2) == 201);
  CHECK(fano_tangent_bound(7, 9) == 98);
  CHECK(fano_tangent_bound(6, 10) == 85);  // carries the genus-6 extra term
  CHECK(fano_tangent_bound(11, 1) == 174);
  CHECK(fano_tangent_bound(6, 10) - fano_tangent_bound(6, 8) == 2);
  CHECK_THROWS_AS(fano_tangent_bound(5, 1), ValidationError);
}

TEST_CASE("parameter table is consistent both ways") {
  auto checks = table_two();
  REQUIRE(checks.size() == 6);
  std::set<int> genera;
  for (const auto& c : checks) {
    CAPTURE(c.row.genus);
    CHECK(c.ok);
    genera.insert(c.row.genus);
    CHECK(c.row.parameters ==
          c.row.moduli + dimensions(c.row.genus).projective_group_dim);
    CHECK(c.row.parameters == fano_tangent_bound(c.row.genus, c.row.gamma));
  }
  CHECK(genera == std::set<int>{6, 7, 8, 9, 10, 12});

  // Spot values as printed.
  auto rows = table_two_rows();
  for (const auto& r : rows) {
    if (r.genus == 9) {
      CHECK(r.moduli == 12);
      CHECK(r.parameters == 132);
    }
    if (r.genus == 10) {
      CHECK(r.moduli == 10);
      CHECK(r.parameters == 153);
    }
    if (r.genus == 6) {
      CHECK(r.moduli == 22);
      CHECK(r.parameters == 85);
    }
  }
}

TEST_CASE("surjective-range fibers meet their ceiling") {
  // Rows with 6 <= g <= 9 use the 23 - g bound; the coranks for 7..9 land
  // exactly on it, genus 6 sits one under.
  for (const auto& r : table_two_rows()) {
    if (r.genus > 9) continue;
    auto f = fiber_dimension(r.genus, r.gamma, 0);
    CHECK(f.consistent);
    if (r.genus >= 7) CHECK(f.value == 23 - r.genus);
    if (r.genus == 6) CHECK(f.value == 16);
  }
}
