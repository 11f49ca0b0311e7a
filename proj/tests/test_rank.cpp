#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "gcg/errors.hpp"
#include "gcg/rank.hpp"

using gcg::IntMatrix;

TEST_CASE("rank of empty and zero matrices") {
  CHECK(gcg::rank_bareiss({}) == 0);
  CHECK(gcg::rank_bareiss({{0, 0}, {0, 0}, {0, 0}}) == 0);
  CHECK(gcg::rank_modular({{0, 0}, {0, 0}}, (1ull << 31) - 1) == 0);
}

TEST_CASE("rank of identity and simple singular matrices") {
  IntMatrix id = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(gcg::rank_bareiss(id) == 3);
  IntMatrix sing = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(gcg::rank_bareiss(sing) == 2);
  IntMatrix rect = {{1, 2, 3, 4}, {0, 0, 0, 5}};
  CHECK(gcg::rank_bareiss(rect) == 2);
  IntMatrix tall = {{3}, {0}, {7}};
  CHECK(gcg::rank_bareiss(tall) == 1);
}

TEST_CASE("bareiss survives a column with no pivot") {
  IntMatrix m = {{0, 1, 5}, {0, 2, 11}, {0, 3, 17}};
  CHECK(gcg::rank_bareiss(m) == 2);
}

TEST_CASE("random products have the planted rank") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    int rows = 4 + static_cast<int>(rng() % 8);
    int cols = 4 + static_cast<int>(rng() % 8);
    int r = 1 + static_cast<int>(rng() % 3);
    IntMatrix left(rows, std::vector<long long>(r));
    IntMatrix right(r, std::vector<long long>(cols));
    for (auto& row : left)
      for (auto& x : row) x = coef(rng);
    for (auto& row : right)
      for (auto& x : row) x = coef(rng);
    IntMatrix prod(rows, std::vector<long long>(cols, 0));
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < r; ++k)
        for (int j = 0; j < cols; ++j) prod[i][j] += left[i][k] * right[k][j];
    int rank = gcg::rank_bareiss(prod);
    CHECK(rank <= r);
    auto cert = gcg::certified_rank(prod, 1234 + static_cast<std::uint64_t>(trial));
    CHECK(cert.rank == rank);
  }
}

TEST_CASE("random prime generation is deterministic and in range") {
  auto p1 = gcg::random_rank_primes(42, 3);
  auto p2 = gcg::random_rank_primes(42, 3);
  CHECK(p1 == p2);
  CHECK(p1.size() == 3);
  for (auto p : p1) {
    CHECK(p > (1ull << 30));
    CHECK(p < (1ull << 31));
  }
  auto p3 = gcg::random_rank_primes(43, 3);
  CHECK(p1 != p3);
}

TEST_CASE("certificate lists bareiss plus the requested modular backends") {
  IntMatrix m = {{2, 4}, {6, 9}};
  auto cert = gcg::certified_rank(m, 99, 2);
  CHECK(cert.rank == 2);
  REQUIRE(cert.backends.size() == 3);
  CHECK(cert.backends[0].kind == "bareiss");
  CHECK(cert.backends[1].kind == "modular");
  CHECK(cert.backends[1].prime != 0);
  CHECK(cert.backends[2].prime != cert.backends[1].prime);
}

TEST_CASE("large entries stay exact") {
  // Rows engineered so naive elimination over doubles would misjudge.
  IntMatrix m = {{1000000007LL, 1}, {1000000006LL, 1}, {1, 0}};
  CHECK(gcg::rank_bareiss(m) == 2);
  auto cert = gcg::certified_rank(m, 5);
  CHECK(cert.rank == 2);
}
