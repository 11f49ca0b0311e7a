#pragma once

// Certified integer matrix rank: fraction-free elimination over arbitrary
// precision integers, cross-checked by elimination modulo random primes.

#include <cstdint>
#include <string>
#include <vector>

namespace gcg {

using IntMatrix = std::vector<std::vector<long long>>;

// Exact rank by Bareiss fraction-free Gaussian elimination (GMP integers).
int rank_bareiss(const IntMatrix& m);

// Rank of the reduction mod p; a lower bound on the integer rank, equal to it
// for all but finitely many primes.
int rank_modular(const IntMatrix& m, std::uint64_t p);

// Distinct random primes in (2^30, 2^31), deterministic in the seed.
std::vector<std::uint64_t> random_rank_primes(std::uint64_t seed, int count);

struct RankBackend {
  std::string kind;        // "bareiss" or "modular"
  std::uint64_t prime = 0; // 0 when not applicable
  int rank = 0;
};

struct RankCertificate {
  int rank = 0;
  std::vector<RankBackend> backends;
};

// Runs Bareiss plus `prime_count` modular eliminations; throws
// InvariantViolation if any backend disagrees.
RankCertificate certified_rank(const IntMatrix& m, std::uint64_t seed, int prime_count = 2);

}  // namespace gcg
