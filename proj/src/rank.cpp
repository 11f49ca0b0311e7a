#include "gcg/rank.hpp"

#include <gmpxx.h>

#include <random>

#include "gcg/errors.hpp"

namespace gcg {

int rank_bareiss(const IntMatrix& m) {
  const size_t rows = m.size();
  if (rows == 0) return 0;
  const size_t cols = m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) throw InvariantViolation("ragged matrix");

  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) a[i][j] = static_cast<long>(m[i][j]);

  // One-step Bareiss: after using pivot p at (r, c), every later entry is
  // (p*a[i][j] - a[i][c]*a[r][j]) / prev, with prev the previous pivot.
  // Columns with no pivot below the current row contribute nothing and are
  // skipped; entries stay integral throughout.
  mpz_class prev = 1;
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (size_t i = rank + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        mpz_class num = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        if (r != 0) throw InvariantViolation("fraction-free elimination lost integrality");
        a[i][j] = q;
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;  // p < 2^31, so products fit in 64 bits
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin; bases {2, 3, 5, 7} suffice below 3.2e9.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t base : {2ull, 3ull, 5ull, 7ull}) {
    std::uint64_t x = pow_mod(base, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint64_t> random_rank_primes(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist((1ull << 30) + 1, (1ull << 31) - 1);
  std::vector<std::uint64_t> primes;
  while (static_cast<int>(primes.size()) < count) {
    std::uint64_t candidate = dist(rng) | 1;
    if (!is_prime(candidate)) continue;
    bool fresh = true;
    for (std::uint64_t p : primes) fresh = fresh && p != candidate;
    if (fresh) primes.push_back(candidate);
  }
  return primes;
}

int rank_modular(const IntMatrix& m, std::uint64_t p) {
  const size_t rows = m.size();
  if (rows == 0) return 0;
  const size_t cols = m[0].size();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      long long v = m[i][j] % static_cast<long long>(p);
      if (v < 0) v += static_cast<long long>(p);
      a[i][j] = static_cast<std::uint64_t>(v);
    }
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    std::uint64_t inv = pow_mod(a[rank][c], p - 2, p);
    for (size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      std::uint64_t factor = a[i][c] * inv % p;
      for (size_t j = c; j < cols; ++j)
        a[i][j] = (a[i][j] + (p - factor) * a[rank][j]) % p;
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

RankCertificate certified_rank(const IntMatrix& m, std::uint64_t seed, int prime_count) {
  RankCertificate cert;
  cert.rank = rank_bareiss(m);
  cert.backends.push_back({"bareiss", 0, cert.rank});
  for (std::uint64_t p : random_rank_primes(seed, prime_count)) {
    int r = rank_modular(m, p);
    cert.backends.push_back({"modular", p, r});
    if (r != cert.rank)
      throw InvariantViolation("rank backends disagree: bareiss " + std::to_string(cert.rank) +
                               " vs mod " + std::to_string(p) + " -> " + std::to_string(r));
  }
  return cert;
}

}  // namespace gcg
