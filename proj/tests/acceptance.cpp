// Acceptance gate: one test case per criterion, each emitting a single
// pass/fail line with the measured values.  Expectations are checked at
// their stated tolerances; a criterion that does not hold fails here and
// in the exit status, it is never weakened.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "gcg/cli.hpp"
#include "gcg/degen.hpp"
#include "gcg/families.hpp"
#include "gcg/gauss.hpp"
#include "gcg/numerology.hpp"
#include "gcg/planecfg.hpp"
#include "gcg/suite.hpp"

using namespace gcg;

namespace {

constexpr std::uint64_t kSeed = 1729;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct TimedCert {
  CorankCertificate cert;
  double elapsed = 0;
};

const TimedCert& standard_cert(int g) {
  static std::map<int, TimedCert> cache;
  auto it = cache.find(g);
  if (it == cache.end()) {
    auto t0 = Clock::now();
    TimedCert tc;
    tc.cert = corank(gaussian_matrix(standard_graph(g)), kSeed + static_cast<std::uint64_t>(g));
    tc.elapsed = seconds_since(t0);
    it = cache.emplace(g, tc).first;
  }
  return it->second;
}

const CorankCertificate& tilde_cert(int g) {
  static std::map<int, CorankCertificate> cache;
  auto it = cache.find(g);
  if (it == cache.end())
    it = cache.emplace(g, corank(gaussian_matrix(tilde_graph(g)),
                                 kSeed + 40 + static_cast<std::uint64_t>(g)))
             .first;
  return it->second;
}

void report(bool ok, const std::string& text) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << text << std::endl;
}

void note(const std::string& text) { std::cout << "[INFO] " << text << std::endl; }

SpanTable frozen_table_one() {
  SpanTable t;
  auto row = [&](int plane, SpanRef a, SpanRef b) { t.rows.push_back({plane, a, b}); };
  row(1, {'l', 1}, {'l', 8});
  row(2, {'p', 1}, {'l', 7});
  row(3, {'p', 1}, {'l', 6});
  row(4, {'p', 5}, {'l', 2});
  row(5, {'p', 5}, {'l', 3});
  row(6, {'l', 4}, {'l', 5});
  return t;
}

}  // namespace

TEST_CASE("criterion 1: corank exactly one at genus 11 and 13 through 20") {
  bool ok = true;
  std::ostringstream detail;
  double slowest = 0;
  for (int g = 11; g <= 20; ++g) {
    if (g == 12) continue;
    const auto& tc = standard_cert(g);
    slowest = std::max(slowest, tc.elapsed);
    if (tc.cert.corank != 1 || tc.elapsed >= 2.0) {
      ok = false;
      detail << " g=" << g << " corank=" << tc.cert.corank;
    }
  }
  std::ostringstream line;
  line << "criterion 1: corank 1 for g = 11, 13..20, exact, each certificate under 2 s "
       << "(slowest " << slowest << " s)" << detail.str();
  report(ok, line.str());
  CHECK(ok);
}

TEST_CASE("criterion 2: corank two at genus 12") {
  int got = standard_cert(12).cert.corank;
  bool ok = got == 2;
  std::ostringstream line;
  line << "criterion 2: corank 2 at genus 12, exact (computed " << got
       << " with all rank backends agreeing";
  if (!ok)
    line << "; model-derivation discrepancy, see the corank certificate and README";
  line << ")";
  report(ok, line.str());
  CHECK(ok);
}

TEST_CASE("criterion 3: tilde coranks exact, genus 9 and 10 reported") {
  int t7 = tilde_cert(7).corank;
  int t8 = tilde_cert(8).corank;
  bool ok = t7 == 9 && t8 == 7;
  std::ostringstream line;
  line << "criterion 3: corank 9 and 7 for the two tilde curves, exact (got " << t7 << " and "
       << t8 << ")";
  report(ok, line.str());
  int c9 = standard_cert(9).cert.corank;
  if (c9 == 5)
    note("criterion 3: genus 9 corank 5 matches the soft expectation");
  else
    std::cout << "[WARN] criterion 3: genus 9 corank " << c9 << ", soft expectation was 5"
              << std::endl;
  note("criterion 3: genus 10 corank " + std::to_string(standard_cert(10).cert.corank) +
       " reported, no expected value");
  CHECK(ok);
}

TEST_CASE("criterion 4: no graph curve has a surjective Wahl map") {
  bool ok = true;
  std::ostringstream detail;
  for (int g = 7; g <= 20; ++g)
    if (standard_cert(g).cert.corank < 1) {
      ok = false;
      detail << " g=" << g;
    }
  report(ok, "criterion 4: corank >= 1 for every family curve, g = 7..20" + detail.str());
  CHECK(ok);
}

TEST_CASE("criterion 5: corank is convention independent and backends agree") {
  bool ok = true;
  std::ostringstream detail;
  int shuffles = 0;
  for (int g : {7, 11, 12, 15}) {
    int base = standard_cert(g).cert.corank;
    for (int rep = 0; rep < 20; ++rep) {
      std::uint64_t sh_seed =
          kSeed * 1000 + static_cast<std::uint64_t>(g) * 100 + static_cast<std::uint64_t>(rep);
      // corank() itself certifies one fraction-free and two modular ranks.
      CorankCertificate c = corank(convention_shuffle(standard_graph(g), sh_seed), sh_seed + 7);
      ++shuffles;
      if (c.corank != base) {
        ok = false;
        detail << " g=" << g << " rep=" << rep << " got=" << c.corank << " base=" << base;
      }
    }
  }
  report(ok, "criterion 5: corank unchanged under " + std::to_string(shuffles) +
                 " random convention shuffles, Bareiss and both modular ranks agreeing" +
                 detail.str());
  CHECK(ok);
}

TEST_CASE("criterion 6: surface Hilbert function is the K3 polynomial") {
  bool ok = true;
  std::ostringstream detail;
  for (int g = 7; g <= 20; ++g) {
    PlaneConfig c = config_from_graph(standard_graph(g));
    for (int d = 1; d <= 6; ++d)
      if (hilbert_function(c, d) != static_cast<long long>(g - 1) * d * d + 2) {
        ok = false;
        detail << " g=" << g << " d=" << d;
      }
    if (g <= 9)
      for (int d = 0; d <= 4; ++d)
        if (hilbert_function(c, d) != hilbert_monomial_count(c, d)) {
          ok = false;
          detail << " oracle g=" << g << " d=" << d;
        }
  }
  report(ok, "criterion 6: H(d) = (g-1)d^2 + 2 for d = 1..6, g = 7..20, exact, with the "
             "monomial-count oracle through genus 9" + detail.str());
  CHECK(ok);
}

TEST_CASE("criterion 7: chain and double-curve Hilbert functions") {
  bool ok = true;
  std::ostringstream detail;
  for (int g = 7; g <= 20; ++g) {
    TrivalentPlanarGraph graph = standard_graph(g);
    ChainDecomposition dec = ab_decomposition(g);
    PlaneConfig a = chain_config(graph, dec, Part::A);
    PlaneConfig b = chain_config(graph, dec, Part::B);
    PlaneConfig dc = double_curve(a, b);
    for (int d = 1; d <= 6; ++d) {
      long long scroll = (static_cast<long long>(g - 1) * d * d + (g + 1) * d + 2) / 2;
      if (hilbert_function(a, d) != scroll || hilbert_function(b, d) != scroll) {
        ok = false;
        detail << " chain g=" << g << " d=" << d;
      }
      if (hilbert_function(dc, d) != static_cast<long long>(g + 1) * d) {
        ok = false;
        detail << " curve g=" << g << " d=" << d;
      }
    }
  }
  report(ok, "criterion 7: both chains have the scroll Hilbert function and the double curve "
             "(g+1)d, g = 7..20, exact" + detail.str());
  CHECK(ok);
}

TEST_CASE("criterion 8: degeneration data reach every family configuration") {
  bool ok = true;
  std::ostringstream detail;
  for (int g = 7; g <= 20; ++g) {
    try {
      GenusData data = standard_genus_data(g);
      if (!is_compatible(data.survivors, data.corrA).ok ||
          !is_compatible(data.survivors, data.corrB).ok) {
        ok = false;
        detail << " g=" << g << " incompatible";
        continue;
      }
      LimitChain a = limit_planes(data.survivors, data.corrA);
      LimitChain b = limit_planes(data.survivors, data.corrB);
      if (static_cast<int>(a.config.facets.size()) != g - 1 ||
          static_cast<int>(b.config.facets.size()) != g - 1) {
        ok = false;
        detail << " g=" << g << " chain size";
      }
      if (!verify_union(data, config_from_graph(standard_graph(g))).ok) {
        ok = false;
        detail << " g=" << g << " union";
      }
      if (g == 7 && !(a.spans == frozen_table_one())) {
        ok = false;
        detail << " g=7 span table";
      }
    } catch (const ValidationError& e) {
      ok = false;
      detail << " g=" << g << " " << e.what();
    }
  }
  for (int g : {7, 8}) {
    try {
      if (!verify_union(tilde_data(g), config_from_graph(tilde_graph(g))).ok) {
        ok = false;
        detail << " tilde" << g;
      }
    } catch (const ValidationError& e) {
      ok = false;
      detail << " tilde" << g << " " << e.what();
    }
  }
  report(ok, "criterion 8: compatible data, two chains of g-1 planes, union isomorphic to the "
             "family configuration for g = 7..20; genus-7 span table verbatim; both tilde "
             "configurations reached" + detail.str());
  CHECK(ok);
}

TEST_CASE("criterion 9: dimension identities and the parameter table") {
  bool ok = true;
  std::ostringstream detail;
  for (int g = 6; g <= 30; ++g) {
    DimensionReport r = dimensions(g);
    long long gl = g;
    if (r.dim_H != gl * gl + 2 * gl + 19 || r.dim_C != gl * gl + 4 * gl - 4 ||
        r.dim_F != gl * gl + 3 * gl + 19 || r.dim_F != r.dim_H + gl ||
        r.projective_group_dim != gl * gl + 4 * gl + 3) {
      ok = false;
      detail << " dims g=" << g;
    }
  }
  for (const auto& check : table_two())
    if (!check.ok) {
      ok = false;
      detail << " table g=" << check.row.genus;
    }
  for (int gamma = 1; gamma <= 5; ++gamma)
    for (int tail = 0; tail <= 3; ++tail)
      if ((cone_codimension(gamma, tail) == 1) != (gamma == 1 && tail == 0)) {
        ok = false;
        detail << " cone gamma=" << gamma;
      }
  for (const auto& row : table_two_rows())
    if (!fiber_dimension(row.genus, row.gamma, 0).consistent) {
      ok = false;
      detail << " fiber g=" << row.genus;
    }
  for (int g = 13; g <= 20; ++g)
    if (!fiber_dimension(g, 1, 0).consistent) {
      ok = false;
      detail << " fiber g=" << g;
    }
  report(ok, "criterion 9: dimension formulas for g = 6..30, parameter table both ways, cone "
             "codimension one exactly at (1, 0), fiber case table, all exact" + detail.str());
  CHECK(ok);
}

TEST_CASE("criterion 10: the full suite sweep") {
  std::ostringstream out, err;
  auto t0 = Clock::now();
  int code = run_cli({"suite", "--genus", "7..20"}, out, err);
  double elapsed = seconds_since(t0);
  bool ok = code == 0 && elapsed < 300.0;
  std::ostringstream line;
  line << "criterion 10: suite over genus 7..20 finished in " << elapsed
       << " s (bound 300 s) with exit code " << code;
  if (code != 0) line << "; the genus-12 expectation above is the failing criterion";
  report(ok, line.str());
  CHECK(ok);
}
