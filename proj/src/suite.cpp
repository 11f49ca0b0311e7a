#include "gcg/suite.hpp"

#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "gcg/degen.hpp"
#include "gcg/families.hpp"
#include "gcg/gauss.hpp"
#include "gcg/numerology.hpp"
#include "gcg/planecfg.hpp"

namespace gcg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point from) {
  return std::chrono::duration<double>(Clock::now() - from).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(1) << s << " s";
  return out.str();
}

std::string range_text(int lo, int hi) {
  return std::to_string(lo) + ".." + std::to_string(hi);
}

// Span sequence of the genus-7 A-side limit chain, planes in chain order.
SpanTable frozen_g7_spans() {
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

struct Sweep {
  int lo, hi;
  std::uint64_t seed;
  SuiteResult result;
  std::ostream& out;
  std::map<int, TrivalentPlanarGraph> graphs;
  std::map<int, CorankCertificate> certs;
  double slowest_cert = 0;
  int slowest_genus = 0;

  Sweep(int l, int h, std::uint64_t s, std::ostream& o) : lo(l), hi(h), seed(s), out(o) {}

  const TrivalentPlanarGraph& graph_for(int g) {
    auto it = graphs.find(g);
    if (it == graphs.end()) it = graphs.emplace(g, standard_graph(g)).first;
    return it->second;
  }

  const CorankCertificate& cert_for(int g) {
    auto it = certs.find(g);
    if (it == certs.end()) {
      auto t0 = Clock::now();
      CorankCertificate c = corank(gaussian_matrix(graph_for(g)), seed + static_cast<std::uint64_t>(g));
      double dt = seconds(t0);
      if (dt > slowest_cert) {
        slowest_cert = dt;
        slowest_genus = g;
      }
      it = certs.emplace(g, c).first;
    }
    return it->second;
  }

  bool in_range(int g) const { return g >= lo && g <= hi; }

  void emit(bool ok, const std::string& text) {
    out << (ok ? "[PASS] " : "[FAIL] ") << text << "\n";
    (ok ? result.passed : result.failed) += 1;
  }
  void warn(const std::string& text) {
    out << "[WARN] " << text << "\n";
    result.warnings += 1;
  }
  void info(const std::string& text) { out << "[INFO] " << text << "\n"; }

  // Runs one criterion body, turning data-level exceptions into a failure
  // line instead of aborting the sweep.  InvariantViolation still escapes:
  // it means an arithmetic or model bug, not a failed expectation.
  template <typename Fn>
  void criterion(const std::string& label, Fn&& body) {
    try {
      body();
    } catch (const InvariantViolation&) {
      throw;
    } catch (const std::exception& e) {
      emit(false, label + ": aborted: " + e.what());
    }
  }
};

}  // namespace

SuiteResult run_suite(int g_lo, int g_hi, std::uint64_t seed, std::ostream& out) {
  if (g_lo > g_hi) throw ValidationError("empty genus range");
  if (g_lo < 7) throw ValidationError("suite covers the standard families, genus >= 7");
  auto start = Clock::now();
  Sweep s(g_lo, g_hi, seed, out);
  s.info("suite: genus " + range_text(g_lo, g_hi) + ", seed " + std::to_string(seed));

  s.criterion("criterion 1", [&] {
    bool ok = true;
    std::ostringstream bad;
    for (int g = g_lo; g <= g_hi; ++g) {
      if (g != 11 && g < 13) continue;
      if (s.cert_for(g).corank != 1) {
        ok = false;
        bad << " g=" << g << " corank=" << s.cert_for(g).corank;
      }
    }
    std::string detail = ok ? "slowest " + fmt_seconds(s.slowest_cert) + " at g=" +
                                  std::to_string(s.slowest_genus)
                            : bad.str();
    s.emit(ok, "criterion 1: corank 1 at genus 11 and 13..20 (" + detail + ")");
  });

  s.criterion("criterion 2", [&] {
    if (!s.in_range(12)) {
      s.emit(true, "criterion 2: genus 12 outside range, nothing to check");
      return;
    }
    int c = s.cert_for(12).corank;
    s.emit(c == 2, "criterion 2: corank 2 at genus 12 (got " + std::to_string(c) + ")");
  });

  s.criterion("criterion 3", [&] {
    bool ok = true;
    std::ostringstream detail;
    for (int g : {7, 8}) {
      if (!s.in_range(g)) continue;
      int expected = g == 7 ? 9 : 7;
      int c = corank(gaussian_matrix(tilde_graph(g)), seed + 40 + static_cast<std::uint64_t>(g)).corank;
      detail << " tilde" << g << "=" << c;
      if (c != expected) ok = false;
    }
    s.emit(ok, "criterion 3: tilde corank values 9 and 7 (" + detail.str() + ")");
    if (s.in_range(9)) {
      int c9 = s.cert_for(9).corank;
      if (c9 == 5)
        s.info("criterion 3: genus 9 corank " + std::to_string(c9) + " matches the soft expectation 5");
      else
        s.warn("criterion 3: genus 9 corank " + std::to_string(c9) + ", soft expectation was 5");
    }
    if (s.in_range(10))
      s.info("criterion 3: genus 10 corank " + std::to_string(s.cert_for(10).corank) +
             " reported, no expected value");
  });

  s.criterion("criterion 4", [&] {
    bool ok = true;
    std::ostringstream bad;
    for (int g = g_lo; g <= g_hi; ++g)
      if (s.cert_for(g).corank < 1) {
        ok = false;
        bad << " g=" << g;
      }
    s.emit(ok, "criterion 4: corank >= 1 across genus " + range_text(g_lo, g_hi) +
                   (ok ? "" : " (surjective at" + bad.str() + ")"));
  });

  s.criterion("criterion 5", [&] {
    bool ok = true;
    std::ostringstream bad;
    int shuffles = 0;
    for (int g : {7, 11, 12, 15}) {
      if (!s.in_range(g)) continue;
      int base = s.cert_for(g).corank;
      for (int rep = 0; rep < 20; ++rep) {
        std::uint64_t sh_seed = seed * 1000 + static_cast<std::uint64_t>(g) * 100 +
                                static_cast<std::uint64_t>(rep);
        GaussianMatrix m = convention_shuffle(s.graph_for(g), sh_seed);
        int c = corank(m, sh_seed + 7).corank;
        ++shuffles;
        if (c != base) {
          ok = false;
          bad << " g=" << g << " rep=" << rep << " corank=" << c << " base=" << base;
        }
      }
    }
    s.emit(ok, "criterion 5: corank invariant under " + std::to_string(shuffles) +
                   " convention shuffles, all rank backends agreeing" + bad.str());
  });

  s.criterion("criterion 6", [&] {
    bool ok = true;
    std::ostringstream bad;
    for (int g = g_lo; g <= g_hi; ++g) {
      PlaneConfig c = config_from_graph(s.graph_for(g));
      for (int d = 1; d <= 6; ++d) {
        long long expect = static_cast<long long>(g - 1) * d * d + 2;
        if (hilbert_function(c, d) != expect) {
          ok = false;
          bad << " g=" << g << " d=" << d;
        }
      }
      if (g <= 9)
        for (int d = 0; d <= 4; ++d)
          if (hilbert_function(c, d) != hilbert_monomial_count(c, d)) {
            ok = false;
            bad << " oracle g=" << g << " d=" << d;
          }
    }
    s.emit(ok, "criterion 6: Hilbert function (g-1)d^2 + 2 for genus " + range_text(g_lo, g_hi) +
                   ", monomial oracle to genus 9" + bad.str());
  });

  s.criterion("criterion 7", [&] {
    bool ok = true;
    std::ostringstream bad;
    for (int g = g_lo; g <= g_hi; ++g) {
      const auto& graph = s.graph_for(g);
      ChainDecomposition dec = ab_decomposition(g);
      PlaneConfig a = chain_config(graph, dec, Part::A);
      PlaneConfig b = chain_config(graph, dec, Part::B);
      for (int d = 1; d <= 6; ++d) {
        long long expect = (static_cast<long long>(g - 1) * d * d + (g + 1) * d + 2) / 2;
        if (hilbert_function(a, d) != expect || hilbert_function(b, d) != expect) {
          ok = false;
          bad << " chain g=" << g << " d=" << d;
        }
      }
      PlaneConfig dc = double_curve(a, b);
      for (int d = 1; d <= 6; ++d)
        if (hilbert_function(dc, d) != static_cast<long long>(g + 1) * d) {
          ok = false;
          bad << " curve g=" << g << " d=" << d;
        }
    }
    s.emit(ok, "criterion 7: chain and double-curve Hilbert functions for genus " +
                   range_text(g_lo, g_hi) + bad.str());
  });

  s.criterion("criterion 8", [&] {
    bool ok = true;
    std::ostringstream bad;
    for (int g = g_lo; g <= g_hi; ++g) {
      try {
        GenusData data = standard_genus_data(g);
        Compatibility ca = is_compatible(data.survivors, data.corrA);
        Compatibility cb = is_compatible(data.survivors, data.corrB);
        if (!ca.ok || !cb.ok) {
          ok = false;
          bad << " g=" << g << " incompatible";
          continue;
        }
        UnionReport rep = verify_union(data, config_from_graph(s.graph_for(g)));
        if (!rep.ok) {
          ok = false;
          bad << " g=" << g << " " << rep.diagnostic;
        }
        if (g == 7) {
          LimitChain la = limit_planes(data.survivors, data.corrA);
          if (!(la.spans == frozen_g7_spans())) {
            ok = false;
            bad << " g=7 limit spans differ";
          }
          ChainDecomposition dec = ab_decomposition(7);
          PlaneConfig chain = chain_config(s.graph_for(7), dec, Part::A);
          PlaneConfig dc = double_curve(chain, chain_config(s.graph_for(7), dec, Part::B));
          SpanTable st = span_table(chain, dc);
          const SpanTable frozen = frozen_g7_spans();
          bool vertex_rows = st.rows.size() == 6;
          for (size_t i = 0; vertex_rows && i < st.rows.size(); ++i)
            vertex_rows = st.rows[i].plane == dec.part_A[i] &&
                          st.rows[i].first == frozen.rows[i].first &&
                          st.rows[i].second == frozen.rows[i].second;
          if (!vertex_rows) {
            ok = false;
            bad << " g=7 graph-side spans differ";
          }
        }
      } catch (const ValidationError& e) {
        ok = false;
        bad << " g=" << g << " " << e.what();
      }
    }
    for (int g : {7, 8}) {
      if (!s.in_range(g)) continue;
      try {
        GenusData td = tilde_data(g);
        UnionReport rep = verify_union(td, config_from_graph(tilde_graph(g)));
        if (!rep.ok) {
          ok = false;
          bad << " tilde" << g << " " << rep.diagnostic;
        }
      } catch (const ValidationError& e) {
        ok = false;
        bad << " tilde" << g << " " << e.what();
      }
    }
    s.emit(ok, "criterion 8: scroll limits union to the plane configurations, genus " +
                   range_text(g_lo, g_hi) + ", chain table checked at genus 7" + bad.str());
  });

  s.criterion("criterion 9", [&] {
    bool ok = true;
    std::ostringstream bad;
    for (int g = 6; g <= 30; ++g) {
      DimensionReport r = dimensions(g);
      long long gl = g;
      if (r.dim_H != gl * gl + 2 * gl + 19 || r.dim_C != gl * gl + 4 * gl - 4 ||
          r.dim_F != gl * gl + 3 * gl + 19 || r.projective_group_dim != gl * gl + 4 * gl + 3 ||
          r.dim_F != r.dim_H + g || r.t1_degree != 16) {
        ok = false;
        bad << " dims g=" << g;
      }
    }
    for (const auto& check : table_two()) {
      if (!check.ok) {
        ok = false;
        bad << " table row g=" << check.row.genus;
      }
    }
    // Corank 0 never occurs for these curves (criterion 4), so the
    // codimension-one characterization is quantified over gamma >= 1.
    for (int gamma = 1; gamma <= 5; ++gamma)
      for (int tail = 0; tail <= 3; ++tail) {
        bool one = cone_codimension(gamma, tail) == 1;
        if (one != (gamma == 1 && tail == 0)) {
          ok = false;
          bad << " cone gamma=" << gamma << " tail=" << tail;
        }
      }
    for (const auto& row : table_two_rows())
      if (!fiber_dimension(row.genus, row.gamma, 0).consistent) {
        ok = false;
        bad << " fiber g=" << row.genus;
      }
    for (int g = 13; g <= 20; ++g)
      if (!fiber_dimension(g, 1, 0).consistent) {
        ok = false;
        bad << " fiber g=" << g;
      }
    if (!fiber_dimension(11, 1, 0).consistent) {
      ok = false;
      bad << " fiber g=11";
    }
    s.emit(ok, "criterion 9: dimension identities for genus 6..30, parameter table, cone "
               "codimension and fiber cases" + bad.str());
  });

  double elapsed = seconds(start);
  bool time_ok = elapsed < 300.0;
  s.emit(time_ok && s.result.failed == 0,
         "criterion 10: full sweep in " + fmt_seconds(elapsed) + " (bound 300.0 s), " +
             std::to_string(s.result.failed) + " failed criteria above");
  out << "note: criteria 1-3 jointly validate the derived node torsion formula; a failure "
         "there points at the model derivation, not at the arithmetic (backend agreement "
         "is criterion 5).\n";
  return s.result;
}

}  // namespace gcg
