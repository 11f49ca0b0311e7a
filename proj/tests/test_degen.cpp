#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "gcg/degen.hpp"
#include "gcg/families.hpp"
#include "gcg/planecfg.hpp"
#include "json.hpp"

using namespace gcg;

namespace {

RationalCycle cyc(int k, int base) { return RationalCycle{k, base}; }

// Sorted pairs {j, j+1} plus the wrap pair, i.e. the expected double curve.
std::set<std::vector<int>> line_cycle(int npoints) {
  std::set<std::vector<int>> out;
  for (int j = 1; j < npoints; ++j) out.insert({j, j + 1});
  out.insert({1, npoints});
  return out;
}

}  // namespace

TEST_CASE("cycle normalization wraps into the printed index range") {
  RationalCycle one{20, 1};
  CHECK(one.normalize(0) == 20);
  CHECK(one.normalize(21) == 1);
  CHECK(one.normalize(-3) == 17);
  CHECK(one.normalize(7) == 7);
  RationalCycle zero{19, 0};
  CHECK(zero.normalize(19) == 0);
  CHECK(zero.normalize(-1) == 18);
}

TEST_CASE("correspondences are anchored involutions of the stated kind") {
  // k = 20, anchor at the vertex between components 20 and 1: j <-> 21 - j.
  auto a = make_correspondence(cyc(20, 1), CorrKind::iii, 0);
  CHECK(a.shift == 1);
  CHECK(a.partner(1) == 20);
  CHECK(a.partner(10) == 11);
  CHECK(a.self_paired().empty());

  // Anchor between 3 and 4: j <-> 7 - j.
  auto b = make_correspondence(cyc(20, 1), CorrKind::iii, 3);
  CHECK(b.shift == 7);
  CHECK(b.partner(1) == 6);
  CHECK(b.partner(8) == 19);

  // k = 18 kind i anchored at 3: j <-> 6 - j, fixing 3 and 12.
  auto c = make_correspondence(cyc(18, 1), CorrKind::i, 3);
  CHECK(c.shift == 6);
  CHECK(c.self_paired() == std::vector<int>{3, 12});
  CHECK(c.partner(1) == 5);

  auto d = make_correspondence(cyc(19, 0), CorrKind::ii, 0);
  CHECK(d.self_paired() == std::vector<int>{0});

  for (const auto* corr : {&a, &b, &c, &d})
    for (int j = corr->cycle.base; j < corr->cycle.base + corr->cycle.k; ++j)
      CHECK(corr->partner(corr->partner(j)) == j);
}

TEST_CASE("kind and cycle parity must agree") {
  CHECK_THROWS_AS(make_correspondence(cyc(19, 0), CorrKind::iii, 0), ValidationError);
  CHECK_THROWS_AS(make_correspondence(cyc(19, 0), CorrKind::i, 0), ValidationError);
  CHECK_THROWS_AS(make_correspondence(cyc(20, 1), CorrKind::ii, 0), ValidationError);
  CHECK_THROWS_AS(make_correspondence(cyc(3, 1), CorrKind::ii, 0), ValidationError);
}

TEST_CASE("walk lists every pair once, nearest the anchor first") {
  auto a = make_correspondence(cyc(20, 1), CorrKind::iii, 0);
  auto pairs = a.walk();
  REQUIRE(pairs.size() == 10);
  CHECK(pairs.front() == std::array<int, 2>{1, 20});
  CHECK(pairs.back() == std::array<int, 2>{10, 11});

  auto c = make_correspondence(cyc(18, 1), CorrKind::i, 3);
  auto cp = c.walk();
  CHECK(cp.size() == 8);

  auto d = make_correspondence(cyc(19, 0), CorrKind::ii, 0);
  CHECK(d.walk().size() == 9);

  // Pairs plus fixed components partition the cycle.
  for (const auto* corr : {&a, &c, &d}) {
    std::set<int> seen;
    for (int j : corr->self_paired()) seen.insert(j);
    for (const auto& p : corr->walk()) {
      CHECK(corr->partner(p[0]) == p[1]);
      CHECK(seen.insert(p[0]).second);
      CHECK(seen.insert(p[1]).second);
    }
    CHECK(static_cast<int>(seen.size()) == corr->cycle.k);
  }
}

TEST_CASE("survivor sets are validated and kept sorted") {
  auto s = make_survivors(cyc(20, 1), {20, 1, 6, 8, 10, 11, 16, 18});
  CHECK(s.genus() == 7);
  CHECK(s.indices == std::vector<int>{1, 6, 8, 10, 11, 16, 18, 20});
  CHECK(s.survives(6));
  CHECK_FALSE(s.survives(2));
  CHECK_THROWS_AS(make_survivors(cyc(20, 1), {0, 1, 2}), ValidationError);
  CHECK_THROWS_AS(make_survivors(cyc(20, 1), {1, 21}), ValidationError);
  CHECK_THROWS_AS(make_survivors(cyc(20, 1), {1, 1, 2}), ValidationError);
}

TEST_CASE("compatibility of the worked genus-7 data") {
  auto d = odd_genus_data(3);
  CHECK(d.genus == 7);
  CHECK(d.survivors.cycle.k == 20);
  CHECK(d.survivors.indices == std::vector<int>{1, 6, 8, 10, 11, 16, 18, 20});

  auto ca = is_compatible(d.survivors, d.corrA);
  CHECK(ca.ok);
  CHECK(ca.end_pairs[0] == std::array<int, 2>{1, 20});
  CHECK(ca.end_pairs[1] == std::array<int, 2>{10, 11});

  auto cb = is_compatible(d.survivors, d.corrB);
  CHECK(cb.ok);
  CHECK(cb.end_pairs[0] == std::array<int, 2>{1, 6});
  CHECK(cb.end_pairs[1] == std::array<int, 2>{11, 16});

  // Adding 15 completes the interior pair {6, 15}.
  auto bigger = make_survivors(d.survivors.cycle, {1, 6, 8, 10, 11, 15, 16, 18, 20});
  auto bad = is_compatible(bigger, d.corrA);
  CHECK_FALSE(bad.ok);
  CHECK(bad.diagnostic.find("condition (c)") != std::string::npos);
  CHECK(bad.diagnostic.find("{6, 15}") != std::string::npos);
}

TEST_CASE("compatibility diagnostics name the failed condition") {
  // Self-paired component kept alive.
  auto corr = make_correspondence(cyc(19, 0), CorrKind::ii, 0);
  auto s = make_survivors(cyc(19, 0), {0, 2, 4, 6, 9, 11, 13, 15});
  auto r = is_compatible(s, corr);
  CHECK_FALSE(r.ok);
  CHECK(r.diagnostic.find("condition (a)") != std::string::npos);

  // First pair from the anchor has a contracted member: drop 20, keep 1.
  auto a20 = make_correspondence(cyc(20, 1), CorrKind::iii, 0);
  auto s2 = make_survivors(cyc(20, 1), {1, 6, 8, 10, 11, 16, 18, 19});
  auto r2 = is_compatible(s2, a20);
  CHECK_FALSE(r2.ok);
  CHECK(r2.diagnostic.find("condition (b)") != std::string::npos);

  // Cycles must match.
  auto s18 = make_survivors(cyc(18, 1), {1, 5, 7, 10});
  CHECK_THROWS_AS(is_compatible(s18, a20), ValidationError);
}

TEST_CASE("limit planes reproduce the worked genus-7 A-chain") {
  auto d = odd_genus_data(3);
  auto chain = limit_planes(d.survivors, d.corrA);
  REQUIRE(chain.config.facets.size() == 6);
  REQUIRE(chain.spans.rows.size() == 6);

  // Walk order: survivor 18 is line 7 with partner 3 contracted to p1;
  // survivor 8 is line 3 with partner 13 contracted to p5; the far end is
  // the alpha pair (10, 11) on lines 4 and 5.
  const auto& rows = chain.spans.rows;
  CHECK(rows[0].first == SpanRef{'l', 1});
  CHECK(rows[0].second == SpanRef{'l', 8});
  CHECK(rows[1].first == SpanRef{'p', 1});
  CHECK(rows[1].second == SpanRef{'l', 7});
  CHECK(rows[2].first == SpanRef{'p', 1});
  CHECK(rows[2].second == SpanRef{'l', 6});
  CHECK(rows[3].first == SpanRef{'p', 5});
  CHECK(rows[3].second == SpanRef{'l', 2});
  CHECK(rows[4].first == SpanRef{'p', 5});
  CHECK(rows[4].second == SpanRef{'l', 3});
  CHECK(rows[5].first == SpanRef{'l', 4});
  CHECK(rows[5].second == SpanRef{'l', 5});

  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].plane == static_cast<int>(i) + 1);
    bool alpha = rows[i].first.kind == 'l';
    CHECK(alpha == (i == 0 || i + 1 == rows.size()));
  }

  // Incompatible data is rejected before any plane is built.
  auto bigger = make_survivors(d.survivors.cycle, {1, 6, 8, 10, 11, 15, 16, 18, 20});
  CHECK_THROWS_AS(limit_planes(bigger, d.corrA), ValidationError);
}

TEST_CASE("odd series data instantiates as printed") {
  auto d9 = odd_genus_data(4);
  CHECK(d9.genus == 9);
  CHECK(d9.survivors.cycle.k == 28);
  CHECK(d9.survivors.indices == std::vector<int>{2, 7, 9, 11, 13, 16, 21, 23, 25, 27});

  for (int n = 3; n <= 8; ++n) {
    auto d = odd_genus_data(n);
    CHECK(d.survivors.cycle.k == 8 * n - 4);
    CHECK(static_cast<int>(d.survivors.indices.size()) == 2 * n + 2);
    CHECK(d.corrA.kind == CorrKind::iii);
    CHECK(d.corrB.kind == CorrKind::iii);
    CHECK(is_compatible(d.survivors, d.corrA).ok);
    CHECK(is_compatible(d.survivors, d.corrB).ok);
  }
  CHECK_THROWS_AS(odd_genus_data(2), ValidationError);
}

TEST_CASE("even series data validates per instance") {
  for (int n = 4; n <= 12; ++n) {
    auto d = even_genus_data(n);
    CHECK(d.genus == 2 * n + 2);
    CHECK(d.survivors.cycle.base == 0);
    CHECK(static_cast<int>(d.survivors.indices.size()) == 2 * n + 3);
    CHECK(d.corrA.kind == CorrKind::ii);
    CHECK(d.corrB.kind == CorrKind::ii);
    CHECK(d.corrA.self_paired() == std::vector<int>{0});
    CHECK(is_compatible(d.survivors, d.corrA).ok);
    CHECK(is_compatible(d.survivors, d.corrB).ok);
  }

  // The n = 3 instance is malformed; the error carries the offending term.
  CHECK_THROWS_WITH_AS(even_genus_data(3),
                       doctest::Contains("8n + 6*floor((n-1)/2) - floor((n-2)/2) - 11"),
                       ValidationError);
  CHECK_THROWS_AS(even_genus_data(2), ValidationError);
}

TEST_CASE("tilde data as printed") {
  auto t7 = tilde_data(7);
  CHECK(t7.survivors.cycle.k == 18);
  CHECK(t7.survivors.indices == std::vector<int>{1, 5, 7, 10, 11, 13, 15, 16});
  CHECK(t7.corrA.kind == CorrKind::iii);
  CHECK(t7.corrA.partner(1) == 16);  // j <-> 17 - j
  CHECK(t7.corrB.kind == CorrKind::i);
  CHECK(t7.corrB.self_paired() == std::vector<int>{3, 12});
  CHECK(is_compatible(t7.survivors, t7.corrA).ok);
  CHECK(is_compatible(t7.survivors, t7.corrB).ok);

  auto t8 = tilde_data(8);
  CHECK(t8.survivors.cycle.k == 23);
  CHECK(t8.survivors.indices == std::vector<int>{1, 6, 8, 9, 12, 14, 16, 19, 20});
  CHECK(t8.corrA.kind == CorrKind::ii);
  CHECK(t8.corrB.kind == CorrKind::ii);
  CHECK(t8.corrA.self_paired() == std::vector<int>{22});
  CHECK(t8.corrB.self_paired() == std::vector<int>{15});
  CHECK(is_compatible(t8.survivors, t8.corrA).ok);
  CHECK(is_compatible(t8.survivors, t8.corrB).ok);

  CHECK_THROWS_AS(tilde_data(9), ValidationError);
}

TEST_CASE("standard data series, genus 7 through 20") {
  for (int g = 7; g <= 20; ++g) {
    CAPTURE(g);
    auto d = standard_genus_data(g);
    CHECK(d.genus == g);
    CHECK(d.survivors.genus() == g);
    CHECK(d.corrA.shift != d.corrB.shift);

    auto a = limit_planes(d.survivors, d.corrA);
    auto b = limit_planes(d.survivors, d.corrB);
    CHECK(static_cast<int>(a.config.facets.size()) == g - 1);
    CHECK(static_cast<int>(b.config.facets.size()) == g - 1);

    auto u = union_config(a.config, b.config);
    CHECK(static_cast<int>(u.facets.size()) == 2 * g - 2);
    CHECK(static_cast<int>(u.points.size()) == g + 1);

    // The chains meet exactly in the cycle of g+1 lines.
    auto dc = double_curve(a.config, b.config);
    std::set<std::vector<int>> got(dc.facets.begin(), dc.facets.end());
    CHECK(got == line_cycle(g + 1));
  }
  CHECK_THROWS_AS(standard_genus_data(6), ValidationError);

  // Genus 8 is replacement data, flagged as such.
  auto d8 = standard_genus_data(8);
  CHECK(d8.survivors.cycle.k == 22);
  CHECK_FALSE(d8.note.empty());
  CHECK(standard_genus_data(7).note.empty());
}

TEST_CASE("duplicate planes are rejected in unions") {
  auto d = odd_genus_data(3);
  auto a = limit_planes(d.survivors, d.corrA);
  CHECK_THROWS_AS(union_config(a.config, a.config), ValidationError);
}

TEST_CASE("the union of the two limits is the matching graph configuration") {
  for (int g : {7, 11, 14}) {
    CAPTURE(g);
    auto rep = verify_union(standard_genus_data(g), config_from_graph(standard_graph(g)));
    CHECK(rep.ok);
    CHECK(rep.diagnostic.empty());
    // The witness is a facet bijection.
    auto sorted = rep.facet_map;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ident(2 * static_cast<size_t>(g) - 2);
    for (size_t i = 0; i < ident.size(); ++i) ident[i] = static_cast<int>(i);
    CHECK(sorted == ident);
  }

  // Genus 7: the A-chain lands on one part of the chain decomposition.
  auto rep7 = verify_union(standard_genus_data(7), config_from_graph(standard_graph(7)));
  REQUIRE(rep7.ok);
  auto target = config_from_graph(standard_graph(7));
  std::set<int> image;
  for (int i = 0; i < 6; ++i)
    image.insert(target.facet_names[static_cast<size_t>(rep7.facet_map[static_cast<size_t>(i)])]);
  auto parts = ab_decomposition(7);
  std::set<int> part_a(parts.part_A.begin(), parts.part_A.end());
  std::set<int> part_b(parts.part_B.begin(), parts.part_B.end());
  CHECK((image == part_a || image == part_b));

  for (int g : {7, 8}) {
    CAPTURE(g);
    auto rep = verify_union(tilde_data(g), config_from_graph(tilde_graph(g)));
    CHECK(rep.ok);
  }

  // Wrong target: genus mismatch is caught, not mislabeled.
  auto bad = verify_union(standard_genus_data(7), config_from_graph(standard_graph(8)));
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.diagnostic.empty());
}

TEST_CASE("degeneration data serializes with the shared schema") {
  auto text = data_to_json_text(standard_genus_data(8));
  auto j = nlohmann::json::parse(text);
  CHECK(j["schema"] == "gcg/1");
  CHECK(j["genus"] == 8);
  CHECK(j["k"] == 22);
  CHECK(j["survivors"].size() == 9);
  CHECK(j.contains("note"));
  REQUIRE(j["correspondences"].size() == 2);
  for (const auto& jc : j["correspondences"]) {
    CHECK(jc.contains("kind"));
    CHECK(jc.contains("anchor"));
    CHECK_FALSE(jc["pairs"].empty());
  }
  // Series data carries no note.
  auto j7 = nlohmann::json::parse(data_to_json_text(odd_genus_data(3)));
  CHECK_FALSE(j7.contains("note"));
}
