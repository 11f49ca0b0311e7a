// Exhaustive search for survivor sets on a component cycle that pass the
// full degeneration pipeline: compatibility with both correspondences, chain
// limits, and union isomorphic to the plane configuration of the standard
// graph.  Used to repair the even-genus series where its printed expressions
// collide (genus 8).

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gcg/degen.hpp"
#include "gcg/families.hpp"
#include "gcg/planecfg.hpp"

namespace {

gcg::CorrKind parse_kind(const std::string& s) {
  if (s == "i") return gcg::CorrKind::i;
  if (s == "ii") return gcg::CorrKind::ii;
  if (s == "iii") return gcg::CorrKind::iii;
  throw CLI::ValidationError("kind must be i, ii or iii");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"search survivor sets compatible with a correspondence pair"};
  int genus = 8;
  int k = 19;
  int base = 0;
  std::string kind_a = "ii", kind_b = "ii";
  int anchor_a = 0, anchor_b = 3;
  bool all = false;
  app.add_option("--genus", genus, "target genus");
  app.add_option("--k", k, "cycle length");
  app.add_option("--base", base, "index origin (0 or 1)");
  app.add_option("--kind-a", kind_a, "correspondence A kind");
  app.add_option("--anchor-a", anchor_a, "correspondence A anchor");
  app.add_option("--kind-b", kind_b, "correspondence B kind");
  app.add_option("--anchor-b", anchor_b, "correspondence B anchor");
  app.add_flag("--all", all, "list every match instead of stopping at the first");
  CLI11_PARSE(app, argc, argv);

  gcg::RationalCycle cycle{k, base};
  gcg::DoubleCorrespondence ca, cb;
  try {
    ca = gcg::make_correspondence(cycle, parse_kind(kind_a), anchor_a);
    cb = gcg::make_correspondence(cycle, parse_kind(kind_b), anchor_b);
  } catch (const std::exception& e) {
    std::cerr << "bad correspondence: " << e.what() << "\n";
    return 2;
  }

  std::vector<int> forbidden = ca.self_paired();
  for (int j : cb.self_paired()) forbidden.push_back(j);
  std::vector<int> allowed;
  for (int j = base; j < base + k; ++j) {
    bool bad = false;
    for (int f : forbidden) bad = bad || f == j;
    if (!bad) allowed.push_back(j);
  }

  const int need = genus + 1;
  if (static_cast<int>(allowed.size()) < need) {
    std::cerr << "only " << allowed.size() << " components available, need " << need << "\n";
    return 2;
  }

  gcg::PlaneConfig target = gcg::config_from_graph(gcg::standard_graph(genus));

  // Lexicographic combinations of `need` indices into `allowed`.
  std::vector<int> pick(static_cast<size_t>(need));
  for (int i = 0; i < need; ++i) pick[static_cast<size_t>(i)] = i;
  const int n = static_cast<int>(allowed.size());
  long long tested = 0, compatible = 0, matched = 0;
  std::string first_json;
  while (true) {
    ++tested;
    std::vector<int> surv;
    for (int i : pick) surv.push_back(allowed[static_cast<size_t>(i)]);
    try {
      gcg::GenusData d;
      d.genus = genus;
      d.survivors = gcg::make_survivors(cycle, surv);
      d.corrA = ca;
      d.corrB = cb;
      if (gcg::is_compatible(d.survivors, ca).ok && gcg::is_compatible(d.survivors, cb).ok) {
        ++compatible;
        gcg::UnionReport rep = gcg::verify_union(d, target);
        if (rep.ok) {
          ++matched;
          std::cout << "match:";
          for (int s : surv) std::cout << " " << s;
          std::cout << "\n";
          if (first_json.empty()) first_json = gcg::data_to_json_text(d);
          if (!all) break;
        }
      }
    } catch (const std::exception&) {
      // Candidate fails structural checks; skip.
    }
    int i = need - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == n - need + i) --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < need; ++j)
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }

  std::cerr << "tested " << tested << " candidates, " << compatible << " compatible, " << matched
            << " matched\n";
  if (matched == 0) return 1;
  std::cout << first_json;
  return 0;
}
