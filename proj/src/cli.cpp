#include "gcg/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <Eigen/Dense>

#include "CLI11.hpp"
#include "json.hpp"

#include "gcg/degen.hpp"
#include "gcg/gauss.hpp"
#include "gcg/numerology.hpp"
#include "gcg/planecfg.hpp"
#include "gcg/suite.hpp"

namespace gcg {

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

std::uint64_t resolve_seed(bool seed_given, std::uint64_t seed_flag) {
  if (seed_given) return seed_flag;
  if (const char* env = std::getenv("GCG_SEED")) {
    try {
      size_t used = 0;
      std::uint64_t v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw ParseError("GCG_SEED is not an unsigned integer: " + std::string(env));
    }
  }
  return kDefaultSeed;
}

TrivalentPlanarGraph graph_by_kind(const std::string& kind, int genus) {
  if (kind == "standard") return standard_graph(genus);
  if (kind == "prism") return prism_graph(genus - 1);
  if (kind == "tilde") return tilde_graph(genus);
  throw ParseError("unknown graph kind: " + kind);
}

std::pair<int, int> parse_genus_range(const std::string& text) {
  auto dots = text.find("..");
  auto number = [&](const std::string& part) {
    size_t used = 0;
    int v = std::stoi(part, &used);
    if (used != part.size()) throw std::invalid_argument(part);
    return v;
  };
  try {
    if (dots == std::string::npos) {
      int g = number(text);
      return {g, g};
    }
    int lo = number(text.substr(0, dots));
    int hi = number(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::exception&) {
    throw ParseError("genus range must be N or LO..HI with LO <= HI, got: " + text);
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Tutte barycentric layout: distinguished face pinned to a circle, every
// other vertex at the average of its neighbors.
std::vector<std::array<double, 2>> tutte_layout(const TrivalentPlanarGraph& g) {
  FaceSet fs = faces(g);
  const Face& outer = fs.faces.back();
  const int n = g.vertex_count;
  std::vector<std::array<double, 2>> pos(static_cast<size_t>(n), {0.0, 0.0});
  std::vector<char> fixed(static_cast<size_t>(n), 0);
  const double tau = 6.283185307179586;
  for (size_t i = 0; i < outer.vertices.size(); ++i) {
    int v = outer.vertices[i];
    double a = tau * static_cast<double>(i) / static_cast<double>(outer.vertices.size());
    pos[static_cast<size_t>(v - 1)] = {std::cos(a), std::sin(a)};
    fixed[static_cast<size_t>(v - 1)] = 1;
  }
  std::vector<int> unknown;
  for (int v = 1; v <= n; ++v)
    if (!fixed[static_cast<size_t>(v - 1)]) unknown.push_back(v);
  if (!unknown.empty()) {
    const int m = static_cast<int>(unknown.size());
    std::map<int, int> index;
    for (int i = 0; i < m; ++i) index[unknown[static_cast<size_t>(i)]] = i;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m, 2);
    for (int i = 0; i < m; ++i) {
      int v = unknown[static_cast<size_t>(i)];
      a(i, i) = 3.0;
      for (int u : g.neighbors(v)) {
        if (fixed[static_cast<size_t>(u - 1)]) {
          b(i, 0) += pos[static_cast<size_t>(u - 1)][0];
          b(i, 1) += pos[static_cast<size_t>(u - 1)][1];
        } else {
          a(i, index[u]) -= 1.0;
        }
      }
    }
    Eigen::MatrixXd x = a.partialPivLu().solve(b);
    for (int i = 0; i < m; ++i)
      pos[static_cast<size_t>(unknown[static_cast<size_t>(i)] - 1)] = {x(i, 0), x(i, 1)};
  }
  return pos;
}

// Crossing edges ordered along the double curve: each separating edge is
// flanked by the two faces forming one line of the curve.
std::vector<int> crossing_edges_in_cycle_order(const TrivalentPlanarGraph& g,
                                               const ChainDecomposition& dec) {
  PlaneConfig a = chain_config(g, dec, Part::A);
  PlaneConfig b = chain_config(g, dec, Part::B);
  PlaneConfig dc = double_curve(a, b);
  std::map<int, std::vector<int>> adj;
  for (const auto& l : dc.facets) {
    adj[l[0]].push_back(l[1]);
    adj[l[1]].push_back(l[0]);
  }
  std::vector<std::array<int, 2>> lines_in_order;
  int start = dc.points.at(0), cur = start, prev = -1;
  do {
    int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
    lines_in_order.push_back({std::min(cur, next), std::max(cur, next)});
    prev = cur;
    cur = next;
  } while (cur != start);

  FaceSet fs = faces(g);
  std::map<std::array<int, 2>, int> edge_of_faces;
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f)
    for (int e : fs.faces[static_cast<size_t>(f)].edges) {
      // Record the face pair flanking each edge once both faces are seen.
      (void)e;
    }
  std::vector<std::vector<int>> faces_of_edge(g.edges.size());
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f)
    for (int e : fs.faces[static_cast<size_t>(f)].edges)
      faces_of_edge[static_cast<size_t>(e)].push_back(f);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    auto& fe = faces_of_edge[static_cast<size_t>(e)];
    if (fe.size() == 2)
      edge_of_faces[{std::min(fe[0], fe[1]), std::max(fe[0], fe[1])}] = e;
  }
  std::vector<int> out;
  for (const auto& line : lines_in_order) {
    auto it = edge_of_faces.find(line);
    if (it == edge_of_faces.end())
      throw InvariantViolation("double-curve line has no flanked edge");
    out.push_back(it->second);
  }
  return out;
}

nlohmann::json report_json(const ValidationReport& rep) {
  nlohmann::json j;
  j["schema"] = "gcg/1";
  j["genus"] = rep.genus;
  j["valid"] = rep.valid();
  j["shape_errors"] = rep.shape_errors;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : rep.checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    j["checks"].push_back(jc);
  }
  return j;
}

int default_gamma(int g) {
  for (const auto& row : table_two_rows())
    if (row.genus == g) return row.gamma;
  if (g == 11 || g >= 13) return 1;
  return -1;
}

int cmd_family(const std::string& kind, int genus, const std::string& format, std::ostream& out) {
  TrivalentPlanarGraph g = graph_by_kind(kind, genus);
  if (format == "json") {
    out << graph_to_json_text(g);
  } else if (format == "dot") {
    out << graph_to_dot(g);
  } else {
    if (kind == "standard") {
      ChainDecomposition dec = ab_decomposition(genus);
      out << export_svg(g, &dec);
    } else {
      out << export_svg(g);
    }
  }
  return 0;
}

int cmd_validate(const std::string& input, std::ostream& out) {
  TrivalentPlanarGraph g = graph_from_json_text(read_input(input));
  ValidationReport rep = validate(g);
  out << report_json(rep).dump(2) << "\n";
  return rep.valid() ? 0 : 1;
}

int cmd_hilbert(const std::string& kind, int genus, int max_degree, const std::string& format,
                std::ostream& out) {
  TrivalentPlanarGraph g = graph_by_kind(kind, genus);
  PlaneConfig surface = config_from_graph(g);
  bool chains = kind == "standard";
  PlaneConfig a, b, dc;
  if (chains) {
    ChainDecomposition dec = ab_decomposition(genus);
    a = chain_config(g, dec, Part::A);
    b = chain_config(g, dec, Part::B);
    dc = double_curve(a, b);
  }
  if (format == "json") {
    nlohmann::json j;
    j["schema"] = "gcg/1";
    j["genus"] = g.genus;
    j["surface"] = nlohmann::json::array();
    for (int d = 0; d <= max_degree; ++d) j["surface"].push_back(hilbert_function(surface, d));
    if (chains) {
      j["chain_a"] = nlohmann::json::array();
      j["chain_b"] = nlohmann::json::array();
      j["double_curve"] = nlohmann::json::array();
      for (int d = 0; d <= max_degree; ++d) {
        j["chain_a"].push_back(hilbert_function(a, d));
        j["chain_b"].push_back(hilbert_function(b, d));
        j["double_curve"].push_back(hilbert_function(dc, d));
      }
    }
    out << j.dump(2) << "\n";
  } else {
    out << std::left << std::setw(4) << "d" << std::setw(10) << "surface";
    if (chains)
      out << std::setw(10) << "chain_a" << std::setw(10) << "chain_b" << std::setw(14)
          << "double_curve";
    out << "\n";
    for (int d = 0; d <= max_degree; ++d) {
      out << std::left << std::setw(4) << d << std::setw(10) << hilbert_function(surface, d);
      if (chains)
        out << std::setw(10) << hilbert_function(a, d) << std::setw(10) << hilbert_function(b, d)
            << std::setw(14) << hilbert_function(dc, d);
      out << "\n";
    }
  }
  return 0;
}

int cmd_corank(const std::string& kind, int genus, std::uint64_t seed, int expect,
               bool matrix_csv, std::ostream& out, std::ostream& err) {
  TrivalentPlanarGraph g = graph_by_kind(kind, genus);
  GaussianMatrix m = gaussian_matrix(g);
  if (matrix_csv) {
    out << matrix_to_csv(m);
    return 0;
  }
  CorankCertificate cert = corank(m, seed);
  out << certificate_to_json_text(cert);
  if (expect >= 0 && cert.corank != expect) {
    err << "expected corank " << expect << ", computed " << cert.corank << "\n";
    return 1;
  }
  return 0;
}

int cmd_degeneration(const std::string& kind, int genus, std::ostream& out) {
  GenusData data;
  TrivalentPlanarGraph graph;
  if (kind == "standard") {
    data = standard_genus_data(genus);
    graph = standard_graph(genus);
  } else if (kind == "tilde") {
    data = tilde_data(genus);
    graph = tilde_graph(genus);
  } else {
    throw ValidationError("no degeneration data for kind " + kind);
  }
  Compatibility ca = is_compatible(data.survivors, data.corrA);
  Compatibility cb = is_compatible(data.survivors, data.corrB);
  UnionReport rep = verify_union(data, config_from_graph(graph));

  nlohmann::json j = nlohmann::json::parse(data_to_json_text(data));
  auto compat = [](const Compatibility& c) {
    nlohmann::json jc;
    jc["ok"] = c.ok;
    if (!c.diagnostic.empty()) jc["diagnostic"] = c.diagnostic;
    if (c.ok)
      jc["end_pairs"] = {{c.end_pairs[0][0], c.end_pairs[0][1]},
                         {c.end_pairs[1][0], c.end_pairs[1][1]}};
    return jc;
  };
  j["compatibility"] = nlohmann::json::object();
  j["compatibility"]["A"] = compat(ca);
  j["compatibility"]["B"] = compat(cb);
  j["union"] = nlohmann::json::object();
  j["union"]["ok"] = rep.ok;
  if (!rep.diagnostic.empty()) j["union"]["diagnostic"] = rep.diagnostic;
  if (rep.ok) j["union"]["facet_map"] = rep.facet_map;
  out << j.dump(2) << "\n";
  return (ca.ok && cb.ok && rep.ok) ? 0 : 1;
}

int cmd_numerology(int genus, bool table2, int gamma, int tail, std::ostream& out) {
  if (table2) {
    auto checks = table_two();
    bool all = true;
    out << std::left << std::setw(7) << "genus" << std::setw(8) << "moduli" << std::setw(12)
        << "parameters" << std::setw(8) << "corank" << std::setw(8) << "status" << "\n";
    for (const auto& c : checks) {
      all = all && c.ok;
      out << std::left << std::setw(7) << c.row.genus << std::setw(8) << c.row.moduli
          << std::setw(12) << c.row.parameters << std::setw(8) << c.row.gamma << std::setw(8)
          << (c.ok ? "ok" : "FAIL") << "\n";
    }
    return all ? 0 : 1;
  }
  DimensionReport r = dimensions(genus);
  nlohmann::json j;
  j["schema"] = "gcg/1";
  j["genus"] = r.genus;
  j["dim_H"] = r.dim_H;
  j["dim_C"] = r.dim_C;
  j["dim_F"] = r.dim_F;
  j["projective_group_dim"] = r.projective_group_dim;
  j["t1_degree"] = r.t1_degree;
  int use_gamma = gamma >= 0 ? gamma : default_gamma(genus);
  if (use_gamma >= 0 && genus >= 6) {
    FiberCheck f = fiber_dimension(genus, use_gamma, tail);
    j["gamma"] = use_gamma;
    j["h0_tail"] = tail;
    j["fiber"] = {{"value", f.value}, {"consistent", f.consistent}, {"detail", f.detail}};
    j["cone_codimension"] = cone_codimension(use_gamma, tail);
    j["fano_tangent_bound"] = fano_tangent_bound(genus, use_gamma);
  }
  out << j.dump(2) << "\n";
  return 0;
}

}  // namespace

std::string export_svg(const TrivalentPlanarGraph& g, const ChainDecomposition* decomp) {
  auto pos = tutte_layout(g);
  double min_x = 1e9, max_x = -1e9, min_y = 1e9, max_y = -1e9;
  for (const auto& p : pos) {
    min_x = std::min(min_x, p[0]);
    max_x = std::max(max_x, p[0]);
    min_y = std::min(min_y, p[1]);
    max_y = std::max(max_y, p[1]);
  }
  const double size = 700.0, margin = 50.0;
  double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  auto sx = [&](double x) { return margin + (x - min_x) / span * (size - 2 * margin); };
  auto sy = [&](double y) { return margin + (y - min_y) / span * (size - 2 * margin); };

  std::vector<char> in_a(static_cast<size_t>(g.vertex_count) + 1, 0);
  if (decomp)
    for (int v : decomp->part_A) in_a[static_cast<size_t>(v)] = 1;

  std::ostringstream svg;
  svg << std::fixed << std::setprecision(1);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  for (const auto& e : g.edges) {
    const auto& p = pos[static_cast<size_t>(e[0] - 1)];
    const auto& q = pos[static_cast<size_t>(e[1] - 1)];
    svg << "  <line x1=\"" << sx(p[0]) << "\" y1=\"" << sy(p[1]) << "\" x2=\"" << sx(q[0])
        << "\" y2=\"" << sy(q[1]) << "\" stroke=\"#444\" stroke-width=\"1.5\"/>\n";
  }
  if (decomp) {
    auto order = crossing_edges_in_cycle_order(g, *decomp);
    svg << "  <polygon points=\"";
    for (int e : order) {
      const auto& p = pos[static_cast<size_t>(g.edges[static_cast<size_t>(e)][0] - 1)];
      const auto& q = pos[static_cast<size_t>(g.edges[static_cast<size_t>(e)][1] - 1)];
      svg << sx((p[0] + q[0]) / 2) << "," << sy((p[1] + q[1]) / 2) << " ";
    }
    svg << "\" fill=\"none\" stroke=\"#777\" stroke-width=\"1.2\" stroke-dasharray=\"5 4\"/>\n";
  }
  for (int v = 1; v <= g.vertex_count; ++v) {
    const auto& p = pos[static_cast<size_t>(v - 1)];
    const char* fill = decomp ? (in_a[static_cast<size_t>(v)] ? "#c0504d" : "#4f81bd") : "#888888";
    svg << "  <circle cx=\"" << sx(p[0]) << "\" cy=\"" << sy(p[1]) << "\" r=\"9\" fill=\"" << fill
        << "\"/>\n";
    svg << "  <text x=\"" << sx(p[0]) << "\" y=\"" << sy(p[1]) + 3.5
        << "\" font-size=\"9\" text-anchor=\"middle\" fill=\"#fff\">" << v << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graph curves, plane configurations, and certified Wahl-map coranks"};
  app.require_subcommand(1);

  std::string kind = "standard";
  int genus = 7;
  std::string format = "json";
  std::string genus_range = "7..20";
  std::string input = "-";
  std::uint64_t seed_flag = 0;
  bool seed_given = false;
  int expect_corank = -1;
  bool matrix_csv = false;
  bool table2 = false;
  int gamma = -1;
  int tail = 0;
  int max_degree = 6;

  auto add_kind = [&](CLI::App* cmd) {
    cmd->add_option("--kind", kind, "standard | prism | tilde")
        ->check(CLI::IsMember({"standard", "prism", "tilde"}));
  };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed_flag, "seed for primes and shuffles")
        ->each([&](const std::string&) { seed_given = true; });
  };

  CLI::App* family = app.add_subcommand("family", "emit a family graph");
  family->add_option("--genus", genus, "genus")->required();
  add_kind(family);
  family->add_option("--format", format, "json | dot | svg")
      ->check(CLI::IsMember({"json", "dot", "svg"}));

  CLI::App* validate_cmd = app.add_subcommand("validate", "validate a graph JSON file");
  validate_cmd->add_option("--input", input, "path or - for stdin");

  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function tables");
  hilbert->add_option("--genus", genus, "genus")->required();
  add_kind(hilbert);
  hilbert->add_option("--degrees", max_degree, "highest degree")->check(CLI::Range(0, 40));
  hilbert->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* corank_cmd = app.add_subcommand("corank", "Wahl-map corank certificate");
  corank_cmd->add_option("--genus", genus, "genus")->required();
  add_kind(corank_cmd);
  add_seed(corank_cmd);
  corank_cmd->add_option("--expect-corank", expect_corank, "fail unless corank matches");
  corank_cmd->add_flag("--matrix", matrix_csv, "emit the matrix as CSV instead");

  CLI::App* degen = app.add_subcommand("degeneration", "degeneration data and union check");
  degen->add_option("--genus", genus, "genus")->required();
  degen->add_option("--kind", kind, "standard | tilde")
      ->check(CLI::IsMember({"standard", "tilde"}));

  CLI::App* numer = app.add_subcommand("numerology", "dimension identities");
  numer->add_option("--genus", genus, "genus");
  numer->add_flag("--table2", table2, "audit the parameter table");
  numer->add_option("--gamma", gamma, "corank input for fiber checks");
  numer->add_option("--tail", tail, "sum of twisted normal-bundle sections");

  CLI::App* suite = app.add_subcommand("suite", "full verification sweep");
  suite->add_option("--genus", genus_range, "range LO..HI");
  add_seed(suite);

  std::vector<const char*> argv;
  argv.push_back("gcg");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage;
    int code = app.exit(e, out, usage);
    err << usage.str();
    return code == 0 ? 0 : 2;
  }

  try {
    std::uint64_t seed = resolve_seed(seed_given, seed_flag);
    if (family->parsed()) return cmd_family(kind, genus, format, out);
    if (validate_cmd->parsed()) return cmd_validate(input, out);
    if (hilbert->parsed())
      return cmd_hilbert(kind, genus, max_degree, format == "json" ? "json" : "text", out);
    if (corank_cmd->parsed())
      return cmd_corank(kind, genus, seed, expect_corank, matrix_csv, out, err);
    if (degen->parsed()) return cmd_degeneration(kind, genus, out);
    if (numer->parsed()) return cmd_numerology(genus, table2, gamma, tail, out);
    if (suite->parsed()) {
      auto [lo, hi] = parse_genus_range(genus_range);
      SuiteResult res = run_suite(lo, hi, seed, out);
      return res.ok() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace gcg
