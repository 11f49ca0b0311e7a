#pragma once

// Command-line front end: subcommands over all modules, deterministic JSON,
// exit codes 0 (ok), 1 (validation or expectation failure), 2 (parse error),
// 3 (internal invariant violation).

#include <iosfwd>
#include <string>
#include <vector>

#include "gcg/families.hpp"
#include "gcg/graph.hpp"

namespace gcg {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Planar straight-line drawing from a Tutte embedding with the distinguished
// face as outer boundary.  With a decomposition, the two parts are colored
// and a dotted closed path crosses the part-separating edges in double-curve
// order.
std::string export_svg(const TrivalentPlanarGraph& g, const ChainDecomposition* decomp = nullptr);

}  // namespace gcg
