// Directed graphs with designated start/stop nodes, an edge-list text
// parser, and the exhaustive Hamiltonian-path oracle used as ground truth.
#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

namespace lightpath {

struct Digraph {
  int n = 0;
  int start = 0;
  int stop = 0;
  std::vector<std::pair<int, int>> arcs;  // sorted, unique, no self-loops
  std::vector<std::vector<int>> out;      // ascending successor lists

  int out_degree(int u) const { return static_cast<int>(out[u].size()); }
};

// Node sequence; consecutive pairs are arcs and no node repeats.
using Path = std::vector<int>;

// Validates and builds a graph from an arbitrary arc list.
// Throws std::invalid_argument on self-loops, duplicates, bad indices, or
// start == stop with n > 1.
Digraph make_digraph(int n, std::vector<std::pair<int, int>> arcs, int start, int stop);

// Edge-list format: first non-comment line "n start stop", then one "u v"
// line per arc; '#' starts a comment, blank lines are ignored.
// Throws ParseError naming the offending line.
Digraph parse_graph(std::istream& in);

// Every simple path from start to stop visiting all n nodes exactly once,
// in lexicographic order. Exhaustive depth-first search; fine for n <= ~14.
std::vector<Path> hamiltonian_paths(const Digraph& g);

// Decision form; stops at the first path found.
bool has_hamiltonian_path(const Digraph& g);

}  // namespace lightpath
