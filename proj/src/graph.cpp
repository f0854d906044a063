#include "lightpath/graph.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lightpath/errors.hpp"

namespace lightpath {

namespace {

Digraph assemble(int n, std::vector<std::pair<int, int>> arcs, int start, int stop) {
  Digraph g;
  g.n = n;
  g.start = start;
  g.stop = stop;
  std::sort(arcs.begin(), arcs.end());
  g.arcs = std::move(arcs);
  g.out.assign(n, {});
  for (auto [u, v] : g.arcs) g.out[u].push_back(v);  // sorted input keeps lists ascending
  return g;
}

}  // namespace

Digraph make_digraph(int n, std::vector<std::pair<int, int>> arcs, int start, int stop) {
  if (n < 1) throw std::invalid_argument("node count must be >= 1");
  if (start < 0 || start >= n) throw std::invalid_argument("start node out of range");
  if (stop < 0 || stop >= n) throw std::invalid_argument("stop node out of range");
  if (start == stop && n > 1)
    throw std::invalid_argument("start and stop must differ unless n = 1");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("arc (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range");
    if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
    if (!seen.insert({u, v}).second)
      throw std::invalid_argument("duplicate arc (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
  }
  return assemble(n, std::move(arcs), start, stop);
}

Digraph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1, start = 0, stop = 0;
  std::vector<std::pair<int, int>> arcs;
  std::set<std::pair<int, int>> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<long long> values;
    long long v;
    while (fields >> v) values.push_back(v);
    if (!fields.eof()) throw ParseError(line_no, "expected whitespace-separated integers");
    if (values.empty()) continue;

    if (n < 0) {
      if (values.size() != 3)
        throw ParseError(line_no, "header must be \"n start stop\", got " +
                                      std::to_string(values.size()) + " fields");
      if (values[0] < 1 || values[0] > 1'000'000)
        throw ParseError(line_no, "node count must be in [1, 1000000]");
      n = static_cast<int>(values[0]);
      if (values[1] < 0 || values[1] >= n) throw ParseError(line_no, "start node out of range");
      if (values[2] < 0 || values[2] >= n) throw ParseError(line_no, "stop node out of range");
      start = static_cast<int>(values[1]);
      stop = static_cast<int>(values[2]);
      if (start == stop && n > 1)
        throw ParseError(line_no, "start and stop must differ unless n = 1");
      continue;
    }

    if (values.size() != 2)
      throw ParseError(line_no, "arc line must be \"u v\", got " +
                                    std::to_string(values.size()) + " fields");
    if (values[0] < 0 || values[0] >= n || values[1] < 0 || values[1] >= n)
      throw ParseError(line_no, "arc (" + std::to_string(values[0]) + ", " +
                                    std::to_string(values[1]) + ") out of range for n = " +
                                    std::to_string(n));
    const auto u = static_cast<int>(values[0]);
    const auto w = static_cast<int>(values[1]);
    if (u == w) throw ParseError(line_no, "self-loop at node " + std::to_string(u));
    if (!seen.insert({u, w}).second)
      throw ParseError(line_no, "duplicate arc (" + std::to_string(u) + ", " +
                                    std::to_string(w) + ")");
    arcs.emplace_back(u, w);
  }
  if (n < 0) throw ParseError(line_no, "missing \"n start stop\" header");
  return assemble(n, std::move(arcs), start, stop);
}

namespace {

struct PathSearch {
  const Digraph& g;
  bool decide_only;
  std::vector<Path> found;
  std::vector<char> visited;
  Path path;

  explicit PathSearch(const Digraph& graph, bool decide) : g(graph), decide_only(decide) {
    visited.assign(g.n, 0);
  }

  // Returns true to short-circuit in decision mode.
  bool dfs(int u) {
    if (static_cast<int>(path.size()) == g.n) {
      if (u != g.stop) return false;
      found.push_back(path);
      return decide_only;
    }
    for (int v : g.out[u]) {
      if (visited[v]) continue;
      // The stop node can only be the final entry of a complete path.
      if (v == g.stop && static_cast<int>(path.size()) + 1 < g.n) continue;
      visited[v] = 1;
      path.push_back(v);
      if (dfs(v)) return true;
      path.pop_back();
      visited[v] = 0;
    }
    return false;
  }

  void run() {
    visited[g.start] = 1;
    path.push_back(g.start);
    dfs(g.start);
  }
};

}  // namespace

std::vector<Path> hamiltonian_paths(const Digraph& g) {
  PathSearch search(g, false);
  search.run();
  return std::move(search.found);
}

bool has_hamiltonian_path(const Digraph& g) {
  PathSearch search(g, true);
  search.run();
  return !search.found.empty();
}

}  // namespace lightpath
