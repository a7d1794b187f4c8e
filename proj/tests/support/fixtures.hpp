#pragma once

// The named graphs used across the test suites.

#include "graphk/graph.hpp"

#include <utility>
#include <vector>

namespace fixtures {

using graphk::Graph;
using graphk::Mult;

inline Graph build(std::vector<std::string> names, std::vector<std::vector<long>> rows,
                   std::vector<std::pair<int, int>> inf_cells = {}) {
  auto m = std::vector<std::vector<Mult>>(names.size(), std::vector<Mult>(names.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) m[i][j] = Mult::of(rows[i][j]);
  }
  for (auto [i, j] : inf_cells) m[size_t(i)][size_t(j)] = Mult::inf();
  return Graph(std::move(names), std::move(m));
}

// one vertex, countably many loops
inline Graph e_infinity() { return build({"v"}, {{0}}, {{0, 0}}); }

// one vertex, two loops
inline Graph e_two() { return build({"v"}, {{2}}); }

// Cuntz splice of e_two: [[2,1,0],[1,1,1],[0,1,1]]
inline Graph e_two_minus() {
  return build({"v", "c1", "c2"}, {{2, 1, 0}, {1, 1, 1}, {0, 1, 1}});
}

// Cuntz splice of e_infinity: [[inf,1,0],[1,1,1],[0,1,1]]
inline Graph e_infinity_minus() {
  return build({"v", "c1", "c2"}, {{0, 1, 0}, {1, 1, 1}, {0, 1, 1}}, {{0, 0}});
}

// two vertices, each with infinitely many loops, joined both ways
inline Graph counterexample_e() {
  return build({"u", "v"}, {{0, 1}, {1, 0}}, {{0, 0}, {1, 1}});
}

// three vertices: A = [[2,1,1],[1,2,1],[1,1,inf]]
inline Graph counterexample_f() {
  return build({"a", "b", "c"}, {{2, 1, 1}, {1, 2, 1}, {1, 1, 0}}, {{2, 2}});
}

// two vertices: A = [[2,1],[1,2]]
inline Graph f_tilde() { return build({"a", "b"}, {{2, 1}, {1, 2}}); }

}  // namespace fixtures
