#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphk::cli {

// Bounds configurable from a `key = value` file (# comments allowed):
//   aut_bound, iso_vertex_bound, search_depth, max_split
struct Config {
  long aut_bound = 2048;
  int iso_vertex_bound = 10;
  int search_depth = 6;
  int max_split = 1;
};

Config parse_config(const std::string& text);

// Runs one command; returns the process exit code.
//   0  success / Equivalent / Isomorphic / bridge verified / Found
//   1  NotEquivalent / NotIsomorphic / bridge mismatch
//   2  OpenProblem / Undecided / NotFoundWithinBounds
//   3  NotApplicable
//   4  input, move, or capacity error (single-line diagnostic on err)
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphk::cli
