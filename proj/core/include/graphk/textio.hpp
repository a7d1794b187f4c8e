#pragma once

#include "graphk/graph.hpp"
#include "graphk/groups.hpp"
#include "graphk/intmatrix.hpp"
#include "graphk/moves.hpp"

#include <string>

namespace graphk {

// Graph text format (UTF-8, line based, `#` starts a comment, blank lines
// ignored):
//   vertex <id>            one per vertex, in order, all before any edge
//   edge <src> <dst> <n>   n a positive decimal integer or `inf`
// Unmentioned pairs have multiplicity zero; duplicate edge lines for the
// same pair are an error.  All errors carry the offending line number.
Graph parse_graph(const std::string& text);

// Canonical form: vertex lines in order, then edge lines in row-major
// order.  Reparsing yields an equal graph.
std::string print_graph(const Graph& g);

// Matrix text format: first line `rows cols`, then one line of
// space-separated decimal integers per row.
IntMatrix parse_matrix(const std::string& text);
std::string print_matrix(const IntMatrix& m);

// Move script format, one step per line:
//   remove-source <w> | reduce <w> | collapse <w> | cuntz-splice <w>
//   outsplit <w> :: <pairs> :: <pairs> ...
//   insplit <w> :: <pairs> :: ...
//   transitive <v0> <v1> ... <vn>
// where <pairs> is a comma-separated list of <vertex>=<count|inf> and each
// `::`-separated group is one block.  `inf` is rejected in insplit blocks.
MoveScript parse_script(const std::string& text);
std::string print_script(const MoveScript& s);

// Field descriptor syntax: Q | R | C | F<q> | algclosed | algclosed:p=<p> |
// nfq | generic.
FieldDescriptor parse_field(const std::string& text);
std::string print_field(const FieldDescriptor& f);

}  // namespace graphk
