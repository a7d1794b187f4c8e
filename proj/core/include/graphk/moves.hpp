#pragma once

#include "graphk/graph.hpp"

#include <string>
#include <vector>

namespace graphk {

// One block of an edge partition: multiplicities drawn per neighbor.  The
// blocks of a partition must reproduce the partitioned edge bundle exactly
// when aggregated per neighbor.  Edges between a fixed pair of vertices are
// interchangeable, so multiplicity splits represent edge-set partitions
// faithfully up to graph isomorphism, and a single infinite count stands
// for an infinite block.
struct PartitionSpec {
  // blocks[i] = list of (neighbor name, count); counts positive or infinite
  std::vector<std::vector<std::pair<std::string, Mult>>> blocks;
};

enum class MoveKind {
  remove_source,  // (S)
  outsplit,       // (O)
  insplit,        // (I)
  reduce,         // (R)
  collapse,       // (C)
  transitive,     // (T)
  cuntz_splice,   // (CS)
};

std::string to_string(MoveKind k);

struct MoveStep {
  MoveKind kind;
  std::string vertex;              // all moves except transitive
  PartitionSpec partition;         // outsplit / insplit
  std::vector<std::string> path;   // transitive
};

struct MoveScript {
  std::vector<MoveStep> steps;
};

// Move (S): delete a source that is a regular vertex, with its out-edges.
Graph remove_source(const Graph& g, const std::string& w);

// Move (O): split w (not a sink) along a partition of its outgoing edges,
// at most one block infinite.  Copies are named w.1 ... w.n and take w's
// place in the vertex order; every in-edge of w is duplicated to each copy,
// out-edges are distributed by block.
Graph outsplit(const Graph& g, const std::string& w, const PartitionSpec& p);

// Move (I): split a regular non-source w along a partition of its incoming
// edges (finite counts only).  In-edges are distributed by block; every
// copy emits a full copy of w's out-edges.
Graph insplit(const Graph& g, const std::string& w, const PartitionSpec& p);

// Move (R): w regular, receives edges from a single vertex x, emits exactly
// one edge f with r(f) != w; each edge x -> w becomes an edge x -> r(f).
Graph reduce(const Graph& g, const std::string& w);

// Move (C): delete a loop-free regular vertex, composing each in-edge with
// each out-edge (multiplicities multiply, infinity absorbing).
Graph collapse(const Graph& g, const std::string& w);

// Move (T): given a path v0 v1 ... vn (n >= 1) whose first step carries
// infinitely many parallel edges, add infinitely many edges v0 -> vn.
Graph transitive(const Graph& g, const std::vector<std::string>& path);

// Decision procedure for "w is the base point of at least two simple
// cycles": a loop of multiplicity >= 2, or a loop plus a longer cycle
// through w, or two distinct vertex-simple cycles through w (an edge of
// multiplicity >= 2 on such a cycle counts as two).
bool supports_two_simple_cycles(const Graph& g, int w);

// Move (CS): attach the two-vertex splice gadget at w (named w.cs1, w.cs2,
// appended after the existing vertices).
Graph cuntz_splice(const Graph& g, const std::string& w);

struct ApplyResult {
  Graph final;
  std::vector<Graph> trace;  // start graph first, final graph last
};

// Applies the steps in order.  With check set, every intermediate graph is
// verified to preserve the singular-vertex count and the K0 isomorphism
// class, and to stay simple when the start graph is simple; every move
// provably preserves all three, so a check failure is a move_error.  Step
// errors carry the step index.
ApplyResult apply_script(const Graph& g, const MoveScript& s, bool check);

// True iff the two forward scripts lead to isomorphic graphs; witnesses
// move equivalence of g1 and g2 without implementing inverse moves.
bool verify_bridge(const Graph& g1, const MoveScript& s1, const Graph& g2,
                   const MoveScript& s2, int vertex_bound = 10);

struct SearchBounds {
  int depth = 6;         // per side
  int max_split = 1;     // finite counts peeled off a split bundle
  int max_vertices = 5;  // states above this are not expanded
  int max_states = 20000;
};

struct SearchResult {
  bool found = false;
  MoveScript script1;
  MoveScript script2;
};

// Bidirectional breadth-first search over canonical forms, expanding by the
// moves (S), (O), (I), (R), (C), (T) — all of them witnesses for move
// equivalence.  The Cuntz splice is deliberately not an expansion move.
// Returns a verified bridge or reports NotFoundWithinBounds (found = false);
// never a false positive.
SearchResult search_move_equivalence(const Graph& g1, const Graph& g2,
                                     const SearchBounds& bounds);

}  // namespace graphk
