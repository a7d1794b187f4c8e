#pragma once

#include "graphk/errors.hpp"
#include "graphk/numeric.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace graphk {

// Edge multiplicity: a nonnegative integer or infinity.  Infinity is the
// top element; inf + n = inf, inf * n = inf for n >= 1, and 0 * inf = 0.
struct Mult {
  bool infinite = false;
  Int count = 0;

  static Mult inf() { return Mult{true, 0}; }
  static Mult of(Int n) { return Mult{false, std::move(n)}; }
  static Mult zero() { return Mult{false, 0}; }

  bool is_zero() const { return !infinite && count == 0; }
  bool is_positive() const { return infinite || count > 0; }
  bool is_finite() const { return !infinite; }

  bool operator==(const Mult& o) const {
    if (infinite != o.infinite) return false;
    return infinite || count == o.count;
  }
};

Mult mult_add(const Mult& a, const Mult& b);
Mult mult_mul(const Mult& a, const Mult& b);
// Total order with infinity on top (used by canonical forms).
bool mult_less(const Mult& a, const Mult& b);
std::string to_string(const Mult& m);

// Finite-vertex directed multigraph.  The vertex ordering is part of the
// value (it fixes matrix row/column order) but every predicate and
// invariant below is ordering-independent.  Values are immutable after
// construction.
class Graph {
 public:
  Graph(std::vector<std::string> names, std::vector<std::vector<Mult>> mult);

  int count() const { return int(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[size_t(i)]; }
  // input_error for unknown identifiers
  int index(const std::string& v) const;
  bool has_vertex(const std::string& v) const { return index_.count(v) != 0; }

  const Mult& mult(int u, int v) const { return m_[size_t(u)][size_t(v)]; }
  const std::vector<std::vector<Mult>>& matrix() const { return m_; }

  Mult out_total(int v) const;
  bool is_sink(int v) const { return out_total(v).is_zero(); }
  bool is_infinite_emitter(int v) const;
  bool is_singular(int v) const { return is_sink(v) || is_infinite_emitter(v); }
  bool is_regular(int v) const { return !is_singular(v); }
  bool is_source(int v) const;
  bool has_infinite_edges() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<Mult>> m_;
};

// Partition of the vertices by emission behaviour: regular vs singular,
// with singular = sinks plus infinite emitters.
struct VertexClassification {
  std::vector<int> regular;
  std::vector<int> singular;
  std::vector<int> sinks;
  std::vector<int> infinite_emitters;
  std::vector<int> sources;
};

VertexClassification classify_vertices(const Graph& g);

int singular_count(const Graph& g);

// reach[u][v] true iff a path (length 0 allowed) exists u -> v.
std::vector<std::vector<bool>> reachability(const Graph& g);

bool reaches(const Graph& g, const std::string& from, const std::string& to);

// Vertices lying on some cycle: the vertex's strongly connected component
// contains an edge (including a self-loop).
std::vector<int> vertices_on_cycles(const Graph& g);

bool has_cycle(const Graph& g);

// For a finite vertex set, cofinality is equivalent to: every vertex
// reaches every vertex that lies on a cycle.  (An infinite path visits
// some vertex infinitely often, and that vertex is on a cycle; conversely
// a cycle yields an infinite path, and reaching a cycle vertex reaches a
// vertex of that path.)
bool is_cofinal(const Graph& g);

// Condition (L): no cycle without an exit.  A cycle without an exit is a
// cyclic sequence of vertices each of total out-multiplicity exactly one,
// the single edge going to the next vertex of the sequence.
bool satisfies_condition_l(const Graph& g);

struct SimplicityReport {
  bool cofinal = false;
  bool condition_l = false;
  bool singular_reachable = false;  // every vertex reaches every singular vertex
  bool simple() const { return cofinal && condition_l && singular_reachable; }
};

SimplicityReport simplicity(const Graph& g);
bool is_simple(const Graph& g);

// Smallest saturated hereditary set containing V, by the standard
// iteration: start from the reachable closure of V, then repeatedly add
// regular vertices all of whose out-edges land inside.
std::vector<int> saturation(const Graph& g, const std::vector<int>& v);
std::vector<int> saturation(const Graph& g, const std::vector<std::string>& v);

// Entry-wise bijection test over vertex permutations (infinity matches
// infinity).  capacity_error above the vertex bound.
bool graphs_isomorphic(const Graph& a, const Graph& b, int vertex_bound = 10);

// Row-major serialization of the lexicographically minimal permuted
// multiplicity matrix; equal strings iff isomorphic graphs.
std::string canonical_key(const Graph& g, int vertex_bound = 10);

}  // namespace graphk
