#include "graphk/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace graphk {

Mult mult_add(const Mult& a, const Mult& b) {
  if (a.infinite || b.infinite) return Mult::inf();
  return Mult::of(a.count + b.count);
}

Mult mult_mul(const Mult& a, const Mult& b) {
  if (a.is_zero() || b.is_zero()) return Mult::zero();
  if (a.infinite || b.infinite) return Mult::inf();
  return Mult::of(a.count * b.count);
}

bool mult_less(const Mult& a, const Mult& b) {
  if (a.infinite) return false;
  if (b.infinite) return true;
  return a.count < b.count;
}

std::string to_string(const Mult& m) { return m.infinite ? "inf" : m.count.str(); }

Graph::Graph(std::vector<std::string> names, std::vector<std::vector<Mult>> mult)
    : names_(std::move(names)), m_(std::move(mult)) {
  if (names_.empty()) throw input_error("graph: vertex set must be nonempty");
  if (m_.size() != names_.size()) throw input_error("graph: matrix row count mismatch");
  for (const auto& row : m_) {
    if (row.size() != names_.size()) throw input_error("graph: matrix column count mismatch");
    for (const auto& e : row) {
      if (!e.infinite && e.count < 0) throw input_error("graph: negative multiplicity");
    }
  }
  for (size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], int(i)).second) {
      throw input_error("graph: duplicate vertex '" + names_[i] + "'");
    }
  }
}

int Graph::index(const std::string& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw input_error("unknown vertex '" + v + "'");
  return it->second;
}

Mult Graph::out_total(int v) const {
  Mult total = Mult::zero();
  for (int u = 0; u < count(); ++u) total = mult_add(total, mult(v, u));
  return total;
}

bool Graph::is_infinite_emitter(int v) const {
  // with finitely many vertices, an infinite row sum forces an inf entry
  for (int u = 0; u < count(); ++u) {
    if (mult(v, u).infinite) return true;
  }
  return false;
}

bool Graph::is_source(int v) const {
  for (int u = 0; u < count(); ++u) {
    if (mult(u, v).is_positive()) return false;
  }
  return true;
}

bool Graph::has_infinite_edges() const {
  for (int v = 0; v < count(); ++v) {
    if (is_infinite_emitter(v)) return true;
  }
  return false;
}

VertexClassification classify_vertices(const Graph& g) {
  VertexClassification c;
  for (int v = 0; v < g.count(); ++v) {
    if (g.is_sink(v)) c.sinks.push_back(v);
    if (g.is_infinite_emitter(v)) c.infinite_emitters.push_back(v);
    if (g.is_singular(v)) {
      c.singular.push_back(v);
    } else {
      c.regular.push_back(v);
    }
    if (g.is_source(v)) c.sources.push_back(v);
  }
  return c;
}

int singular_count(const Graph& g) {
  int n = 0;
  for (int v = 0; v < g.count(); ++v) {
    if (g.is_singular(v)) ++n;
  }
  return n;
}

std::vector<std::vector<bool>> reachability(const Graph& g) {
  const int n = g.count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int s = 0; s < n; ++s) {
    std::vector<int> stack{s};
    reach[s][s] = true;  // length-zero path
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (g.mult(u, v).is_positive() && !reach[s][v]) {
          reach[s][v] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return reach;
}

bool reaches(const Graph& g, const std::string& from, const std::string& to) {
  int s = g.index(from), t = g.index(to);
  return reachability(g)[s][t];
}

namespace {

// Iterative Tarjan; returns component id per vertex.
std::vector<int> scc_ids(const Graph& g, int* component_count) {
  const int n = g.count();
  std::vector<int> ids(n, -1), low(n, 0), num(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0, comps = 0;

  struct Frame {
    int v;
    int next;
  };
  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    num[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < n) {
        int w = f.next++;
        if (!g.mult(f.v, w).is_positive()) continue;
        if (num[w] == -1) {
          num[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        if (low[f.v] == num[f.v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            ids[w] = comps;
            if (w == f.v) break;
          }
          ++comps;
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  if (component_count != nullptr) *component_count = comps;
  return ids;
}

}  // namespace

std::vector<int> vertices_on_cycles(const Graph& g) {
  const int n = g.count();
  int comps = 0;
  std::vector<int> ids = scc_ids(g, &comps);
  std::vector<bool> has_edge(comps, false);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (g.mult(u, v).is_positive() && ids[u] == ids[v]) has_edge[ids[u]] = true;
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (has_edge[ids[v]]) out.push_back(v);
  }
  return out;
}

bool has_cycle(const Graph& g) { return !vertices_on_cycles(g).empty(); }

bool is_cofinal(const Graph& g) {
  auto cyc = vertices_on_cycles(g);
  if (cyc.empty()) return true;
  auto reach = reachability(g);
  for (int v = 0; v < g.count(); ++v) {
    for (int c : cyc) {
      if (!reach[v][c]) return false;
    }
  }
  return true;
}

bool satisfies_condition_l(const Graph& g) {
  // Vertices of total out-multiplicity exactly one form a partial
  // functional graph; an exitless cycle is a cycle inside it.
  const int n = g.count();
  std::vector<int> next(n, -1);
  for (int v = 0; v < n; ++v) {
    Mult total = g.out_total(v);
    if (total.infinite || total.count != 1) continue;
    for (int u = 0; u < n; ++u) {
      if (g.mult(v, u).is_positive()) {
        next[v] = u;
        break;
      }
    }
  }
  std::vector<int> state(n, 0);  // 0 unvisited, 1 in progress, 2 done
  for (int v = 0; v < n; ++v) {
    if (state[v] != 0 || next[v] == -1) continue;
    int u = v;
    std::vector<int> trail;
    while (u != -1 && state[u] == 0) {
      state[u] = 1;
      trail.push_back(u);
      u = next[u];
    }
    if (u != -1 && state[u] == 1) return false;  // closed loop of out-degree-1 vertices
    for (int w : trail) state[w] = 2;
  }
  return true;
}

SimplicityReport simplicity(const Graph& g) {
  SimplicityReport r;
  r.cofinal = is_cofinal(g);
  r.condition_l = satisfies_condition_l(g);
  r.singular_reachable = true;
  auto reach = reachability(g);
  for (int w = 0; w < g.count() && r.singular_reachable; ++w) {
    if (!g.is_singular(w)) continue;
    for (int v = 0; v < g.count(); ++v) {
      if (!reach[v][w]) {
        r.singular_reachable = false;
        break;
      }
    }
  }
  return r;
}

bool is_simple(const Graph& g) { return simplicity(g).simple(); }

std::vector<int> saturation(const Graph& g, const std::vector<int>& v) {
  const int n = g.count();
  std::vector<bool> in(n, false);
  for (int x : v) {
    if (x < 0 || x >= n) throw input_error("saturation: vertex index out of range");
    in[x] = true;
  }
  // Sigma_0: reachable closure
  auto reach = reachability(g);
  std::vector<bool> sat(n, false);
  for (int s = 0; s < n; ++s) {
    if (!in[s]) continue;
    for (int t = 0; t < n; ++t) {
      if (reach[s][t]) sat[t] = true;
    }
  }
  // Sigma_{k+1}: add regular vertices all of whose out-edges land inside
  bool changed = true;
  while (changed) {
    changed = false;
    for (int w = 0; w < n; ++w) {
      if (sat[w] || !g.is_regular(w)) continue;
      bool all_in = true;
      for (int t = 0; t < n && all_in; ++t) {
        if (g.mult(w, t).is_positive() && !sat[t]) all_in = false;
      }
      if (all_in) {
        sat[w] = true;
        changed = true;
      }
    }
  }
  std::vector<int> out;
  for (int w = 0; w < n; ++w) {
    if (sat[w]) out.push_back(w);
  }
  return out;
}

std::vector<int> saturation(const Graph& g, const std::vector<std::string>& v) {
  std::vector<int> idx;
  idx.reserve(v.size());
  for (const auto& name : v) idx.push_back(g.index(name));
  return saturation(g, idx);
}

namespace {

std::string serialize_permuted(const Graph& g, const std::vector<int>& perm) {
  std::string s;
  for (int i : perm) {
    for (int j : perm) {
      s += to_string(g.mult(i, j));
      s += ' ';
    }
  }
  return s;
}

}  // namespace

std::string canonical_key(const Graph& g, int vertex_bound) {
  const int n = g.count();
  if (n > vertex_bound) {
    throw capacity_error("canonical form: graph has " + std::to_string(n) +
                         " vertices, bound is " + std::to_string(vertex_bound));
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s = serialize_permuted(g, perm);
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool graphs_isomorphic(const Graph& a, const Graph& b, int vertex_bound) {
  if (a.count() != b.count()) return false;
  const int n = a.count();
  if (n > vertex_bound) {
    throw capacity_error("isomorphism check: graph has " + std::to_string(n) +
                         " vertices, bound is " + std::to_string(vertex_bound));
  }
  // quick invariant screen: sorted multisets of (row, column) profiles
  auto profile = [](const Graph& g) {
    std::multiset<std::string> rows;
    for (int i = 0; i < g.count(); ++i) {
      std::multiset<std::string> row, col;
      for (int j = 0; j < g.count(); ++j) {
        row.insert(to_string(g.mult(i, j)));
        col.insert(to_string(g.mult(j, i)));
      }
      std::string s;
      for (const auto& x : row) s += x + ",";
      s += "|";
      for (const auto& x : col) s += x + ",";
      rows.insert(s);
    }
    return rows;
  };
  if (profile(a) != profile(b)) return false;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        if (!(a.mult(i, j) == b.mult(perm[i], perm[j]))) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace graphk
