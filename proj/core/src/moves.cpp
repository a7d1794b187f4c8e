#include "graphk/moves.hpp"

#include "graphk/errors.hpp"
#include "graphk/ktheory.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace graphk {

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::remove_source: return "remove-source";
    case MoveKind::outsplit: return "outsplit";
    case MoveKind::insplit: return "insplit";
    case MoveKind::reduce: return "reduce";
    case MoveKind::collapse: return "collapse";
    case MoveKind::transitive: return "transitive";
    default: return "cuntz-splice";
  }
}

namespace {

Graph drop_vertex(const Graph& g, int w,
                  const std::vector<std::pair<std::pair<int, int>, Mult>>& added) {
  const int n = g.count();
  std::vector<std::string> names;
  std::vector<int> remap(n, -1);
  for (int v = 0; v < n; ++v) {
    if (v == w) continue;
    remap[v] = int(names.size());
    names.push_back(g.name(v));
  }
  std::vector<std::vector<Mult>> m(names.size(), std::vector<Mult>(names.size()));
  for (int u = 0; u < n; ++u) {
    if (u == w) continue;
    for (int v = 0; v < n; ++v) {
      if (v == w) continue;
      m[remap[u]][remap[v]] = g.mult(u, v);
    }
  }
  for (const auto& [edge, c] : added) {
    auto& cell = m[remap[edge.first]][remap[edge.second]];
    cell = mult_add(cell, c);
  }
  return Graph(std::move(names), std::move(m));
}

void require_name_free(const Graph& g, const std::string& name, const char* move) {
  if (g.has_vertex(name)) {
    throw move_error(move, "generated vertex name '" + name + "' already exists");
  }
}

// Aggregated per-neighbor counts of one partition block.
using BlockCounts = std::map<int, Mult>;

struct CheckedPartition {
  std::vector<BlockCounts> blocks;
  int infinite_block = -1;  // index of the block containing an infinite count
};

CheckedPartition check_partition(const Graph& g, int w, const PartitionSpec& p,
                                 bool outgoing, const char* move) {
  if (p.blocks.empty()) throw move_error(move, "partition must have at least one block");
  CheckedPartition cp;
  for (const auto& block : p.blocks) {
    if (block.empty()) throw move_error(move, "partition blocks must be nonempty");
    BlockCounts counts;
    for (const auto& [name, c] : block) {
      int u = g.index(name);
      if (!c.is_positive()) throw move_error(move, "partition counts must be positive");
      auto& cell = counts[u];
      cell = mult_add(cell, c);
    }
    cp.blocks.push_back(std::move(counts));
  }
  for (size_t b = 0; b < cp.blocks.size(); ++b) {
    for (const auto& [u, c] : cp.blocks[b]) {
      if (!c.infinite) continue;
      if (!outgoing) {
        throw move_error(move, "incoming-edge partitions cannot contain infinite counts");
      }
      if (cp.infinite_block != -1 && cp.infinite_block != int(b)) {
        throw move_error(move, "at most one partition block may be infinite");
      }
      cp.infinite_block = int(b);
    }
  }
  // aggregated block sums must reproduce the partitioned bundle exactly
  for (int u = 0; u < g.count(); ++u) {
    Mult target = outgoing ? g.mult(w, u) : g.mult(u, w);
    Mult sum = Mult::zero();
    for (const auto& block : cp.blocks) {
      auto it = block.find(u);
      if (it != block.end()) sum = mult_add(sum, it->second);
    }
    if (!outgoing && target.infinite) {
      throw move_error(move, "incoming bundle from '" + g.name(u) +
                                 "' is infinite and cannot be partitioned");
    }
    if (!(sum == target)) {
      throw move_error(move, "block sums for neighbor '" + g.name(u) + "' give " +
                                 to_string(sum) + ", edge multiplicity is " + to_string(target));
    }
  }
  return cp;
}

// Vertex list with w replaced in place by w.1 ... w.n; remap for the others.
struct SplitLayout {
  std::vector<std::string> names;
  std::vector<int> remap;       // old index -> new index (w maps to -1)
  std::vector<int> copies;      // new indices of w.1 ... w.n
};

SplitLayout split_layout(const Graph& g, int w, int n, const char* move) {
  SplitLayout lay;
  lay.remap.assign(size_t(g.count()), -1);
  for (int v = 0; v < g.count(); ++v) {
    if (v == w) {
      for (int i = 1; i <= n; ++i) {
        std::string name = g.name(w) + "." + std::to_string(i);
        require_name_free(g, name, move);
        lay.copies.push_back(int(lay.names.size()));
        lay.names.push_back(std::move(name));
      }
    } else {
      lay.remap[v] = int(lay.names.size());
      lay.names.push_back(g.name(v));
    }
  }
  return lay;
}

}  // namespace

Graph remove_source(const Graph& g, const std::string& w) {
  int wi = g.index(w);
  if (!g.is_source(wi)) throw move_error("remove-source", "'" + w + "' is not a source");
  if (!g.is_regular(wi)) {
    throw move_error("remove-source", "'" + w + "' is not a regular vertex");
  }
  return drop_vertex(g, wi, {});
}

Graph outsplit(const Graph& g, const std::string& w, const PartitionSpec& p) {
  int wi = g.index(w);
  if (g.is_sink(wi)) throw move_error("outsplit", "'" + w + "' is a sink");
  CheckedPartition cp = check_partition(g, wi, p, /*outgoing=*/true, "outsplit");
  const int n = int(cp.blocks.size());
  SplitLayout lay = split_layout(g, wi, n, "outsplit");

  std::vector<std::vector<Mult>> m(lay.names.size(), std::vector<Mult>(lay.names.size()));
  for (int u = 0; u < g.count(); ++u) {
    if (u == wi) continue;
    for (int v = 0; v < g.count(); ++v) {
      if (v == wi) continue;
      m[lay.remap[u]][lay.remap[v]] = g.mult(u, v);
    }
    // every edge into w is duplicated to each copy
    for (int i = 0; i < n; ++i) m[lay.remap[u]][lay.copies[i]] = g.mult(u, wi);
  }
  for (int b = 0; b < n; ++b) {
    for (const auto& [v, c] : cp.blocks[b]) {
      if (v == wi) {
        // a loop in block b yields one copy per range vertex
        for (int i = 0; i < n; ++i) {
          m[lay.copies[b]][lay.copies[i]] = mult_add(m[lay.copies[b]][lay.copies[i]], c);
        }
      } else {
        m[lay.copies[b]][lay.remap[v]] = mult_add(m[lay.copies[b]][lay.remap[v]], c);
      }
    }
  }
  return Graph(std::move(lay.names), std::move(m));
}

Graph insplit(const Graph& g, const std::string& w, const PartitionSpec& p) {
  int wi = g.index(w);
  if (!g.is_regular(wi)) throw move_error("insplit", "'" + w + "' is not a regular vertex");
  if (g.is_source(wi)) throw move_error("insplit", "'" + w + "' is a source");
  CheckedPartition cp = check_partition(g, wi, p, /*outgoing=*/false, "insplit");
  const int n = int(cp.blocks.size());
  SplitLayout lay = split_layout(g, wi, n, "insplit");

  std::vector<std::vector<Mult>> m(lay.names.size(), std::vector<Mult>(lay.names.size()));
  for (int u = 0; u < g.count(); ++u) {
    if (u == wi) continue;
    for (int v = 0; v < g.count(); ++v) {
      if (v == wi) continue;
      m[lay.remap[u]][lay.remap[v]] = g.mult(u, v);
    }
  }
  // incoming edges distributed by block
  for (int b = 0; b < n; ++b) {
    for (const auto& [u, c] : cp.blocks[b]) {
      if (u == wi) {
        // a loop lands in block b and is re-emitted by every copy
        for (int i = 0; i < n; ++i) {
          m[lay.copies[i]][lay.copies[b]] = mult_add(m[lay.copies[i]][lay.copies[b]], c);
        }
      } else {
        m[lay.remap[u]][lay.copies[b]] = mult_add(m[lay.remap[u]][lay.copies[b]], c);
      }
    }
  }
  // every copy emits a full copy of w's non-loop out-edges
  for (int v = 0; v < g.count(); ++v) {
    if (v == wi) continue;
    for (int i = 0; i < n; ++i) m[lay.copies[i]][lay.remap[v]] = g.mult(wi, v);
  }
  return Graph(std::move(lay.names), std::move(m));
}

Graph reduce(const Graph& g, const std::string& w) {
  int wi = g.index(w);
  if (!g.is_regular(wi)) throw move_error("reduce", "'" + w + "' is not a regular vertex");
  Mult total = g.out_total(wi);
  if (total.infinite || total.count != 1) {
    throw move_error("reduce", "s^-1(" + w + ") must be a single edge");
  }
  int target = -1;
  for (int v = 0; v < g.count(); ++v) {
    if (g.mult(wi, v).is_positive()) target = v;
  }
  if (target == wi) throw move_error("reduce", "the single edge out of '" + w + "' is a loop");
  int source = -1;
  for (int u = 0; u < g.count(); ++u) {
    if (!g.mult(u, wi).is_positive()) continue;
    if (source != -1) {
      throw move_error("reduce", "edges into '" + w + "' come from more than one vertex");
    }
    source = u;
  }
  if (source == -1) throw move_error("reduce", "'" + w + "' receives no edges");
  return drop_vertex(g, wi, {{{source, target}, g.mult(source, wi)}});
}

Graph collapse(const Graph& g, const std::string& w) {
  int wi = g.index(w);
  if (!g.is_regular(wi)) throw move_error("collapse", "'" + w + "' is not a regular vertex");
  if (g.mult(wi, wi).is_positive()) {
    throw move_error("collapse", "'" + w + "' is the base point of a loop");
  }
  std::vector<std::pair<std::pair<int, int>, Mult>> added;
  for (int u = 0; u < g.count(); ++u) {
    if (u == wi) continue;
    Mult in = g.mult(u, wi);
    if (!in.is_positive()) continue;
    for (int v = 0; v < g.count(); ++v) {
      if (v == wi) continue;
      Mult out = g.mult(wi, v);
      if (!out.is_positive()) continue;
      added.push_back({{u, v}, mult_mul(in, out)});
    }
  }
  return drop_vertex(g, wi, added);
}

Graph transitive(const Graph& g, const std::vector<std::string>& path) {
  if (path.size() < 2) throw move_error("transitive", "path must contain at least one edge");
  std::vector<int> idx;
  idx.reserve(path.size());
  for (const auto& name : path) idx.push_back(g.index(name));
  if (!g.mult(idx[0], idx[1]).infinite) {
    throw move_error("transitive",
                     "there are only finitely many edges from '" + path[0] + "' to '" + path[1] + "'");
  }
  for (size_t i = 0; i + 1 < idx.size(); ++i) {
    if (!g.mult(idx[i], idx[i + 1]).is_positive()) {
      throw move_error("transitive",
                       "no edge from '" + path[i] + "' to '" + path[i + 1] + "'");
    }
  }
  std::vector<std::vector<Mult>> m = g.matrix();
  m[size_t(idx.front())][size_t(idx.back())] = Mult::inf();
  return Graph(g.names(), std::move(m));
}

bool supports_two_simple_cycles(const Graph& g, int w) {
  Mult loop = g.mult(w, w);
  if (loop.infinite || loop.count >= 2) return true;
  auto reach = reachability(g);
  bool longer = false;
  for (int u = 0; u < g.count() && !longer; ++u) {
    if (u != w && g.mult(w, u).is_positive() && reach[u][w]) longer = true;
  }
  if (loop.count == 1) return longer;
  if (!longer) return false;
  // no loop: count vertex-simple cycles through w, stopping at two; an edge
  // of multiplicity >= 2 anywhere on a cycle already gives two
  int found = 0;
  std::vector<bool> visited(size_t(g.count()), false);
  std::function<void(int, bool)> dfs = [&](int v, bool any_multi) {
    if (found >= 2) return;
    for (int u = 0; u < g.count() && found < 2; ++u) {
      const Mult& e = g.mult(v, u);
      if (!e.is_positive()) continue;
      bool multi = any_multi || e.infinite || e.count >= 2;
      if (u == w) {
        found += multi ? 2 : 1;
        continue;
      }
      if (visited[size_t(u)]) continue;
      visited[size_t(u)] = true;
      dfs(u, multi);
      visited[size_t(u)] = false;
    }
  };
  dfs(w, false);
  return found >= 2;
}

Graph cuntz_splice(const Graph& g, const std::string& w) {
  int wi = g.index(w);
  if (!supports_two_simple_cycles(g, wi)) {
    throw move_error("cuntz-splice",
                     "'" + w + "' is not the base point of two simple cycles");
  }
  std::string c1 = w + ".cs1", c2 = w + ".cs2";
  require_name_free(g, c1, "cuntz-splice");
  require_name_free(g, c2, "cuntz-splice");
  const int n = g.count();
  std::vector<std::string> names = g.names();
  names.push_back(c1);
  names.push_back(c2);
  std::vector<std::vector<Mult>> m(size_t(n) + 2, std::vector<Mult>(size_t(n) + 2));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) m[u][v] = g.mult(u, v);
  }
  const int i1 = n, i2 = n + 1;
  m[wi][i1] = Mult::of(1);  // e1
  m[i1][wi] = Mult::of(1);  // e2
  m[i1][i2] = Mult::of(1);  // f1
  m[i2][i1] = Mult::of(1);  // f2
  m[i1][i1] = Mult::of(1);  // h1
  m[i2][i2] = Mult::of(1);  // h2
  return Graph(std::move(names), std::move(m));
}

namespace {

Graph apply_step(const Graph& g, const MoveStep& step) {
  switch (step.kind) {
    case MoveKind::remove_source: return remove_source(g, step.vertex);
    case MoveKind::outsplit: return outsplit(g, step.vertex, step.partition);
    case MoveKind::insplit: return insplit(g, step.vertex, step.partition);
    case MoveKind::reduce: return reduce(g, step.vertex);
    case MoveKind::collapse: return collapse(g, step.vertex);
    case MoveKind::transitive: return transitive(g, step.path);
    default: return cuntz_splice(g, step.vertex);
  }
}

}  // namespace

ApplyResult apply_script(const Graph& g, const MoveScript& s, bool check) {
  ApplyResult out{g, {g}};
  int base_sing = 0;
  FgAbelianGroup base_k0;
  bool base_simple = false;
  if (check) {
    base_sing = singular_count(g);
    base_k0 = k0(g).group;
    base_simple = is_simple(g);
  }
  for (size_t i = 0; i < s.steps.size(); ++i) {
    Graph next = [&] {
      try {
        return apply_step(out.final, s.steps[i]);
      } catch (const move_error& e) {
        throw move_error(e.move(), e.clause(), int(i));
      } catch (const input_error& e) {
        throw move_error(to_string(s.steps[i].kind), e.what(), int(i));
      }
    }();
    if (check) {
      if (singular_count(next) != base_sing) {
        throw move_error(to_string(s.steps[i].kind),
                         "check: singular vertex count changed", int(i));
      }
      if (!fg_isomorphic(k0(next).group, base_k0)) {
        throw move_error(to_string(s.steps[i].kind),
                         "check: K0 isomorphism class changed", int(i));
      }
      if (base_simple && !is_simple(next)) {
        throw move_error(to_string(s.steps[i].kind), "check: simplicity lost", int(i));
      }
    }
    out.final = next;
    out.trace.push_back(std::move(next));
  }
  return out;
}

bool verify_bridge(const Graph& g1, const MoveScript& s1, const Graph& g2,
                   const MoveScript& s2, int vertex_bound) {
  Graph a = apply_script(g1, s1, /*check=*/false).final;
  Graph b = apply_script(g2, s2, /*check=*/false).final;
  return graphs_isomorphic(a, b, vertex_bound);
}

}  // namespace graphk
