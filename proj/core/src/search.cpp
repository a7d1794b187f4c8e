#include "graphk/errors.hpp"
#include "graphk/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

namespace graphk {

namespace {

// Two-block splits of one out-bundle entry, peeling at most max_split
// edges off the bundle on either side.
std::vector<std::pair<Mult, Mult>> entry_splits(const Mult& m, int max_split) {
  std::vector<std::pair<Mult, Mult>> out;
  auto push = [&out](const Mult& a, const Mult& b) {
    for (const auto& [x, y] : out) {
      if (x == a && y == b) return;
    }
    out.emplace_back(a, b);
  };
  if (m.infinite) {
    push(Mult::inf(), Mult::zero());
    push(Mult::zero(), Mult::inf());
    for (int k = 1; k <= max_split; ++k) {
      push(Mult::of(k), Mult::inf());
      push(Mult::inf(), Mult::of(k));
    }
  } else {
    for (int k = 0; k <= max_split && k <= m.count; ++k) {
      push(Mult::of(k), Mult::of(m.count - k));
      push(Mult::of(m.count - k), Mult::of(k));
    }
  }
  return out;
}

// All two-block partitions of a bundle (neighbor -> multiplicity), both
// blocks nonempty, at most one block infinite, deduplicated up to block
// order.
std::vector<PartitionSpec> two_block_partitions(const Graph& g,
                                                const std::vector<std::pair<int, Mult>>& bundle,
                                                int max_split) {
  std::vector<PartitionSpec> result;
  std::vector<std::vector<std::pair<Mult, Mult>>> options;
  options.reserve(bundle.size());
  for (const auto& [v, m] : bundle) options.push_back(entry_splits(m, max_split));

  std::vector<size_t> pick(bundle.size(), 0);
  std::vector<std::string> seen;
  for (;;) {
    bool left_empty = true, right_empty = true;
    bool left_inf = false, right_inf = false;
    for (size_t i = 0; i < bundle.size(); ++i) {
      const auto& [a, b] = options[i][pick[i]];
      if (a.is_positive()) left_empty = false;
      if (b.is_positive()) right_empty = false;
      left_inf = left_inf || a.infinite;
      right_inf = right_inf || b.infinite;
    }
    if (!left_empty && !right_empty && !(left_inf && right_inf)) {
      PartitionSpec p;
      p.blocks.resize(2);
      std::string key_a, key_b;
      for (size_t i = 0; i < bundle.size(); ++i) {
        const auto& [a, b] = options[i][pick[i]];
        if (a.is_positive()) {
          p.blocks[0].emplace_back(g.name(bundle[i].first), a);
          key_a += g.name(bundle[i].first) + "=" + to_string(a) + ",";
        }
        if (b.is_positive()) {
          p.blocks[1].emplace_back(g.name(bundle[i].first), b);
          key_b += g.name(bundle[i].first) + "=" + to_string(b) + ",";
        }
      }
      std::string key = key_a <= key_b ? key_a + "|" + key_b : key_b + "|" + key_a;
      if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
        seen.push_back(std::move(key));
        result.push_back(std::move(p));
      }
    }
    size_t i = 0;
    while (i < pick.size()) {
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
      ++i;
    }
    if (i == pick.size()) break;
    if (bundle.empty()) break;
  }
  return result;
}

std::vector<MoveStep> candidate_moves(const Graph& g, const SearchBounds& bounds) {
  std::vector<MoveStep> steps;
  const int n = g.count();

  for (int w = 0; w < n; ++w) {
    if (g.is_source(w) && g.is_regular(w)) {
      steps.push_back({MoveKind::remove_source, g.name(w), {}, {}});
    }
  }

  for (int w = 0; w < n; ++w) {
    if (!g.is_regular(w)) continue;
    Mult total = g.out_total(w);
    if (total.infinite || total.count != 1) continue;
    int target = -1;
    for (int v = 0; v < n; ++v) {
      if (g.mult(w, v).is_positive()) target = v;
    }
    if (target == w) continue;
    int sources = 0;
    for (int u = 0; u < n; ++u) {
      if (g.mult(u, w).is_positive()) ++sources;
    }
    if (sources == 1) steps.push_back({MoveKind::reduce, g.name(w), {}, {}});
  }

  for (int w = 0; w < n; ++w) {
    if (g.is_regular(w) && !g.mult(w, w).is_positive()) {
      steps.push_back({MoveKind::collapse, g.name(w), {}, {}});
    }
  }

  for (int v0 = 0; v0 < n; ++v0) {
    for (int v1 = 0; v1 < n; ++v1) {
      if (!g.mult(v0, v1).infinite) continue;
      for (int v2 = 0; v2 < n; ++v2) {
        if (!g.mult(v1, v2).is_positive()) continue;
        if (g.mult(v0, v2).infinite) continue;  // no-op
        steps.push_back({MoveKind::transitive, "", {},
                         {g.name(v0), g.name(v1), g.name(v2)}});
      }
    }
  }

  if (n < bounds.max_vertices) {
    for (int w = 0; w < n; ++w) {
      if (g.is_sink(w)) continue;
      std::vector<std::pair<int, Mult>> bundle;
      for (int v = 0; v < n; ++v) {
        if (g.mult(w, v).is_positive()) bundle.emplace_back(v, g.mult(w, v));
      }
      for (auto& p : two_block_partitions(g, bundle, bounds.max_split)) {
        steps.push_back({MoveKind::outsplit, g.name(w), std::move(p), {}});
      }
    }
    for (int w = 0; w < n; ++w) {
      if (!g.is_regular(w) || g.is_source(w)) continue;
      std::vector<std::pair<int, Mult>> bundle;
      bool infinite_in = false;
      for (int u = 0; u < n; ++u) {
        const Mult& m = g.mult(u, w);
        if (m.infinite) infinite_in = true;
        if (m.is_positive()) bundle.emplace_back(u, m);
      }
      if (infinite_in) continue;
      for (auto& p : two_block_partitions(g, bundle, bounds.max_split)) {
        steps.push_back({MoveKind::insplit, g.name(w), std::move(p), {}});
      }
    }
  }
  return steps;
}

struct Node {
  Graph g;
  int parent;  // -1 for roots
  MoveStep step;
  int depth;
  int side;
};

MoveScript script_to(const std::vector<Node>& nodes, int idx) {
  std::vector<MoveStep> steps;
  while (nodes[size_t(idx)].parent != -1) {
    steps.push_back(nodes[size_t(idx)].step);
    idx = nodes[size_t(idx)].parent;
  }
  std::reverse(steps.begin(), steps.end());
  return MoveScript{std::move(steps)};
}

}  // namespace

SearchResult search_move_equivalence(const Graph& g1, const Graph& g2,
                                     const SearchBounds& bounds) {
  const int key_bound = std::max(bounds.max_vertices, std::max(g1.count(), g2.count()));
  if (g1.count() > bounds.max_vertices + 2 || g2.count() > bounds.max_vertices + 2) {
    throw capacity_error("search: input graph exceeds the vertex bound");
  }

  // side 0 grows from g1, side 1 from g2; canonical keys unify isomorphic
  // states, so a key present on both sides is a verified meeting point
  std::vector<Node> nodes;
  std::map<std::string, int> seen[2];
  std::deque<int> queue;

  auto add_state = [&](Graph g, int parent, const MoveStep& step, int side,
                       int depth) -> std::optional<SearchResult> {
    std::string key = canonical_key(g, key_bound);
    auto& mine = seen[side];
    if (mine.count(key) != 0) return std::nullopt;
    nodes.push_back({std::move(g), parent, step, depth, side});
    int idx = int(nodes.size()) - 1;
    mine.emplace(key, idx);
    auto other = seen[1 - side].find(key);
    if (other != seen[1 - side].end()) {
      SearchResult res;
      res.found = true;
      int a = side == 0 ? idx : other->second;
      int b = side == 0 ? other->second : idx;
      res.script1 = script_to(nodes, a);
      res.script2 = script_to(nodes, b);
      if (verify_bridge(g1, res.script1, g2, res.script2, key_bound)) return res;
      return std::nullopt;  // cannot happen; stay honest rather than trust
    }
    queue.push_back(idx);
    return std::nullopt;
  };

  if (auto r = add_state(g1, -1, MoveStep{}, 0, 0)) return *r;
  if (auto r = add_state(g2, -1, MoveStep{}, 1, 0)) return *r;

  while (!queue.empty() && int(nodes.size()) < bounds.max_states) {
    int idx = queue.front();
    queue.pop_front();
    const int side = nodes[size_t(idx)].side;
    const int depth = nodes[size_t(idx)].depth;
    if (depth >= bounds.depth) continue;
    Graph current = nodes[size_t(idx)].g;
    for (const MoveStep& step : candidate_moves(current, bounds)) {
      Graph next = [&]() -> Graph {
        switch (step.kind) {
          case MoveKind::remove_source: return graphk::remove_source(current, step.vertex);
          case MoveKind::outsplit: return graphk::outsplit(current, step.vertex, step.partition);
          case MoveKind::insplit: return graphk::insplit(current, step.vertex, step.partition);
          case MoveKind::reduce: return graphk::reduce(current, step.vertex);
          case MoveKind::collapse: return graphk::collapse(current, step.vertex);
          default: return graphk::transitive(current, step.path);
        }
      }();
      if (next.count() > bounds.max_vertices) continue;
      if (auto r = add_state(std::move(next), idx, step, side, depth + 1)) return *r;
      if (int(nodes.size()) >= bounds.max_states) break;
    }
  }
  return SearchResult{};
}

}  // namespace graphk
