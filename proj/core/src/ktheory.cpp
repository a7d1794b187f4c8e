#include "graphk/ktheory.hpp"

namespace graphk {

StackedMatrix stacked_matrix(const Graph& g) {
  StackedMatrix s;
  for (int v = 0; v < g.count(); ++v) {
    if (g.is_regular(v)) {
      s.row_order.push_back(v);
      s.col_order.push_back(v);
    }
  }
  for (int v = 0; v < g.count(); ++v) {
    if (g.is_singular(v)) s.row_order.push_back(v);
  }
  s.m = IntMatrix(g.count(), int(s.col_order.size()));
  for (int r = 0; r < g.count(); ++r) {
    int u = s.row_order[size_t(r)];
    for (int c = 0; c < int(s.col_order.size()); ++c) {
      int w = s.col_order[size_t(c)];
      // entry = A[w][u] - [u = w]; w regular, so the row A[w][.] is finite
      Int value = g.mult(w, u).count;
      if (u == w) value -= 1;
      s.m.at(r, c) = value;
    }
  }
  return s;
}

K0Result k0(const Graph& g) {
  StackedMatrix s = stacked_matrix(g);
  K0Result r;
  r.group = coker_structure(s.m);
  std::vector<Int> ones(size_t(g.count()), Int(1));
  r.unit_class = coker_class(s.m, ones);
  return r;
}

FgAbelianGroup k1_top(const Graph& g) { return ker_structure(stacked_matrix(g).m); }

GroupExpr k1_alg(const Graph& g, const FieldDescriptor& field) {
  StackedMatrix s = stacked_matrix(g);
  GroupExpr e = unit_group_coker(s.m, field);
  e.add_free(ker_structure(s.m).free_rank);
  e.normalize();
  return e;
}

std::string to_string(DetSign s) {
  switch (s) {
    case DetSign::minus: return "-1";
    case DetSign::zero: return "0";
    case DetSign::plus: return "+1";
    default: return "n/a";
  }
}

DetSign det_sign(const Graph& g) {
  if (g.has_infinite_edges()) return DetSign::not_applicable;
  const int n = g.count();
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // I - A^t
      Int value = -g.mult(j, i).count;
      if (i == j) value += 1;
      m.at(i, j) = value;
    }
  }
  Int d = det(m);
  if (d == 0) return DetSign::zero;
  return d < 0 ? DetSign::minus : DetSign::plus;
}

InvariantBundle invariants(const Graph& g, const FieldDescriptor& field) {
  InvariantBundle b;
  K0Result r = k0(g);
  b.k0 = r.group;
  b.unit_class = r.unit_class;
  b.k1_top = k1_top(g);
  b.k1_alg = k1_alg(g, field);
  b.sing_count = singular_count(g);
  b.det_sign = det_sign(g);
  b.simple = is_simple(g);
  b.has_cycle = graphk::has_cycle(g);
  b.infinite_edges = g.has_infinite_edges();
  return b;
}

std::string to_string(TorsionStatus s) {
  switch (s) {
    case TorsionStatus::torsion: return "Torsion";
    case TorsionStatus::not_torsion: return "NotTorsion";
    default: return "Unknown";
  }
}

TorsionStatus k2_torsion_status(const Graph& g, const FieldDescriptor& field) {
  GroupExpr kappa = unit_group_ker(stacked_matrix(g).m, field);
  Tri t = is_torsion(kappa);
  if (t == Tri::no) return TorsionStatus::not_torsion;
  if (t == Tri::yes && field.k2_is_torsion.value_or(false)) return TorsionStatus::torsion;
  return TorsionStatus::unknown;
}

}  // namespace graphk
