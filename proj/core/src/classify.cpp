#include "graphk/classify.hpp"

#include "graphk/errors.hpp"

#include <functional>

namespace graphk {

DichotomyResult dichotomy(const Graph& g) {
  if (!is_simple(g)) return {DichotomyKind::not_simple, 0};
  if (has_cycle(g)) return {DichotomyKind::purely_infinite, 0};
  // simple and acyclic: exactly one sink, no infinite emitters; count the
  // paths ending at the sink by start vertex
  const int n = g.count();
  std::vector<Int> paths(size_t(n), Int(-1));
  std::function<Int(int)> count_paths = [&](int v) -> Int {
    Int& memo = paths[size_t(v)];
    if (memo >= 0) return memo;
    Int total = g.is_sink(v) ? 1 : 0;
    for (int u = 0; u < n; ++u) {
      const Mult& m = g.mult(v, u);
      if (m.is_positive()) total += m.count * count_paths(u);
    }
    return memo = total;
  };
  Int total = 0;
  for (int v = 0; v < n; ++v) total += count_paths(v);
  return {DichotomyKind::ultramatricial, total};
}

std::string to_string(MoritaOutcome o) {
  switch (o) {
    case MoritaOutcome::equivalent: return "Equivalent";
    case MoritaOutcome::not_equivalent: return "NotEquivalent";
    case MoritaOutcome::open_problem: return "OpenProblem";
    default: return "NotApplicable";
  }
}

std::string to_string(IsoOutcome o) {
  switch (o) {
    case IsoOutcome::isomorphic: return "Isomorphic";
    case IsoOutcome::not_isomorphic: return "NotIsomorphic";
    case IsoOutcome::open_problem: return "OpenProblem";
    case IsoOutcome::undecided: return "Undecided";
    default: return "NotApplicable";
  }
}

namespace {

std::string simplicity_detail(const Graph& g1, const Graph& g2) {
  auto describe = [](const Graph& g, const char* which) -> std::string {
    SimplicityReport r = simplicity(g);
    if (r.simple()) return "";
    std::string out = std::string(which) + " graph is not simple (";
    bool first = true;
    auto add = [&](const char* name) {
      if (!first) out += ", ";
      out += name;
      first = false;
    };
    if (!r.cofinal) add("not cofinal");
    if (!r.condition_l) add("Condition (L) fails");
    if (!r.singular_reachable) add("a singular vertex is unreachable");
    return out + ")";
  };
  std::string a = describe(g1, "left");
  std::string b = describe(g2, "right");
  if (!a.empty() && !b.empty()) return a + "; " + b;
  return a + b;
}

}  // namespace

MoritaVerdict decide_morita(const Graph& g1, const Graph& g2, const FieldDescriptor& field) {
  (void)field;  // the verdict depends only on the graphs
  DichotomyResult d1 = dichotomy(g1);
  DichotomyResult d2 = dichotomy(g2);
  if (d1.kind == DichotomyKind::not_simple || d2.kind == DichotomyKind::not_simple) {
    return {MoritaOutcome::not_applicable, "not-simple", simplicity_detail(g1, g2)};
  }
  if (d1.kind == DichotomyKind::ultramatricial && d2.kind == DichotomyKind::ultramatricial) {
    return {MoritaOutcome::equivalent, "both-ultramatricial",
            "matrix algebras M_" + d1.matrix_size.str() + " and M_" + d2.matrix_size.str() +
                " are both Morita equivalent to the coefficient field"};
  }
  if (d1.kind != d2.kind) {
    return {MoritaOutcome::not_equivalent, "dichotomy-mismatch",
            "purely infinite algebras are never Morita equivalent to matrix algebras"};
  }

  // both purely infinite
  FgAbelianGroup k0a = k0(g1).group;
  FgAbelianGroup k0b = k0(g2).group;
  bool k0_iso = fg_isomorphic(k0a, k0b);
  std::string k0_text = "K0 " + to_string(k0a) + (k0_iso ? " = " : " != ") + to_string(k0b);
  bool inf1 = g1.has_infinite_edges();
  bool inf2 = g2.has_infinite_edges();

  if (inf1 && inf2) {
    int s1 = singular_count(g1);
    int s2 = singular_count(g2);
    if (!k0_iso) {
      return {MoritaOutcome::not_equivalent, "infinite-edge-invariant", k0_text};
    }
    if (s1 != s2) {
      return {MoritaOutcome::not_equivalent, "infinite-edge-invariant",
              "sing_count " + std::to_string(s1) + " != " + std::to_string(s2)};
    }
    return {MoritaOutcome::equivalent, "infinite-edge-invariant",
            k0_text + " and sing_count " + std::to_string(s1) + " = " + std::to_string(s2)};
  }
  if (inf1 != inf2) {
    int s1 = singular_count(g1);
    int s2 = singular_count(g2);
    return {MoritaOutcome::not_equivalent, "mixed-edge-finiteness",
            "a finite-edge graph has no singular vertices here, an infinite-edge graph has at "
            "least one (sing_count " +
                std::to_string(s1) + " vs " + std::to_string(s2) + ")"};
  }

  // both with finitely many edges
  if (!k0_iso) {
    return {MoritaOutcome::not_equivalent, "finite-edge-k0", k0_text};
  }
  DetSign sg1 = det_sign(g1);
  DetSign sg2 = det_sign(g2);
  if (sg1 == sg2) {
    return {MoritaOutcome::equivalent, "finite-edge-sign",
            k0_text + " and det signs equal (" + to_string(sg1) + ")"};
  }
  return {MoritaOutcome::open_problem, "finite-edge-sign-open",
          "K0 isomorphic but det signs differ (" + to_string(sg1) + " vs " + to_string(sg2) +
              "); whether the sign condition is necessary is an open question"};
}

MoritaVerdict decide_morita_via_k1(const Graph& g1, const Graph& g2,
                                   const FieldDescriptor& field) {
  DichotomyResult d1 = dichotomy(g1);
  DichotomyResult d2 = dichotomy(g2);
  if (d1.kind == DichotomyKind::not_simple || d2.kind == DichotomyKind::not_simple) {
    return {MoritaOutcome::not_applicable, "not-simple", simplicity_detail(g1, g2)};
  }
  if (!g1.has_infinite_edges() || !g2.has_infinite_edges()) {
    return {MoritaOutcome::not_applicable, "k1-route-hypothesis",
            "the K1 route applies to graphs with infinitely many edges only"};
  }
  if (no_free_quotients(field) != Tri::yes) {
    MoritaVerdict base = decide_morita(g1, g2, field);
    base.clause = "k1-route-refused";
    base.detail = "the unit group of the field may have free quotients, so K1 cannot replace "
                  "the singular-vertex count; decided by the K0+singular-count route instead (" +
                  base.detail + ")";
    return base;
  }
  FgAbelianGroup k0a = k0(g1).group;
  FgAbelianGroup k0b = k0(g2).group;
  if (!fg_isomorphic(k0a, k0b)) {
    return {MoritaOutcome::not_equivalent, "k1-route",
            "K0 " + to_string(k0a) + " != " + to_string(k0b)};
  }
  GroupExpr k1a = k1_alg(g1, field);
  GroupExpr k1b = k1_alg(g2, field);
  Tri k1_iso = expr_isomorphic(k1a, k1b);
  if (k1_iso == Tri::yes) {
    return {MoritaOutcome::equivalent, "k1-route",
            "K0 " + to_string(k0a) + " and K1 " + to_string(k1a) + " both match"};
  }
  return {MoritaOutcome::not_equivalent, "k1-route",
          "K0 matches but K1 " + to_string(k1a) + " vs " + to_string(k1b) + " does not"};
}

IsoVerdict decide_isomorphism(const Graph& g1, const Graph& g2, const FieldDescriptor& field,
                              const Int& aut_bound) {
  (void)field;
  K0Result a = k0(g1);
  K0Result b = k0(g2);
  // K0 is functorial under ring isomorphism: a group mismatch is decisive
  // with no hypotheses at all.
  if (!fg_isomorphic(a.group, b.group)) {
    return {IsoOutcome::not_isomorphic, "k0-mismatch",
            "K0 " + to_string(a.group) + " != " + to_string(b.group)};
  }
  if (!is_simple(g1) || !is_simple(g2) || !g1.has_infinite_edges() || !g2.has_infinite_edges()) {
    return {IsoOutcome::not_applicable, "hypothesis",
            "the pointed-K0 classification covers simple graphs with infinitely many edges"};
  }
  Tri invariant = element_automorphism_invariant(a.unit_class, aut_bound);
  if (invariant != Tri::yes) {
    return {IsoOutcome::not_applicable, "unit-not-invariant",
            "the unit class " + to_string(a.unit_class) + " in " + to_string(a.group) +
                (invariant == Tri::no ? " is not" : " could not be certified") +
                " automorphism invariant; without that hypothesis the pointed classification "
                "is conjectural"};
  }
  Tri pointed = pointed_isomorphic(a.unit_class, b.unit_class, aut_bound);
  if (pointed == Tri::unknown) {
    return {IsoOutcome::undecided, "orbit-undecided",
            "the automorphism-orbit computation exceeded the configured bound"};
  }
  if (pointed == Tri::no) {
    return {IsoOutcome::not_isomorphic, "pointed-unit",
            "no K0 isomorphism carries unit class " + to_string(a.unit_class) + " to " +
                to_string(b.unit_class)};
  }
  int s1 = singular_count(g1);
  int s2 = singular_count(g2);
  if (s1 != s2) {
    return {IsoOutcome::not_isomorphic, "sing-mismatch",
            "sing_count " + std::to_string(s1) + " != " + std::to_string(s2)};
  }
  return {IsoOutcome::isomorphic, "pointed-k0-sing",
          "pointed K0 (" + to_string(a.group) + ", " + to_string(a.unit_class) +
              ") matches and sing_count " + std::to_string(s1) + " = " + std::to_string(s2)};
}

}  // namespace graphk
