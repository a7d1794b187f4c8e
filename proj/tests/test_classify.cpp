#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphk/classify.hpp"
#include "graphk/moves.hpp"
#include "graphk/textio.hpp"

#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace graphk;
using fixtures::build;

TEST_CASE("dichotomy") {
  DichotomyResult e2 = dichotomy(fixtures::e_two());
  CHECK(e2.kind == DichotomyKind::purely_infinite);

  Graph edge = build({"u", "v"}, {{0, 1}, {0, 0}});
  DichotomyResult m2 = dichotomy(edge);
  CHECK(m2.kind == DichotomyKind::ultramatricial);
  CHECK(m2.matrix_size == 2);

  Graph loops = build({"a", "b"}, {{1, 0}, {0, 1}});
  CHECK(dichotomy(loops).kind == DichotomyKind::not_simple);

  // two-level DAG: paths v, u->v twice and w->v, w->u->v twice each
  Graph dag = build({"w", "u", "v"}, {{0, 2, 1}, {0, 0, 2}, {0, 0, 0}});
  DichotomyResult big = dichotomy(dag);
  CHECK(big.kind == DichotomyKind::ultramatricial);
  CHECK(big.matrix_size == 1 + 2 + (1 + 4));
}

TEST_CASE("morita decision for the counterexample pair") {
  MoritaVerdict v = decide_morita(fixtures::counterexample_e(), fixtures::counterexample_f(),
                                  FieldDescriptor::rationals());
  CHECK(v.outcome == MoritaOutcome::not_equivalent);
  CHECK(v.clause == "infinite-edge-invariant");
  CHECK(v.detail.find("sing_count 2 != 1") != std::string::npos);
}

TEST_CASE("morita decision for the spliced pairs") {
  MoritaVerdict inf = decide_morita(fixtures::e_infinity(), fixtures::e_infinity_minus(),
                                    FieldDescriptor::generic());
  CHECK(inf.outcome == MoritaOutcome::equivalent);
  CHECK(inf.clause == "infinite-edge-invariant");

  MoritaVerdict fin =
      decide_morita(fixtures::e_two(), fixtures::e_two_minus(), FieldDescriptor::generic());
  CHECK(fin.outcome == MoritaOutcome::open_problem);
  CHECK(fin.clause == "finite-edge-sign-open");
}

TEST_CASE("morita decision across the dichotomy and the edge-count divide") {
  Graph edge = build({"u", "v"}, {{0, 1}, {0, 0}});
  Graph chain = build({"u", "v", "w"}, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  MoritaVerdict ultra = decide_morita(edge, chain, FieldDescriptor::generic());
  CHECK(ultra.outcome == MoritaOutcome::equivalent);
  CHECK(ultra.clause == "both-ultramatricial");

  MoritaVerdict crossed = decide_morita(edge, fixtures::e_two(), FieldDescriptor::generic());
  CHECK(crossed.outcome == MoritaOutcome::not_equivalent);
  CHECK(crossed.clause == "dichotomy-mismatch");

  MoritaVerdict mixed = decide_morita(fixtures::e_infinity(), fixtures::f_tilde(),
                                      FieldDescriptor::rationals());
  CHECK(mixed.outcome == MoritaOutcome::not_equivalent);
  CHECK(mixed.clause == "mixed-edge-finiteness");

  Graph loops = build({"a", "b"}, {{1, 0}, {0, 1}});
  MoritaVerdict na = decide_morita(loops, fixtures::e_two(), FieldDescriptor::generic());
  CHECK(na.outcome == MoritaOutcome::not_applicable);
  CHECK(na.clause == "not-simple");
}

TEST_CASE("morita decision for finite-edge pairs with matching signs") {
  // the double loop against its own two-block outsplit: same K0 (trivial),
  // both det signs -1
  Graph e2 = fixtures::e_two();
  Graph split = outsplit(e2, "v", parse_script("outsplit v :: v=1 :: v=1\n").steps[0].partition);
  MoritaVerdict v = decide_morita(e2, split, FieldDescriptor::generic());
  CHECK(v.outcome == MoritaOutcome::equivalent);
  CHECK(v.clause == "finite-edge-sign");

  // determinant zero on both sides also counts as equal signs
  Graph ft = fixtures::f_tilde();
  Graph ft_split =
      outsplit(ft, "a", parse_script("outsplit a :: a=1 :: a=1, b=1\n").steps[0].partition);
  CHECK(det_sign(ft) == DetSign::zero);
  CHECK(det_sign(ft_split) == DetSign::zero);
  MoritaVerdict z = decide_morita(ft, ft_split, FieldDescriptor::generic());
  CHECK(z.outcome == MoritaOutcome::equivalent);
  CHECK(z.clause == "finite-edge-sign");

  // distinct K0 separates finite-edge pairs before any sign question
  Graph e3 = build({"v"}, {{3}});  // K0 = Z_2
  MoritaVerdict k = decide_morita(e2, e3, FieldDescriptor::generic());
  CHECK(k.outcome == MoritaOutcome::not_equivalent);
  CHECK(k.clause == "finite-edge-k0");
}

TEST_CASE("morita verdicts are symmetric and reflexive on random simple graphs") {
  testgen::Rng rng(51);
  FieldDescriptor field = FieldDescriptor::rationals();
  for (int i = 0; i < 120; ++i) {
    Graph g1 = i % 3 == 0 ? testgen::random_ultramatricial_graph(rng)
                          : testgen::random_simple_infinite_graph(rng);
    Graph g2 = i % 4 == 0 ? testgen::random_ultramatricial_graph(rng)
                          : testgen::random_simple_infinite_graph(rng);
    CHECK(decide_morita(g1, g1, field).outcome == MoritaOutcome::equivalent);
    CHECK(decide_morita(g1, g2, field).outcome == decide_morita(g2, g1, field).outcome);
    CHECK(decide_morita(g1, g2, field).outcome != MoritaOutcome::open_problem);
  }
}

TEST_CASE("moves do not change the morita verdict") {
  testgen::Rng rng(52);
  FieldDescriptor field = FieldDescriptor::complexes();
  for (int i = 0; i < 40; ++i) {
    Graph g = testgen::random_simple_infinite_graph(rng);
    // splice somewhere spliceable, then compare
    for (int v = 0; v < g.count(); ++v) {
      if (!supports_two_simple_cycles(g, v)) continue;
      Graph h = cuntz_splice(g, g.name(v));
      CHECK(decide_morita(g, h, field).outcome == MoritaOutcome::equivalent);
      break;
    }
  }
}

TEST_CASE("k1 route over fields with no free quotients") {
  MoritaVerdict v = decide_morita_via_k1(fixtures::e_infinity(), fixtures::e_infinity_minus(),
                                         FieldDescriptor::complexes());
  CHECK(v.outcome == MoritaOutcome::equivalent);
  CHECK(v.clause == "k1-route");

  Graph loops = build({"a", "b"}, {{1, 0}, {0, 1}});
  MoritaVerdict na =
      decide_morita_via_k1(loops, fixtures::e_infinity(), FieldDescriptor::complexes());
  CHECK(na.outcome == MoritaOutcome::not_applicable);

  MoritaVerdict fin = decide_morita_via_k1(fixtures::e_two(), fixtures::e_two_minus(),
                                           FieldDescriptor::complexes());
  CHECK(fin.outcome == MoritaOutcome::not_applicable);
  CHECK(fin.clause == "k1-route-hypothesis");
}

TEST_CASE("k1 route is refused over the rationals") {
  // over Q the pair has matching K0 and K1 but is not Morita equivalent;
  // the refusal hands the decision back to the singular-count route
  Graph e = fixtures::counterexample_e();
  Graph f = fixtures::counterexample_f();
  FieldDescriptor q = FieldDescriptor::rationals();
  CHECK(fg_isomorphic(k0(e).group, k0(f).group));
  CHECK(expr_isomorphic(k1_alg(e, q), k1_alg(f, q)) == Tri::yes);
  MoritaVerdict v = decide_morita_via_k1(e, f, q);
  CHECK(v.outcome == MoritaOutcome::not_equivalent);
  CHECK(v.clause == "k1-route-refused");
}

TEST_CASE("k1 route agrees with the base decision over nfq fields") {
  testgen::Rng rng(53);
  std::vector<FieldDescriptor> fields{FieldDescriptor::finite(4), FieldDescriptor::complexes(),
                                      FieldDescriptor::alg_closed(0),
                                      FieldDescriptor::alg_closed(7)};
  for (int i = 0; i < 150; ++i) {
    Graph g1 = testgen::random_simple_infinite_graph(rng);
    Graph g2 = testgen::random_simple_infinite_graph(rng);
    const auto& field = fields[size_t(i % int(fields.size()))];
    CHECK(decide_morita_via_k1(g1, g2, field).outcome ==
          decide_morita(g1, g2, field).outcome);
  }
}

TEST_CASE("isomorphism decision") {
  Graph spliced = fixtures::e_infinity_minus();
  IsoVerdict self = decide_isomorphism(spliced, spliced, FieldDescriptor::rationals());
  CHECK(self.outcome == IsoOutcome::isomorphic);

  // unit class 1 in Z is moved by negation: hypothesis not certified
  IsoVerdict na = decide_isomorphism(fixtures::e_infinity(), fixtures::e_infinity_minus(),
                                     FieldDescriptor::rationals());
  CHECK(na.outcome == IsoOutcome::not_applicable);
  CHECK(na.clause == "unit-not-invariant");

  // K0 mismatch decides regardless of any hypothesis
  IsoVerdict no = decide_isomorphism(fixtures::e_infinity(), fixtures::counterexample_e(),
                                     FieldDescriptor::rationals());
  CHECK(no.outcome == IsoOutcome::not_isomorphic);
  CHECK(no.clause == "k0-mismatch");
}

TEST_CASE("isomorphism: unit classes decide within a fixed group") {
  // splicing every vertex zeroes the unit class, so equal-K0 spliced
  // graphs with equal singular counts become isomorphic
  Graph a = apply_script(fixtures::e_infinity(), parse_script("cuntz-splice v\n"), false).final;
  Graph b = apply_script(fixtures::e_infinity(),
                         parse_script("cuntz-splice v\ncuntz-splice v.cs1\n"), false)
                .final;
  CHECK(k0(a).unit_class.is_zero());
  CHECK(k0(b).unit_class.is_zero());
  IsoVerdict v = decide_isomorphism(a, b, FieldDescriptor::rationals());
  CHECK(v.outcome == IsoOutcome::isomorphic);
}
