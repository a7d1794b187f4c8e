#pragma once

#include "graphk/graph.hpp"
#include "graphk/groups.hpp"
#include "graphk/ktheory.hpp"

#include <string>

namespace graphk {

enum class DichotomyKind { purely_infinite, ultramatricial, not_simple };

struct DichotomyResult {
  DichotomyKind kind;
  Int matrix_size;  // n with L_K(E) = M_n(K), ultramatricial case only
};

// A simple unital Leavitt path algebra is purely infinite iff its graph
// contains a cycle; otherwise it is a matrix algebra of size the number of
// paths ending at the unique sink.
DichotomyResult dichotomy(const Graph& g);

enum class MoritaOutcome { equivalent, not_equivalent, open_problem, not_applicable };

std::string to_string(MoritaOutcome o);

// Machine-readable reason: a clause slug naming the deciding criterion plus
// the distinguishing or matching invariant values.
struct MoritaVerdict {
  MoritaOutcome outcome;
  std::string clause;
  std::string detail;

  std::string reason() const { return clause + ": " + detail; }
};

// Decision table for Morita equivalence of the simple unital algebras:
//   * not simple -> NotApplicable
//   * both ultramatricial -> Equivalent
//   * ultramatricial vs purely infinite -> NotEquivalent
//   * both purely infinite, both with infinitely many edges ->
//       Equivalent iff K0 isomorphic and singular counts equal
//   * purely infinite, one side with finitely many edges, one with
//     infinitely many -> NotEquivalent
//   * both purely infinite with finitely many edges -> K0 mismatch is
//     NotEquivalent; K0 isomorphic with equal determinant signs is
//     Equivalent; K0 isomorphic with opposite signs is the open problem.
MoritaVerdict decide_morita(const Graph& g1, const Graph& g2, const FieldDescriptor& field);

// K1 route: over a field with no free quotients, Equivalent iff K0 and
// K1^alg both match.  Over fields with free quotients (or unknown) the
// route is unsound and falls back to decide_morita with an annotation.
MoritaVerdict decide_morita_via_k1(const Graph& g1, const Graph& g2,
                                   const FieldDescriptor& field);

enum class IsoOutcome { isomorphic, not_isomorphic, open_problem, undecided, not_applicable };

std::string to_string(IsoOutcome o);

struct IsoVerdict {
  IsoOutcome outcome;
  std::string clause;
  std::string detail;

  std::string reason() const { return clause + ": " + detail; }
};

// Ring-isomorphism decision via the pointed K0 group plus the singular
// count.  K0 is a ring-isomorphism invariant, so a group mismatch decides
// NotIsomorphic unconditionally.  The positive direction requires both
// graphs simple with infinitely many edges and the unit class of the first
// graph certified automorphism invariant; when that certification fails the
// verdict is NotApplicable (the classification without the hypothesis is
// conjectural).
IsoVerdict decide_isomorphism(const Graph& g1, const Graph& g2, const FieldDescriptor& field,
                              const Int& aut_bound = 2048);

}  // namespace graphk
