#pragma once

#include "graphk/graph.hpp"
#include "graphk/groups.hpp"
#include "graphk/intmatrix.hpp"

#include <string>
#include <vector>

namespace graphk {

// The |E0| x |E0_reg| integer matrix (B^t - I over C^t) whose cokernel and
// kernel carry the K-theory of the graph algebras.  Rows run over all
// vertices (regular first, then singular, each in graph order); columns run
// over the regular vertices in graph order.  Regular columns never contain
// an infinity.
struct StackedMatrix {
  IntMatrix m;
  std::vector<int> row_order;  // vertex indices
  std::vector<int> col_order;  // regular vertex indices
};

StackedMatrix stacked_matrix(const Graph& g);

struct K0Result {
  FgAbelianGroup group;
  CokerElement unit_class;  // class of the all-ones vector, [1] = sum of vertices
};

K0Result k0(const Graph& g);

// Kernel of the stacked matrix; always free.
FgAbelianGroup k1_top(const Graph& g);

// Kernel free part plus the unit-group cokernel, normalized for the field.
GroupExpr k1_alg(const Graph& g, const FieldDescriptor& field);

enum class DetSign {
  minus,
  zero,
  plus,
  not_applicable,  // some multiplicity is infinite; there is no determinant
};

std::string to_string(DetSign s);

// Sign of det(I - A^t) for finite multiplicities; not_applicable otherwise.
DetSign det_sign(const Graph& g);

struct InvariantBundle {
  FgAbelianGroup k0;
  CokerElement unit_class;
  FgAbelianGroup k1_top;
  GroupExpr k1_alg;
  int sing_count = 0;
  DetSign det_sign = DetSign::not_applicable;
  bool simple = false;
  bool has_cycle = false;
  bool infinite_edges = false;

  InvariantBundle() : k1_alg(FieldDescriptor::generic()) {}
};

InvariantBundle invariants(const Graph& g, const FieldDescriptor& field);

enum class TorsionStatus { torsion, not_torsion, unknown };

std::string to_string(TorsionStatus s);

// Status of K2 of the Leavitt path algebra, via the two exactness
// consequences of the long exact sequence: K2 surjects onto the unit-group
// kernel of the stacked matrix (a non-torsion element there certifies
// NotTorsion), and when that kernel is torsion and K2 of the field is known
// torsion, K2 is an extension of torsion by torsion.
TorsionStatus k2_torsion_status(const Graph& g, const FieldDescriptor& field);

}  // namespace graphk
