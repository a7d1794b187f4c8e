#pragma once

#include "graphk/intmatrix.hpp"
#include "graphk/numeric.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace graphk {

// Three-valued answer for questions that an opaque symbol or a size bound
// can leave open.  Soundness rule: never answer no (or yes) unless it is
// structurally certain.
enum class Tri { yes, no, unknown };

std::string to_string(Tri t);

// ---------------------------------------------------------------------------
// Finitely generated abelian groups in invariant-factor normal form.

struct FgAbelianGroup {
  // each factor >= 2 and factors[i] | factors[i+1]
  std::vector<Int> factors;
  int free_rank = 0;

  bool is_trivial() const { return factors.empty() && free_rank == 0; }
  Int torsion_order() const;

  bool operator==(const FgAbelianGroup& o) const = default;
};

// Normal form from an arbitrary list of cyclic orders (>= 1 each).
FgAbelianGroup fg_from_cyclic_orders(const std::vector<Int>& orders, int free_rank);

// Uniqueness of the invariant factor decomposition makes this equality.
bool fg_isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b);

std::string to_string(const FgAbelianGroup& g);

// An element of Z^r (+) T in the group's own presentation: one residue in
// [0, d_i) per invariant factor plus free integer coordinates.
struct CokerElement {
  FgAbelianGroup group;
  std::vector<Int> torsion_coords;
  std::vector<Int> free_coords;

  bool is_zero() const;
  bool operator==(const CokerElement& o) const = default;
};

std::string to_string(const CokerElement& e);

// Cokernel of m : Z^cols -> Z^rows.
FgAbelianGroup coker_structure(const IntMatrix& m);

// Kernel of m : Z^cols -> Z^rows (free, as a subgroup of a free group).
FgAbelianGroup ker_structure(const IntMatrix& m);

// Canonical representative of [x] in coker(m); two vectors map to equal
// elements iff they differ by a column-lattice vector.
CokerElement coker_class(const IntMatrix& m, const std::vector<Int>& x);

// ---------------------------------------------------------------------------
// Coefficient fields, described by what their unit groups look like.

enum class FieldKind {
  rationals,
  reals,
  complexes,
  finite,       // F_q, q a prime power; units cyclic of order q-1
  alg_closed,   // characteristic 0 or p; units divisible
  nfq_generic,  // unspecified field whose units have no free quotients
  generic,      // nothing known
};

struct FieldDescriptor {
  FieldKind kind = FieldKind::generic;
  Int order = 0;           // finite fields only
  Int characteristic = 0;  // alg_closed only (0 or a prime)
  std::optional<bool> k2_is_torsion;

  static FieldDescriptor rationals();
  static FieldDescriptor reals();
  static FieldDescriptor complexes();
  static FieldDescriptor finite(const Int& q);
  static FieldDescriptor alg_closed(const Int& characteristic = 0);
  static FieldDescriptor nfq_generic();
  static FieldDescriptor generic();

  bool same_field(const FieldDescriptor& o) const;
};

// Whether the unit group has no free (abelian) quotients.
Tri no_free_quotients(const FieldDescriptor& f);

// ---------------------------------------------------------------------------
// Symbolic direct sums mixing a finitely generated part, countably repeated
// cyclic factors, and unit-group terms Kx, Kx/{x^d}, Kx[d].

class GroupExpr {
 public:
  explicit GroupExpr(FieldDescriptor field) : field_(std::move(field)) {}

  const FieldDescriptor& field() const { return field_; }

  // construction (normalize() afterwards)
  void add_free(int rank) { free_rank_ += rank; }
  void add_free_omega() { free_omega_ = true; }
  void add_cyclic(const Int& order);           // finite multiplicity
  void add_cyclic_omega(const Int& order);     // countably repeated
  void add_unit_copies(int n) { unit_copies_ += n; }
  void add_unit_quotient(const Int& d);        // Kx / <x^d>
  void add_unit_torsion(const Int& d);         // Kx[d]

  // Rewrites field-resolvable unit terms into concrete summands and applies
  // the absorption rules (omega terms absorb finite ones; over Q a free
  // summand is absorbed by a unit copy).
  void normalize();

  // accessors (post-normalization views)
  int free_rank() const { return free_rank_; }
  bool free_omega() const { return free_omega_; }
  const std::map<Int, Int>& torsion() const { return torsion_; }          // prime power -> count
  const std::set<Int>& torsion_omega() const { return torsion_omega_; }   // prime powers
  int unit_copies() const { return unit_copies_; }
  const std::multiset<Int>& unit_quotients() const { return unit_quotients_; }
  const std::multiset<Int>& unit_torsion() const { return unit_torsion_; }

  bool has_opaque_units() const;

  // Invariant factors of the finite torsion part (display helper).
  std::vector<Int> torsion_invariant_factors() const;

  friend Tri expr_isomorphic(const GroupExpr& a, const GroupExpr& b);
  friend Tri is_torsion(const GroupExpr& e);

 private:
  struct ResolvedKey;
  ResolvedKey resolved_key() const;

  FieldDescriptor field_;
  int free_rank_ = 0;
  bool free_omega_ = false;
  std::map<Int, Int> torsion_;
  std::set<Int> torsion_omega_;
  int unit_copies_ = 0;
  std::multiset<Int> unit_quotients_;
  std::multiset<Int> unit_torsion_;
};

GroupExpr expr_from_fg(const FgAbelianGroup& g, const FieldDescriptor& f);

// Direct sum; input_error if the fields differ.
GroupExpr expr_sum(const GroupExpr& a, const GroupExpr& b);

// Yes iff normal forms agree; No only when fully resolved or when the
// cancellation rule for fields with no free quotients applies; otherwise
// Unknown.  input_error if the fields differ.
Tri expr_isomorphic(const GroupExpr& a, const GroupExpr& b);

Tri is_torsion(const GroupExpr& e);

std::string to_string(const GroupExpr& e);

// Cokernel of m acting on powers of G = Kx:
//   (+)_{d_i >= 2} Kx/<x^{d_i}>  (+)  Kx^(rows - rank)
GroupExpr unit_group_coker(const IntMatrix& m, const FieldDescriptor& f);

// Kernel of m acting on powers of G = Kx:
//   (+)_{d_i >= 2} Kx[d_i]  (+)  Kx^(cols - rank)
GroupExpr unit_group_ker(const IntMatrix& m, const FieldDescriptor& f);

// ---------------------------------------------------------------------------
// Automorphism-orbit questions on finitely generated abelian groups.
//
// Writing g = Z^r (+) T, Aut(g) consists of GL_r(Z) on the free part,
// arbitrary shears Z^r -> T, and Aut(T); Hom(T, Z^r) = 0.  Consequences
// used below:
//   * (v, t) is automorphism invariant iff v = 0 and Aut(T) fixes t.
//   * (v, t) ~ (v', t') iff gcd(v) = gcd(v') =: d and t' lies in
//     Aut(T)-orbit(t) + dT  (shears contribute exactly dT, and GL_r(Z)
//     normalizes v to (d, 0, ..., 0)); gcd of the zero vector is 0.

// Aut(T) questions are decided exactly for |T| <= aut_bound and answered
// `unknown` (Undecided) above it.
Tri element_automorphism_invariant(const CokerElement& x, const Int& aut_bound = 2048);

Tri pointed_isomorphic(const CokerElement& x1, const CokerElement& x2,
                       const Int& aut_bound = 2048);

}  // namespace graphk
