#include "graphk/groups.hpp"

#include "graphk/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace graphk {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "Yes";
    case Tri::no: return "No";
    default: return "Unknown";
  }
}

// ---------------------------------------------------------------------------
// FgAbelianGroup

Int FgAbelianGroup::torsion_order() const {
  Int n = 1;
  for (const Int& d : factors) n *= d;
  return n;
}

namespace {

// prime -> exponents (descending, one per cyclic summand)
using PrimaryMap = std::map<Int, std::vector<int>>;

PrimaryMap primary_of_orders(const std::vector<Int>& orders) {
  PrimaryMap pm;
  for (const Int& n : orders) {
    if (n < 1) throw input_error("cyclic order must be >= 1");
    if (n == 1) continue;
    for (const auto& [p, e] : factorize(n)) pm[p].push_back(e);
  }
  for (auto& [p, exps] : pm) std::sort(exps.rbegin(), exps.rend());
  return pm;
}

std::vector<Int> invariant_factors_of_primary(const PrimaryMap& pm) {
  size_t k = 0;
  for (const auto& [p, exps] : pm) k = std::max(k, exps.size());
  std::vector<Int> chain;  // built largest-first
  for (size_t i = 0; i < k; ++i) {
    Int f = 1;
    for (const auto& [p, exps] : pm) {
      if (i < exps.size()) {
        Int q = 1;
        for (int j = 0; j < exps[i]; ++j) q *= p;
        f *= q;
      }
    }
    chain.push_back(f);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

FgAbelianGroup fg_from_cyclic_orders(const std::vector<Int>& orders, int free_rank) {
  FgAbelianGroup g;
  g.free_rank = free_rank;
  g.factors = invariant_factors_of_primary(primary_of_orders(orders));
  return g;
}

bool fg_isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b) { return a == b; }

std::string to_string(const FgAbelianGroup& g) {
  std::vector<std::string> parts;
  if (g.free_rank == 1) {
    parts.push_back("Z");
  } else if (g.free_rank > 1) {
    parts.push_back("Z^" + std::to_string(g.free_rank));
  }
  for (const Int& d : g.factors) parts.push_back("Z_" + d.str());
  if (parts.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += " (+) ";
    out += parts[i];
  }
  return out;
}

bool CokerElement::is_zero() const {
  for (const Int& c : torsion_coords) {
    if (c != 0) return false;
  }
  for (const Int& c : free_coords) {
    if (c != 0) return false;
  }
  return true;
}

std::string to_string(const CokerElement& e) {
  std::string out = "(";
  bool first = true;
  for (const Int& c : e.torsion_coords) {
    if (!first) out += ", ";
    out += c.str();
    first = false;
  }
  for (const Int& c : e.free_coords) {
    if (!first) out += ", ";
    out += c.str();
    first = false;
  }
  return out + ")";
}

FgAbelianGroup coker_structure(const IntMatrix& m) {
  SnfResult s = snf(m);
  FgAbelianGroup g;
  g.free_rank = m.rows() - s.rank;
  for (const Int& d : s.d) {
    if (d >= 2) g.factors.push_back(d);
  }
  return g;
}

FgAbelianGroup ker_structure(const IntMatrix& m) {
  // subgroups of free abelian groups are free
  FgAbelianGroup g;
  g.free_rank = m.cols() - snf(m).rank;
  return g;
}

CokerElement coker_class(const IntMatrix& m, const std::vector<Int>& x) {
  if (int(x.size()) != m.rows()) {
    throw input_error("coker_class: vector length does not match row count");
  }
  SnfResult s = snf(m);
  std::vector<Int> y = mul(s.u, x);
  CokerElement e;
  e.group.free_rank = m.rows() - s.rank;
  for (int i = 0; i < m.rows(); ++i) {
    Int d = i < int(s.d.size()) ? s.d[i] : Int(0);
    if (d == 1) continue;
    if (d >= 2) {
      e.group.factors.push_back(d);
      e.torsion_coords.push_back(mod_floor(y[i], d));
    } else {
      e.free_coords.push_back(y[i]);
    }
  }
  return e;
}

// ---------------------------------------------------------------------------
// FieldDescriptor

FieldDescriptor FieldDescriptor::rationals() {
  FieldDescriptor f;
  f.kind = FieldKind::rationals;
  f.k2_is_torsion = true;
  return f;
}
FieldDescriptor FieldDescriptor::reals() {
  FieldDescriptor f;
  f.kind = FieldKind::reals;
  return f;
}
FieldDescriptor FieldDescriptor::complexes() {
  FieldDescriptor f;
  f.kind = FieldKind::complexes;
  return f;
}
FieldDescriptor FieldDescriptor::finite(const Int& q) {
  Int p;
  if (!is_prime_power(q, &p)) throw input_error("finite field order must be a prime power");
  FieldDescriptor f;
  f.kind = FieldKind::finite;
  f.order = q;
  f.characteristic = p;
  return f;
}
FieldDescriptor FieldDescriptor::alg_closed(const Int& characteristic) {
  if (characteristic != 0 && !is_probable_prime(characteristic)) {
    throw input_error("characteristic must be 0 or a prime");
  }
  FieldDescriptor f;
  f.kind = FieldKind::alg_closed;
  f.characteristic = characteristic;
  return f;
}
FieldDescriptor FieldDescriptor::nfq_generic() {
  FieldDescriptor f;
  f.kind = FieldKind::nfq_generic;
  return f;
}
FieldDescriptor FieldDescriptor::generic() { return FieldDescriptor{}; }

bool FieldDescriptor::same_field(const FieldDescriptor& o) const {
  return kind == o.kind && order == o.order && characteristic == o.characteristic;
}

Tri no_free_quotients(const FieldDescriptor& f) {
  switch (f.kind) {
    case FieldKind::reals:
    case FieldKind::complexes:
    case FieldKind::finite:
    case FieldKind::alg_closed:
    case FieldKind::nfq_generic:
      return Tri::yes;
    case FieldKind::rationals:
      return Tri::no;  // Qx = Z_2 (+) Z^w surjects onto Z
    default:
      return Tri::unknown;
  }
}

// ---------------------------------------------------------------------------
// GroupExpr

void GroupExpr::add_cyclic(const Int& order) {
  if (order < 1) throw input_error("cyclic order must be >= 1");
  if (order == 1) return;
  for (const auto& [p, e] : factorize(order)) {
    Int q = 1;
    for (int j = 0; j < e; ++j) q *= p;
    torsion_[q] += 1;
  }
}

void GroupExpr::add_cyclic_omega(const Int& order) {
  if (order < 1) throw input_error("cyclic order must be >= 1");
  if (order == 1) return;
  for (const auto& [p, e] : factorize(order)) {
    Int q = 1;
    for (int j = 0; j < e; ++j) q *= p;
    torsion_omega_.insert(q);
  }
}

void GroupExpr::add_unit_quotient(const Int& d) {
  if (d < 1) throw input_error("quotient exponent must be >= 1");
  if (d == 1) return;  // Kx/<x^1> is trivial
  unit_quotients_.insert(d);
}

void GroupExpr::add_unit_torsion(const Int& d) {
  if (d < 1) throw input_error("torsion exponent must be >= 1");
  if (d == 1) return;  // Kx[1] is trivial
  unit_torsion_.insert(d);
}

namespace {

Int strip_prime(Int d, const Int& p) {
  if (p < 2) return d;
  while (d % p == 0) d /= p;
  return d;
}

}  // namespace

void GroupExpr::normalize() {
  switch (field_.kind) {
    case FieldKind::rationals: {
      // Kx = Z_2 (+) Z^w.  Kx/<x^d> = Z_gcd(2,d) (+) (Z_d)^w; Kx[d] = Z_gcd(2,d).
      // Copies of Kx stay symbolic; a unit copy absorbs any free summand.
      for (const Int& d : unit_quotients_) {
        if (d % 2 == 0) add_cyclic(2);
        add_cyclic_omega(d);
      }
      unit_quotients_.clear();
      for (const Int& d : unit_torsion_) {
        if (d % 2 == 0) add_cyclic(2);
      }
      unit_torsion_.clear();
      break;
    }
    case FieldKind::finite: {
      // Kx is cyclic of order q-1.
      Int n = field_.order - 1;
      for (int i = 0; i < unit_copies_; ++i) add_cyclic(n);
      unit_copies_ = 0;
      for (const Int& d : unit_quotients_) add_cyclic(gcd_int(d, n));
      unit_quotients_.clear();
      for (const Int& d : unit_torsion_) add_cyclic(gcd_int(d, n));
      unit_torsion_.clear();
      break;
    }
    case FieldKind::complexes:
    case FieldKind::alg_closed: {
      // Divisible units: every quotient by d-th powers is trivial, and the
      // d-torsion is the group of d-th roots of unity (drop the p-part in
      // characteristic p).  Kx itself stays opaque.
      unit_quotients_.clear();
      Int p = field_.kind == FieldKind::alg_closed ? field_.characteristic : Int(0);
      for (const Int& d : unit_torsion_) add_cyclic(p > 0 ? strip_prime(d, p) : d);
      unit_torsion_.clear();
      break;
    }
    case FieldKind::reals: {
      // Kx = Z_2 (+) (divisible torsion-free); only the sign survives
      // quotients and torsion.  Kx itself stays opaque.
      for (const Int& d : unit_quotients_) {
        if (d % 2 == 0) add_cyclic(2);
      }
      unit_quotients_.clear();
      for (const Int& d : unit_torsion_) {
        if (d % 2 == 0) add_cyclic(2);
      }
      unit_torsion_.clear();
      break;
    }
    default:
      break;  // all unit terms stay opaque
  }

  for (const Int& q : torsion_omega_) torsion_.erase(q);
  if (free_omega_) free_rank_ = 0;
  if (field_.kind == FieldKind::rationals && unit_copies_ > 0) {
    // Z (+) Kx = Kx over Q (the Z^w inside Kx absorbs any free part)
    free_rank_ = 0;
    free_omega_ = false;
  }
}

bool GroupExpr::has_opaque_units() const {
  return unit_copies_ > 0 || !unit_quotients_.empty() || !unit_torsion_.empty();
}

std::vector<Int> GroupExpr::torsion_invariant_factors() const {
  PrimaryMap pm;
  for (const auto& [q, count] : torsion_) {
    Int p = factorize(q).begin()->first;
    int e = valuation(q, p);
    for (Int i = 0; i < count; ++i) pm[p].push_back(e);
  }
  for (auto& [p, exps] : pm) std::sort(exps.rbegin(), exps.rend());
  return invariant_factors_of_primary(pm);
}

struct GroupExpr::ResolvedKey {
  int free_rank = 0;
  bool free_omega = false;
  std::map<Int, Int> torsion;
  std::set<Int> torsion_omega;
  int opaque_copies = 0;
  std::multiset<Int> opaque_quotients;
  std::multiset<Int> opaque_torsion;

  bool has_opaque() const {
    return opaque_copies > 0 || !opaque_quotients.empty() || !opaque_torsion.empty();
  }
  bool operator==(const ResolvedKey& o) const = default;
};

GroupExpr::ResolvedKey GroupExpr::resolved_key() const {
  ResolvedKey k;
  k.free_rank = free_rank_;
  k.free_omega = free_omega_;
  k.torsion = torsion_;
  k.torsion_omega = torsion_omega_;
  k.opaque_copies = unit_copies_;
  k.opaque_quotients = unit_quotients_;
  k.opaque_torsion = unit_torsion_;
  if (field_.kind == FieldKind::rationals && unit_copies_ > 0) {
    // expand the symbolic copies for comparison purposes
    k.torsion[2] += unit_copies_;
    k.free_omega = true;
    k.free_rank = 0;
    k.opaque_copies = 0;
  }
  for (const Int& q : k.torsion_omega) k.torsion.erase(q);
  return k;
}

GroupExpr expr_from_fg(const FgAbelianGroup& g, const FieldDescriptor& f) {
  GroupExpr e(f);
  e.add_free(g.free_rank);
  for (const Int& d : g.factors) e.add_cyclic(d);
  e.normalize();
  return e;
}

GroupExpr expr_sum(const GroupExpr& a, const GroupExpr& b) {
  if (!a.field().same_field(b.field())) {
    throw input_error("expr_sum: expressions over different fields");
  }
  GroupExpr out = a;
  out.add_free(b.free_rank());
  if (b.free_omega()) out.add_free_omega();
  for (const auto& [q, c] : b.torsion()) {
    for (Int i = 0; i < c; ++i) out.add_cyclic(q);
  }
  for (const Int& q : b.torsion_omega()) out.add_cyclic_omega(q);
  out.add_unit_copies(b.unit_copies());
  for (const Int& d : b.unit_quotients()) out.add_unit_quotient(d);
  for (const Int& d : b.unit_torsion()) out.add_unit_torsion(d);
  out.normalize();
  return out;
}

Tri expr_isomorphic(const GroupExpr& a, const GroupExpr& b) {
  if (!a.field_.same_field(b.field_)) {
    throw input_error("expr_isomorphic: expressions over different fields");
  }
  GroupExpr na = a, nb = b;
  na.normalize();
  nb.normalize();
  auto ka = na.resolved_key();
  auto kb = nb.resolved_key();
  if (ka == kb) return Tri::yes;
  if (!ka.has_opaque() && !kb.has_opaque()) return Tri::no;
  // Never report No through an opaque symbol: an unresolved Kx could in
  // principle absorb the visible difference.
  return Tri::unknown;
}

Tri is_torsion(const GroupExpr& e) {
  GroupExpr n = e;
  n.normalize();
  auto k = n.resolved_key();
  if (k.free_rank > 0 || k.free_omega) return Tri::no;
  bool uncertain = false;
  if (k.opaque_copies > 0) {
    switch (n.field_.kind) {
      case FieldKind::reals:
      case FieldKind::complexes:
        return Tri::no;  // units contain elements of infinite order
      case FieldKind::alg_closed:
        if (n.field_.characteristic == 0) return Tri::no;
        break;  // units of the algebraic closure of F_p are all roots of unity
      default:
        uncertain = true;
        break;
    }
  }
  if (!k.opaque_quotients.empty()) uncertain = true;
  // opaque Kx[d] terms have exponent dividing d, hence are torsion
  return uncertain ? Tri::unknown : Tri::yes;
}

std::string to_string(const GroupExpr& e) {
  std::vector<std::string> parts;
  if (e.free_rank() == 1) {
    parts.push_back("Z");
  } else if (e.free_rank() > 1) {
    parts.push_back("Z^" + std::to_string(e.free_rank()));
  }
  for (const Int& d : e.torsion_invariant_factors()) parts.push_back("Z_" + d.str());
  if (e.free_omega()) parts.push_back("Z^w");
  for (const Int& q : e.torsion_omega()) parts.push_back("(Z_" + q.str() + ")^w");
  if (e.unit_copies() == 1) {
    parts.push_back("Kx");
  } else if (e.unit_copies() > 1) {
    parts.push_back("Kx^" + std::to_string(e.unit_copies()));
  }
  for (const Int& d : e.unit_quotients()) parts.push_back("Kx/{" + d.str() + "}");
  for (const Int& d : e.unit_torsion()) parts.push_back("Kx[" + d.str() + "]");
  if (parts.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += " (+) ";
    out += parts[i];
  }
  return out;
}

GroupExpr unit_group_coker(const IntMatrix& m, const FieldDescriptor& f) {
  SnfResult s = snf(m);
  GroupExpr e(f);
  for (const Int& d : s.d) {
    if (d >= 2) e.add_unit_quotient(d);
  }
  e.add_unit_copies(m.rows() - s.rank);
  e.normalize();
  return e;
}

GroupExpr unit_group_ker(const IntMatrix& m, const FieldDescriptor& f) {
  // The unimodular SNF transforms act as automorphisms of G^n, so the
  // kernel is read off the diagonal: G[d_i] per torsion entry plus a full
  // copy of G per zero column.
  SnfResult s = snf(m);
  GroupExpr e(f);
  for (const Int& d : s.d) {
    if (d >= 2) e.add_unit_torsion(d);
  }
  e.add_unit_copies(m.cols() - s.rank);
  e.normalize();
  return e;
}

// ---------------------------------------------------------------------------
// Automorphism orbits of finite abelian p-groups.
//
// Aut(T) is generated by unit scalings of single cyclic summands and
// transvections g_j -> g_j + p^max(0, a_i - a_j) g_i (i != j); orbits are
// closed under these maps by breadth-first search.  The generator set is
// cross-checked against an exhaustive enumerator in the test suite.

namespace {

struct PComponent {
  Int p;
  std::vector<int> exps;     // ascending
  std::vector<Int> orders;   // p^exps[i]
};

using Elem = std::vector<Int>;

std::vector<PComponent> primary_components(const std::vector<Int>& factors) {
  std::map<Int, PComponent> comps;
  for (const Int& d : factors) {
    for (const auto& [p, e] : factorize(d)) {
      auto& c = comps[p];
      c.p = p;
      c.exps.push_back(e);
    }
  }
  std::vector<PComponent> out;
  for (auto& [p, c] : comps) {
    std::sort(c.exps.begin(), c.exps.end());
    for (int e : c.exps) {
      Int q = 1;
      for (int j = 0; j < e; ++j) q *= p;
      c.orders.push_back(q);
    }
    out.push_back(std::move(c));
  }
  return out;
}

// coordinates of x (given per invariant factor) inside one p-component;
// factor i contributes coordinate x_i mod p^{v_p(d_i)} when v_p(d_i) > 0
Elem project_element(const std::vector<Int>& factors, const std::vector<Int>& coords,
                     const PComponent& comp) {
  Elem out;
  std::vector<std::pair<int, Int>> slots;  // (exp, reduced coord), by factor order
  for (size_t i = 0; i < factors.size(); ++i) {
    int e = valuation(factors[i], comp.p);
    if (e == 0) continue;
    Int q = 1;
    for (int j = 0; j < e; ++j) q *= comp.p;
    slots.emplace_back(e, mod_floor(coords[i], q));
  }
  // invariant factors ascend, so p-exponents ascend too; slot order already
  // matches comp.exps
  for (auto& [e, c] : slots) out.push_back(c);
  return out;
}

// multiplicative order of u mod m
Int unit_order(const Int& u, const Int& m) {
  Int x = u % m, n = 1;
  while (x != 1) {
    x = (x * u) % m;
    ++n;
  }
  return n;
}

std::vector<Int> unit_generators(const Int& p, int a, const Int& q) {
  // generators of (Z/p^a)^x
  if (p == 2) {
    if (a == 1) return {};
    if (a == 2) return {Int(3)};
    return {Int(5), q - 1};
  }
  Int phi = q - q / p;
  for (Int g = 2; g < q; ++g) {
    if (g % p == 0) continue;
    if (unit_order(g, q) == phi) return {g};
  }
  throw std::logic_error("primitive root not found");
}

using ElemMap = std::function<Elem(const Elem&)>;

std::vector<ElemMap> aut_generators(const PComponent& c) {
  std::vector<ElemMap> gens;
  const int k = int(c.orders.size());
  for (int i = 0; i < k; ++i) {
    for (const Int& u : unit_generators(c.p, c.exps[i], c.orders[i])) {
      gens.push_back([i, u, q = c.orders[i]](const Elem& x) {
        Elem y = x;
        y[i] = mod_floor(y[i] * u, q);
        return y;
      });
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      // add a multiple of generator j into coordinate i; the multiple must
      // kill the order difference when summand i is the bigger one
      int gap = std::max(0, c.exps[i] - c.exps[j]);
      Int coef = 1;
      for (int t = 0; t < gap; ++t) coef *= c.p;
      gens.push_back([i, j, coef, q = c.orders[i]](const Elem& x) {
        Elem y = x;
        y[i] = mod_floor(y[i] + coef * x[j], q);
        return y;
      });
    }
  }
  return gens;
}

std::set<Elem> aut_orbit(const PComponent& c, const Elem& start) {
  auto gens = aut_generators(c);
  std::set<Elem> seen{start};
  std::vector<Elem> frontier{start};
  while (!frontier.empty()) {
    Elem x = frontier.back();
    frontier.pop_back();
    for (const auto& f : gens) {
      Elem y = f(x);
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return seen;
}

Int gcd_of_coords(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd_int(g, x);
  return g;
}

void require_membership(const CokerElement& x) {
  if (x.torsion_coords.size() != x.group.factors.size() ||
      int(x.free_coords.size()) != x.group.free_rank) {
    throw input_error("element coordinates do not match the group presentation");
  }
  for (size_t i = 0; i < x.torsion_coords.size(); ++i) {
    if (x.torsion_coords[i] < 0 || x.torsion_coords[i] >= x.group.factors[i]) {
      throw input_error("torsion coordinate out of range");
    }
  }
}

}  // namespace

Tri element_automorphism_invariant(const CokerElement& x, const Int& aut_bound) {
  require_membership(x);
  for (const Int& c : x.free_coords) {
    if (c != 0) return Tri::no;  // GL_r(Z) moves every nonzero free vector
  }
  if (x.is_zero()) return Tri::yes;
  if (x.group.torsion_order() > aut_bound) return Tri::unknown;
  for (const auto& comp : primary_components(x.group.factors)) {
    Elem t = project_element(x.group.factors, x.torsion_coords, comp);
    // fixed by every generator iff fixed by the whole group
    for (const auto& f : aut_generators(comp)) {
      if (f(t) != t) return Tri::no;
    }
  }
  return Tri::yes;
}

Tri pointed_isomorphic(const CokerElement& x1, const CokerElement& x2, const Int& aut_bound) {
  require_membership(x1);
  require_membership(x2);
  if (!fg_isomorphic(x1.group, x2.group)) return Tri::no;
  Int d1 = gcd_of_coords(x1.free_coords);
  Int d2 = gcd_of_coords(x2.free_coords);
  if (d1 != d2) return Tri::no;
  if (x1.group.factors.empty()) return Tri::yes;
  if (x1.group.torsion_order() > aut_bound) return Tri::unknown;

  const Int& d = d1;
  for (const auto& comp : primary_components(x1.group.factors)) {
    Elem t1 = project_element(x1.group.factors, x1.torsion_coords, comp);
    Elem t2 = project_element(x2.group.factors, x2.torsion_coords, comp);
    // shift subgroup d*T_p: coordinate k ranges over multiples of
    // p^min(v_p(d), exp_k); d = 0 allows no shift at all
    std::vector<Int> shift_mod(comp.orders.size());
    for (size_t k = 0; k < comp.orders.size(); ++k) {
      if (d == 0) {
        shift_mod[k] = comp.orders[k];  // difference must be 0 mod full order
      } else {
        int vd = std::min(valuation(d, comp.p), comp.exps[k]);
        Int m = 1;
        for (int j = 0; j < vd; ++j) m *= comp.p;
        shift_mod[k] = m;
      }
    }
    bool found = false;
    for (const Elem& o : aut_orbit(comp, t1)) {
      bool ok = true;
      for (size_t k = 0; k < o.size() && ok; ++k) {
        if (mod_floor(t2[k] - o[k], comp.orders[k]) % shift_mod[k] != 0) ok = false;
      }
      if (ok) {
        found = true;
        break;
      }
    }
    if (!found) return Tri::no;
  }
  return Tri::yes;
}

}  // namespace graphk
