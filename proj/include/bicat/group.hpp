#pragma once
// Finite groups as validated Cayley tables, plus the maps between them that
// the rest of the engine is built from: homomorphisms, subgroups, actions by
// automorphisms, semidirect products and the Mal'tsev term x * y^-1 * z.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bicat/common.hpp"
#include "bicat/scan.hpp"

namespace bicat {

class FiniteGroup {
 public:
  int order() const { return n_; }
  const std::string& name() const { return name_; }
  elem op(elem a, elem b) const { return table_[a * n_ + b]; }
  elem inv(elem a) const { return inv_[a]; }
  static constexpr elem id = 0;

  // a * b^-1 * c, the Mal'tsev term every derived construction reduces to.
  elem p(elem a, elem b, elem c) const { return op(op(a, inv_[b]), c); }

  elem conjugate(elem a, elem x) const {  // a x a^-1
    return op(op(a, x), inv_[a]);
  }

  int element_order(elem a) const;
  const std::vector<elem>& table() const { return table_; }

  // Exhaustively validates closure, identity-at-0, inverses, associativity.
  // Throws NotClosed / NoIdentity / NoInverse / NotAssociative with the
  // least witnessing tuple.
  static std::shared_ptr<const FiniteGroup> validate(std::vector<elem> table,
                                                     int order,
                                                     std::string name);

  // For tables produced by constructions that are groups by construction
  // (products, reindexed subgroups).  Sizes and inverses are still computed
  // and range-checked; the O(n^3) associativity sweep is skipped.
  static std::shared_ptr<const FiniteGroup> unchecked(std::vector<elem> table,
                                                      int order,
                                                      std::string name);

 private:
  FiniteGroup(std::vector<elem> table, int order, std::string name);
  int n_;
  std::vector<elem> table_;
  std::vector<elem> inv_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr validate_group(std::vector<elem> table, int order, std::string name);

struct GroupHom {
  GroupPtr dom;
  GroupPtr cod;
  std::vector<elem> map;  // map[x] for each x in dom

  elem operator()(elem x) const { return map[x]; }
};

// Least pair (x, y) with f(x*y) != f(x)*f(y), if any.
std::optional<Witness> hom_violation(const FiniteGroup& dom,
                                     const FiniteGroup& cod,
                                     const std::vector<elem>& map,
                                     ExecMode mode = default_exec_mode());

// Validating constructor; throws NotHomomorphism with the least witness.
GroupHom make_hom(GroupPtr dom, GroupPtr cod, std::vector<elem> map);

GroupHom identity_hom(GroupPtr g);
GroupHom compose(const GroupHom& f, const GroupHom& g);  // f after g

struct Subgroup {
  GroupPtr parent;
  std::vector<elem> elements;  // sorted ascending; always contains 0

  bool contains(elem x) const;
  int size() const { return static_cast<int>(elements.size()); }
};

Subgroup kernel(const GroupHom& f);
Subgroup full_subgroup(GroupPtr g);
Subgroup subgroup_closure(GroupPtr g, const std::vector<elem>& gens);

// True when every element of h commutes with every element of k; otherwise
// false with the least offending pair in *witness.
bool centralizes(const Subgroup& h, const Subgroup& k,
                 Witness* witness = nullptr);

// The subgroup as a group in its own right, elements reindexed 0..m-1 in
// ascending parent order (identity stays at 0).  to_parent[i] is the parent
// index of the i-th element.
struct ReindexedGroup {
  GroupPtr group;
  std::vector<elem> to_parent;
  std::vector<elem> from_parent;  // parent index -> local index, -1 outside
};
ReindexedGroup subgroup_as_group(const Subgroup& s, std::string name);

// Action of `acting` on `target` by automorphisms: row b is the permutation
// x -> b.x.
struct GroupAction {
  GroupPtr acting;
  GroupPtr target;
  std::vector<elem> auts;  // |acting| x |target|, row-major

  elem apply(elem b, elem x) const { return auts[b * target->order() + x]; }
};

// Least violation of the action laws: each row an automorphism, row of the
// identity trivial, row(b*b') = row(b) o row(b').  Witness encodes the rule
// broken; nullopt when valid.
std::optional<Witness> action_violation(const GroupAction& a,
                                        ExecMode mode = default_exec_mode());

GroupAction make_action(GroupPtr acting, GroupPtr target,
                        std::vector<elem> auts);  // throws ActionInvalid
GroupAction trivial_action(GroupPtr acting, GroupPtr target);
GroupAction conjugation_action(GroupPtr g);

// Semidirect product X x| B for an action of B on X.  Elements are encoded
// x * |B| + b, so (0, 0) is the identity at index 0 and
// (x, b) * (x', b') = (x * (b.x'), b * b').
struct SemidirectProduct {
  GroupPtr group;
  GroupPtr left;   // X
  GroupPtr right;  // B

  elem encode(elem x, elem b) const { return x * right->order() + b; }
  elem x_part(elem g) const { return g / right->order(); }
  elem b_part(elem g) const { return g % right->order(); }
};

SemidirectProduct semidirect_product(GroupPtr x, GroupPtr b,
                                     const GroupAction& xi);  // validates xi
// Same construction when the action is already known to be valid.
SemidirectProduct semidirect_product_unchecked(GroupPtr x, GroupPtr b,
                                               const GroupAction& xi);
SemidirectProduct direct_product(GroupPtr x, GroupPtr b);

elem maltsev_p(const FiniteGroup& g, elem a, elem b, elem c);

// Hom/endo/action enumeration, complete by generator-image search, returned
// in canonical order (lexicographic on the map table / concatenated rows).
std::vector<GroupHom> enumerate_homs(GroupPtr g, GroupPtr h);
std::vector<GroupHom> enumerate_endos(GroupPtr g);
std::vector<GroupAction> enumerate_actions(GroupPtr acting, GroupPtr target);

// Automorphism group: element i of `group` is the permutation perms[i].
struct AutomorphismGroup {
  GroupPtr group;
  std::vector<std::vector<elem>> perms;
};
AutomorphismGroup automorphism_group(GroupPtr g);

// Exhaustive bijection search with element-order pruning; fine for the desk
// scale this engine targets (orders <= 24).
bool isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                std::vector<elem>* iso_out = nullptr);

std::vector<elem> small_generating_sequence(const FiniteGroup& g);

}  // namespace bicat
