#pragma once
// Two-dimensional composition data over a pair of groups (X, B): a base map
// h, source/target retractions s and t, unitor endomorphisms lambda and rho,
// and an action xi of B on X.  Validity is a judgment, not a type invariant,
// so raw (possibly broken) tables are representable — enumeration and
// mutation testing depend on that.

#include <optional>
#include <string>
#include <vector>

#include "bicat/group.hpp"

namespace bicat {

struct BicatData {
  GroupPtr X;
  GroupPtr B;
  std::vector<elem> h;       // X -> B
  std::vector<elem> s;       // X -> X
  std::vector<elem> t;       // X -> X
  std::vector<elem> lambda;  // X -> X
  std::vector<elem> rho;     // X -> X
  std::vector<elem> xi;      // |B| x |X| rows: xi[b][x]

  elem act(elem b, elem x) const { return xi[b * X->order() + x]; }
  GroupAction action() const { return GroupAction{B, X, xi}; }

  // Serialization used for canonical ordering: h, s, t, lambda, rho, xi.
  std::vector<elem> key() const;
};

enum class CondId {
  Wellformed,     // (0)   h, s, t, lambda, rho are homomorphisms
  Action,         // (i)   xi is an action by automorphisms
  Equivariance,   // (ii)  h(b.x) = b h(x) b^-1
  Retractions,    // (iii) s t = t and t s = s
  BaseCollapse,   // (iv)  h s = h = h t
  BaseUnitors,    // (v)   h lambda = h = h rho
  UnitorIdentity, // (vi)  x |-> lambda(x) lambda(s(x))^-1 t(lambda(s(x))) is
                  //       the identity, and the same with rho
  KernelsCommute, // (vii) elements of ker s commute with elements of ker t
  Composition,    // (viii) the pair composite and triple reassociator are
                  //       homomorphisms between the iterated products
};

const char* cond_label(CondId id);  // "(0)".."(viii)"
const char* cond_name(CondId id);

struct CondEntry {
  CondId id;
  bool checked = false;
  bool ok = false;
  Witness witness;
  std::string note;
};

struct ConditionReport {
  std::vector<CondEntry> entries;

  const CondEntry& entry(CondId id) const;
  CondEntry& entry(CondId id);
  bool overall() const;       // conjunction of checked entries
  bool all_checked() const;
};

// Exhaustive check of (0) and (i)-(vii); (viii) is left unchecked (see
// check_m_alpha_homs).  Pure: the report depends only on the data.
ConditionReport check_conditions(const BicatData& d,
                                 ExecMode mode = default_exec_mode());

// Pointwise tables on X of the maps the composite and reassociator are
// built from.  The reassociator components exist in two forms.  The printed
// word formulas (a1, a2_direct / a2_via_t, a3) are carried for comparison:
// the two a2 words genuinely differ (the "direct" one starts from
// s rho lambda, the "via target" one from s rho lambda t).  The *_arith
// components are assembled by 2-cell arithmetic from the unitors,
//   a1 = rho . u,   a2 = u.v - u.lambda + lambda.u,   a3 = lambda . v,
// which is the defining form; the printed words are only pointwise
// expansions of it and fail to match on some instances.  Coherence of the
// realized structure holds for the arithmetic form (and only for it, where
// they differ).
struct DerivedMaps {
  std::vector<elem> u, v;
  std::vector<elem> a1;
  std::vector<elem> a2_direct;
  std::vector<elem> a2_via_t;
  std::vector<elem> a3;
  std::vector<elem> a1_arith;
  std::vector<elem> a2_arith;
  std::vector<elem> a3_arith;
};

DerivedMaps derive_maps(const BicatData& d);

struct MAlphaReport {
  bool m_ok = false;
  Witness m_witness;
  // Decisive: the arithmetic reassociator.  Condition (viii) holds iff the
  // composite and this map are homomorphisms.
  bool alpha_ok_arith = false;
  Witness alpha_witness_arith;
  // Informational: the printed word formulas, one flag per a2 bracketing.
  bool alpha_ok_direct = false;
  Witness alpha_witness_direct;
  bool alpha_ok_via_t = false;
  Witness alpha_witness_via_t;

  bool ok() const { return m_ok && alpha_ok_arith; }
};

// Condition (viii): builds X x| B and the two iterated products over it and
// checks that m(x, x', b) = (u(x) v(x'), b) and
// alpha(x, x', x'', b) = (a1(x) a2(x') a3(x''), b) are homomorphisms — the
// alpha check runs three times, once with the arithmetic components
// (decisive for ok()) and once per printed a2 bracketing (informational).
// Requires (0) and (i)-(vii); throws PreconditionFailed otherwise.
MAlphaReport check_m_alpha_homs(const BicatData& d,
                                ExecMode mode = default_exec_mode());

// check_conditions + check_m_alpha_homs folded into one report.
ConditionReport full_check(const BicatData& d,
                           ExecMode mode = default_exec_mode());

// For data whose four endomorphisms are all the identity: true iff the
// action restricted along h is conjugation (x x' x^-1 = h(x).x') and (ii)
// holds.  Throws PreconditionFailed when an endomorphism is not identity.
bool is_crossed_module(const BicatData& d, Witness* witness = nullptr);

}  // namespace bicat
