#pragma once
// Triples (A, s, t) with st = t and ts = s over a finite group, the
// operation p(a, b, c) = a b^-1 c, property (P1) and its pointwise variant,
// the equivalence with internal groupoids, an additive calculus of 2-cells
// between triple morphisms, and the pseudocategory composition m and
// reassociator built from a pair of unitor 2-cells.  Everything is checked
// by explicit scans; "there exists a morphism such that V(phi) = ..." is
// implemented as "the pointwise-defined map is a homomorphism".

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicat/bicat_data.hpp"
#include "bicat/group.hpp"

namespace bicat {

struct GpdTriple {
  GroupPtr A;
  std::vector<elem> s, t;
};

// Least violation of the triple laws.  Witness {0, x, y} / {1, x, y} when
// s / t is not a homomorphism at (x, y), {2, x} when s(t(x)) != t(x),
// {3, x} when t(s(x)) != s(x).
std::optional<Witness> triple_violation(const GpdTriple& g);
GpdTriple make_triple(GroupPtr a, std::vector<elem> s,
                      std::vector<elem> t);  // throws PreconditionFailed

// Is f a morphism of triples `from` -> `to`?  (a homomorphism with
// f s' = s f and f t' = t f.)  Witness {0, x, y} hom failure, {1, x} s
// intertwining, {2, x} t intertwining.
std::optional<Witness> triple_morphism_violation(const GpdTriple& from,
                                                 const GpdTriple& to,
                                                 const std::vector<elem>& f);

// (P1) reduced to its universal instance: every constrained cospan factors
// through R(s,t) = {(a,b,c) : s(a) = s(b), t(b) = t(c)}, a subgroup of A^3,
// so (P1) holds iff p(a,b,c) = a b^-1 c is a homomorphism on R(s,t).
// Witness: the offending pair of triples, flattened to six entries.
bool check_P1(const GpdTriple& g, Witness* witness = nullptr);

// The pointwise variant: x -> s(x) x^-1 t(x) is an endomorphism of A.
// Witness: the pair (x, y) where multiplicativity fails.
bool check_P1prime(const GpdTriple& g, Witness* witness = nullptr);

// An internal groupoid in groups, with the object subgroup embedded in the
// arrow group (e is the inclusion of C0).
struct InternalGroupoidGrp {
  GroupPtr C1;
  Subgroup C0;             // objects: elements fixed by d (the image of e)
  std::vector<elem> d, c;  // endomorphisms of C1 with image in C0
  GroupPtr product;        // C1 x C1, the ambient group of the pullback
  Subgroup C2;             // composable pairs (x1, x2): d(x1) = c(x2)
  std::vector<elem> m;     // |C1| x |C1| table, -1 off the pullback
  std::vector<elem> i;     // inverses

  elem m_at(elem x1, elem x2) const { return m[x1 * C1->order() + x2]; }
};

// Exhaustive check of every groupoid law on the tables; nullopt when valid.
// The leading witness entry names the law (see maltsev.cpp).
std::optional<Witness> groupoid_violation(const InternalGroupoidGrp& g);

// The equivalence, in both directions.  groupoid_from_triple throws
// P1Fails when (P1) is missing; triple_from_groupoid reads (C1, ed, ec)
// back off the groupoid.  Both validate what they produce.
InternalGroupoidGrp groupoid_from_triple(const GpdTriple& g);
GpdTriple triple_from_groupoid(const InternalGroupoidGrp& g);

// The nine-variable associativity of p on its constraint set, plus the two
// four-variable corollaries on theirs.  Scans are complete unless the
// tuple budget is hit, in which case the corresponding exhaustive flag is
// cleared and the result reflects the tuples seen.
struct PassocReport {
  bool main_ok = true, left_ok = true, right_ok = true;
  bool main_exhaustive = true, left_exhaustive = true, right_exhaustive = true;
  int64_t main_cases = 0, left_cases = 0, right_cases = 0;
  Witness main_witness, left_witness, right_witness;

  bool ok() const { return main_ok && left_ok && right_ok; }
  bool exhaustive() const {
    return main_exhaustive && left_exhaustive && right_exhaustive;
  }
};

PassocReport check_p_associativity(const GpdTriple& g,
                                   int64_t tuple_cap = 1'000'000);

// A 2-cell between morphisms of triples `from` -> `to`: a homomorphism tau
// with s tau s' = s tau and t tau t' = t tau.  Its boundary morphisms are
// recovered from tau itself.
struct TwoCellH {
  GpdTriple from;  // (A', s', t')
  GpdTriple to;    // (A, s, t)
  std::vector<elem> tau;
};

// Witness {0, x, y} hom failure, {1, x} s-law, {2, x} t-law.
std::optional<Witness> twocell_violation(const TwoCellH& tc);
TwoCellH make_twocell(GpdTriple from, GpdTriple to, std::vector<elem> tau);

// dom(tau)(x) = s tau t'(x) . tau t'(x)^-1 . tau(x); cod(tau)(x) =
// tau(x) . tau s'(x)^-1 . t tau s'(x).  Both results are verified to be
// morphisms of triples (throws InvariantViolation otherwise, which cannot
// happen over a target satisfying (P1)).
std::vector<elem> twocell_dom(const TwoCellH& tc);
std::vector<elem> twocell_cod(const TwoCellH& tc);

// 0(f) = f itself viewed as a 2-cell; dom = cod = f.
TwoCellH twocell_zero(GpdTriple from, GpdTriple to, std::vector<elem> f);

// (tau + sigma)(x) = tau(x) . f(x)^-1 . sigma(x) with f = dom(tau) =
// cod(sigma); throws NotComposable when the triples or the boundary do not
// match.  (-tau)(x) = dom(tau)(x) . tau(x)^-1 . cod(tau)(x).
TwoCellH twocell_add(const TwoCellH& tau, const TwoCellH& sigma);
TwoCellH twocell_neg(const TwoCellH& tau);

// Whiskering with morphisms of triples: tau . u and v . tau.
TwoCellH twocell_precompose(const TwoCellH& tau, const GpdTriple& g,
                            const std::vector<elem>& u);  // u : g -> tau.from
TwoCellH twocell_postcompose(const GpdTriple& g, const std::vector<elem>& v,
                             const TwoCellH& tau);  // v : tau.to -> g

// Pseudocategory data over a pair of triples: boundary morphisms d, c with
// section e, and unitor 2-cells lambda, rho in H(C1, C1).
struct PseudocatData {
  GpdTriple C1, C0;
  std::vector<elem> d, c;  // morphisms of triples C1 -> C0
  std::vector<elem> e;     // morphism of triples C0 -> C1
  TwoCellH lambda, rho;
};

struct PseudocatReport {
  struct Line {
    std::string name;
    bool ok = true;
    Witness witness;
  };

  std::vector<Line> preconditions;  // named, in check order

  int n = 0;                 // |C1|
  std::vector<elem> m;       // n x n, -1 off the pullback d(x1) = c(x2)
  Line m_hom{"m-homomorphism", true, {}};
  Line m_triple{"m-triple-morphism", true, {}};
  Line m_bounds{"m-boundaries", true, {}};

  // Composable triples (x1, x2, x3), encoded (x1 n + x2) n + x3, ascending.
  std::vector<int64_t> triples;
  std::vector<elem> alpha_arith;    // assembled from 2-cell arithmetic
  std::vector<elem> alpha_formula;  // assembled from the component formulas
  // Informational only — excluded from ok().  The word-formula expansion can
  // genuinely diverge from the arithmetic reassociator; the arithmetic one
  // is the structure's alpha and the one all later checks run against.
  Line alpha_agree{"alpha-groupings-agree", true, {}};
  Line alpha_hom{"alpha-homomorphism", true, {}};
  Line alpha_h{"alpha-2cell-membership", true, {}};
  Line alpha_bounds{"alpha-boundaries", true, {}};

  bool preconditions_ok() const;
  bool ok() const;
};

// Builds m(x1, x2) = dom(rho)(x1) . ed(x1)^-1 . dom(lambda)(x2) on the
// pullback and the reassociator alpha on composable triples, the latter
// twice: once by 2-cell arithmetic from
//   alpha1 = rho dom(rho),
//   alpha2 = -(dom(rho) lambda) + (lambda dom(rho)),
//   alpha3 = lambda dom(lambda),
// and once from the explicit component formulas; the two value tables are
// compared pointwise and both are returned when they differ.  Throws
// PreconditionFailed naming the first failed precondition, and
// NotHomomorphism when m or the arithmetic alpha fails to be one.
PseudocatReport pseudocat_from_data(const PseudocatData& pd);

// Encodes two-dimensional composition data over (X, B) as pseudocategory
// data on the carrier X x| B: s, t, lambda, rho act on the X leg, d is the
// base projection, c shifts the base by h, e is the unit section.  The
// four extended endomorphisms must again be homomorphisms of the product
// (throws PreconditionFailed otherwise).
PseudocatData encode_as_pseudocat(const BicatData& d);

}  // namespace bicat
