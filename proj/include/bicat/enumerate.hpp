#pragma once
// Exhaustive enumeration of valid structures over a fixed pair of small
// groups, plus the mutation harness used for negative testing.  Two search
// strategies produce the same canonical list: a layered scan that prunes by
// the cheap conditions first, and a naive product scan kept as the oracle.

#include <cstdint>
#include <string>
#include <vector>

#include "bicat/bicat_data.hpp"
#include "bicat/extended.hpp"

namespace bicat {

// Which word-formula bracketing of the reassociator's middle component, if
// any, agreed with the arithmetic assembly on this structure — recorded per
// instance for the bracketing comparison.  Admission itself tests the
// arithmetic reassociator.  Only meaningful when composition_checked is set
// (the crossed-module enumerator selects by the Peiffer identity instead and
// leaves it unset).
struct StructureFingerprint {
  bool composition_checked = false;
  bool alpha_direct = false;
  bool alpha_via_t = false;
};

struct EnumerationResult {
  std::string x_name;
  std::string b_name;
  int64_t count = 0;
  // Ordered byte-lexicographically on the table concatenation
  // (h, s, t, lambda, rho, xi); duplicate-free.
  std::vector<BicatData> structures;
  std::vector<StructureFingerprint> fingerprints;  // parallel to structures
};

// Candidate tuples inspected across all layers before the search gives up
// with SearchBudgetExceeded (witness: {layer, inspected so far, candidates
// the next layer would add}).  Layers are numbered 1 (s,t), 2 (lambda,rho),
// 3 (h), 4 (xi), 5 (full check); the naive scan reports layer 0.
inline constexpr int64_t kDefaultSearchBudget = 50'000'000;

// All (h, s, t, lambda, rho, xi) over hom/endo/action tables passing every
// condition, with at least one reassociator bracketing.  Layer k only ever
// prunes by conditions that are necessary for validity, so the final filter
// — check_conditions plus check_m_alpha_homs on each leaf — is the sole
// arbiter of membership.
EnumerationResult enumerate_bicat_data(GroupPtr X, GroupPtr B,
                                       int64_t budget = kDefaultSearchBudget,
                                       ExecMode mode = default_exec_mode());

// Same result by scanning the full product space with no pruning; feasible
// only for tiny groups.  Exists so the layered scan can be pinned against
// an implementation with no layering logic to get wrong.
EnumerationResult enumerate_bicat_data_naive(
    GroupPtr X, GroupPtr B, int64_t budget = kDefaultSearchBudget,
    ExecMode mode = default_exec_mode());

// The degenerate slice: all four endomorphisms fixed to the identity, all
// (h, xi) kept iff the action along h is conjugation and the equivariance
// law holds (the crossed-module axioms).  Never consults the composite
// homomorphism conditions, so fingerprints stay unset.
EnumerationResult enumerate_crossed_modules(
    GroupPtr X, GroupPtr B, int64_t budget = kDefaultSearchBudget,
    ExecMode mode = default_exec_mode());

// --- Mutation harness ---------------------------------------------------

// Replace one cell of one named table.  For structure data the tables are
// h, s, t, lambda, rho, xi and values must stay inside the codomain range
// (the condition checker indexes by them).  For realized bicategories the
// tables are the RealizedBicategory fields by name; partial tables
// (vcomp, tensor_one, tensor_two, assoc) also accept -1.
struct MutationSpec {
  std::string table;
  int64_t entry = 0;
  elem value = 0;
};

struct MutationOutcome {
  MutationSpec spec;
  bool noop = false;      // replacement equalled the original entry
  bool rejected = false;
  std::string reason;     // first failed condition or axiom, empty if none
  Witness witness;
};

struct MutationReport {
  std::vector<MutationOutcome> outcomes;

  int rejected_count() const;
  // Every proper mutation rejected and every no-op accepted.
  bool all_rejected() const;
};

// Runs the full condition check on a mutated copy per spec.  The base
// structure must itself pass (InvariantViolation otherwise) so that a
// rejection is attributable to the mutation.
MutationReport mutate_and_expect_reject(const BicatData& d,
                                        const std::vector<MutationSpec>& specs,
                                        ExecMode mode = default_exec_mode());

// Same harness against the cell tables of a realized bicategory, verified
// with verify_bicategory.
MutationReport mutate_and_expect_reject(
    const RealizedBicategory& rb, const std::vector<MutationSpec>& specs);

// Deterministic stream of single-entry mutations over d's six tables, each
// with a replacement differing from the original value.
std::vector<MutationSpec> random_mutations(const BicatData& d, int count,
                                           std::uint64_t seed);

}  // namespace bicat
