#pragma once
// Axiom checks for a realized bicategory.  Deliberately construction-blind:
// every check reads only the cell tables, so the same code verifies honest
// realizations and mutated copies alike.

#include <string>
#include <vector>

#include "bicat/common.hpp"
#include "bicat/extended.hpp"

namespace bicat {

struct AxiomLine {
  std::string name;
  bool ok = true;
  Witness witness;    // cell indices of the first failure, in scan order
  int64_t cases = 0;  // instances examined
};

struct AxiomReport {
  std::vector<AxiomLine> lines;

  bool ok() const;
  const AxiomLine* find(const std::string& name) const;
  void merge(AxiomReport other);
};

// Table sizes, index ranges, identity boundaries, and the defined-iff-
// composable pattern of the partial tables.  Run this first: the other
// passes index the tables in ways that are only safe once it holds.
AxiomReport verify_shape(const RealizedBicategory& rb);

// Vertical category structure on 2-cells: boundary preservation,
// associativity, units, and invertibility.
AxiomReport verify_vertical(const RealizedBicategory& rb);

// Horizontal structure: tensor boundary preservation, identity 2-cells
// tensoring to identity 2-cells, and the interchange law.
AxiomReport verify_interchange(const RealizedBicategory& rb);

// Coherence: unitor and reassociator boundaries and naturality, the
// triangle and pentagon identities, and idempotence of unit 1-cells
// under tensor.
AxiomReport verify_coherence(const RealizedBicategory& rb);

// All passes in order.  Stops after the shape pass when it fails, since the
// remaining passes would read out-of-range indices.
AxiomReport verify_bicategory(const RealizedBicategory& rb);

}  // namespace bicat
