#pragma once
// Text formats for groups, structures, extended presentations and Mal'tsev
// triples, plus the deterministic dumps the command line emits.  Parsers
// report every lexical or shape defect as ParseError naming file, line and
// column; whether the parsed tables satisfy the algebraic conditions is
// left to the checkers, so files carrying broken structures load fine and
// fail verification instead.

#include <string>
#include <vector>

#include "bicat/bicat_data.hpp"
#include "bicat/extended.hpp"
#include "bicat/maltsev.hpp"

namespace bicat {

// `group <name> <order>` followed by <order> rows of <order> indices.
// The table must be an actual group with identity 0; a law violation is a
// ParseError pointing at the table.
GroupPtr load_group_file(const std::string& path);
std::string write_group_file(const FiniteGroup& g);

// `group X <group-file>` and `group B <group-file>` (resolved relative to
// the structure file), then blocks hom h / endo s / endo t / endo lambda /
// endo rho, one row of |X| indices each, and `action xi` with |B| rows of
// |X| indices.  Blocks appear in exactly that order.
BicatData load_structure_file(const std::string& path);
std::string write_structure_file(const BicatData& d, const std::string& x_ref,
                                 const std::string& b_ref);

// `group Y/Z/B <group-file>`, then hom d1 (|Y| indices into Z), hom d0
// (|Z| into B), hom lambda0 / hom rho0 (|Z| into Y), `action phi` (|Z|
// rows of |Y|) and `action xiX` (|B| rows of |Y|*|Z|, product order
// y*|Z|+z).
ExtendedData load_extended_file(const std::string& path);
std::string write_extended_file(const ExtendedData& e, const std::string& y_ref,
                                const std::string& z_ref,
                                const std::string& b_ref);

// `group A <group-file>`, then one or more triples — each `triple <name>`
// (the header may be omitted for a single unnamed triple, which is called
// "main") followed by endo s / endo t rows — and any number of 2-cell
// blocks `hom <name>` with one row of |A| indices plus `source <triple>` /
// `target <triple>` lines.
struct TripleFile {
  GroupPtr A;
  std::vector<std::string> names;
  std::vector<GpdTriple> triples;  // parallel to names; tables unvalidated

  struct TwoCellBlock {
    std::string name;
    std::string source;
    std::string target;
    std::vector<elem> tau;
  };
  std::vector<TwoCellBlock> twocells;
};

TripleFile load_triple_file(const std::string& path);

// Cell tables of a realized bicategory as a machine-readable report with
// stable key order, for diffing.
std::string dump_cells(const RealizedBicategory& rb);

}  // namespace bicat
