#pragma once
// Split form of the composition data: the carrier X decomposes along the
// source retraction as Y x| Z with Y = ker s and Z the fixed points of s,
// and the whole structure is then generated by two boundary maps d1: Y -> Z,
// d0: Z -> B, two unitor sections lambda0, rho0: Z -> Y, the conjugation
// action phi of Z on Y and the ambient action of B.  From this form the
// cells of a (small, finite) bicategory are realized as explicit tables.

#include <string>
#include <vector>

#include "bicat/bicat_data.hpp"

namespace bicat {

struct ExtendedData {
  GroupPtr Y;
  GroupPtr Z;
  GroupPtr B;
  std::vector<elem> d1;       // Y -> Z
  std::vector<elem> d0;       // Z -> B
  std::vector<elem> lambda0;  // Z -> Y
  std::vector<elem> rho0;     // Z -> Y
  std::vector<elem> phi;      // |Z| x |Y|: phi[z][y]
  std::vector<elem> xiX;      // |B| x (|Y||Z|): action on the rebuilt X

  elem phi_apply(elem z, elem y) const { return phi[z * Y->order() + y]; }
};

struct DecomposeResult {
  ExtendedData ext;
  // iso[x] = encoded (y, z) = y * |Z| + z; iso_inv is its inverse.
  std::vector<elem> iso;
  std::vector<elem> iso_inv;
};

// Splits valid data along s.  Requires (0), (iii); throws
// DecompositionFailed when the splitting does not exist (the fixed-point
// set is not the image of s, the pair map is not bijective, or an induced
// map fails to be a homomorphism).
DecomposeResult decompose(const BicatData& d);

// Rebuilds composition data on the carrier Y x| Z.  Validates the
// generating data first (boundary composite trivial, crossed-module laws
// for (Y, Z, d1, phi), induced unitors homomorphic); throws
// InvariantViolation with a witness otherwise.
BicatData reconstruct(const ExtendedData& e);

// A finite bicategory as pure tables.  Verifiers read nothing else, so they
// apply to any construction that fills the tables.
struct RealizedBicategory {
  int n_obj = 0;
  int n_one = 0;
  int n_two = 0;
  std::vector<int> one_dom, one_cod;  // per 1-cell, object indices
  std::vector<int> two_src, two_tgt;  // per 2-cell, 1-cell indices
  std::vector<int> id_one;            // per object
  std::vector<int> id_two;            // per 1-cell
  // Partial tables, -1 where undefined.  vcomp[b * n_two + a] = b after a;
  // tensor uses [left * n + right].
  std::vector<int> vcomp;
  std::vector<int> tensor_one;
  std::vector<int> tensor_two;
  std::vector<int> unitor_l, unitor_r;  // per 1-cell, a 2-cell
  // assoc[(g2 * n_one + g1) * n_one + g0] for composable g2, g1, g0
  // (g2 leftmost); -1 elsewhere.
  std::vector<int> assoc;

  int vc(int b, int a) const { return vcomp[b * n_two + a]; }
  int t1(int l, int r) const { return tensor_one[l * n_one + r]; }
  int t2(int l, int r) const { return tensor_two[l * n_two + r]; }
  int a_at(int g2, int g1, int g0) const {
    return assoc[(static_cast<size_t>(g2) * n_one + g1) * n_one + g0];
  }
};

// Only the three coherence families, for callers that do not need the
// whole cell complex.
struct CoherenceCells {
  std::vector<int> unitor_l, unitor_r;
  std::vector<int> assoc;
};

// Which assembly of the reassociator to realize.  Arithmetic is the
// 2-cell-arithmetic form (the one that is always coherent on valid data) and
// the default; ViaT / Direct select the two word-formula bracketings so
// their coherence behaviour can be compared per instance (see DerivedMaps).
enum class AssocVariant { Arithmetic, ViaT, Direct };

// Builds the full cell complex over the data's groups:
// objects = B, 1-cells = Z x B, 2-cells = Y x Z x B.
RealizedBicategory realize(const ExtendedData& e,
                           AssocVariant variant = AssocVariant::Arithmetic);
CoherenceCells coherence_cells(
    const ExtendedData& e, AssocVariant variant = AssocVariant::Arithmetic);

// Cell index helpers shared by realize and the tests.
inline int one_index(const ExtendedData& e, elem z, elem b) {
  return z * e.B->order() + b;
}
inline int two_index(const ExtendedData& e, elem y, elem z, elem b) {
  return (y * e.Z->order() + z) * e.B->order() + b;
}

}  // namespace bicat
