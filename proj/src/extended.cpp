#include "bicat/extended.hpp"

#include <algorithm>

namespace bicat {

namespace {

// x |-> (x s(x)^-1, s(x)) is the splitting; both legs land where they
// should whenever (iii) holds.
struct Splitting {
  ReindexedGroup y;  // ker s
  ReindexedGroup z;  // fixed points of s
};

Splitting split_carrier(const BicatData& d) {
  Splitting sp;
  sp.y = subgroup_as_group(kernel(GroupHom{d.X, d.X, d.s}),
                           "ker_s(" + d.X->name() + ")");
  Subgroup fix;
  fix.parent = d.X;
  for (elem x = 0; x < d.X->order(); ++x) {
    if (d.s[x] == x) fix.elements.push_back(x);
  }
  sp.z = subgroup_as_group(fix, "fix_s(" + d.X->name() + ")");
  return sp;
}

}  // namespace

DecomposeResult decompose(const BicatData& d) {
  const FiniteGroup& X = *d.X;
  const int nx = X.order();
  // Structural preconditions: homomorphisms and the retraction laws.
  for (const auto* m : {&d.s, &d.t, &d.lambda, &d.rho}) {
    if (auto w = hom_violation(X, X, *m)) {
      fail(ErrKind::PreconditionFailed,
           "endomorphism table is not a homomorphism, witness " +
               witness_string(*w),
           *w);
    }
  }
  if (auto w = hom_violation(X, *d.B, d.h)) {
    fail(ErrKind::PreconditionFailed, "h is not a homomorphism");
  }
  for (elem x = 0; x < nx; ++x) {
    if (d.s[d.t[x]] != d.t[x] || d.t[d.s[x]] != d.s[x]) {
      fail(ErrKind::PreconditionFailed,
           "retraction laws fail at " + std::to_string(x), {x});
    }
  }

  Splitting sp = split_carrier(d);
  const int ny = sp.y.group->order();
  const int nz = sp.z.group->order();

  // The fixed-point set must be the image of s.
  for (elem x = 0; x < nx; ++x) {
    if (sp.z.from_parent[d.s[x]] < 0) {
      fail(ErrKind::DecompositionFailed,
           "image of s leaves the fixed-point set at " + std::to_string(x),
           {x});
    }
  }
  if (static_cast<int64_t>(ny) * nz != nx) {
    fail(ErrKind::DecompositionFailed,
         "kernel and fixed-point sizes do not multiply to |X|");
  }

  DecomposeResult out;
  out.iso.assign(nx, -1);
  out.iso_inv.assign(nx, -1);
  for (elem x = 0; x < nx; ++x) {
    const elem ypart = sp.y.from_parent[X.op(x, X.inv(d.s[x]))];
    const elem zpart = sp.z.from_parent[d.s[x]];
    if (ypart < 0) {
      fail(ErrKind::DecompositionFailed,
           "splitting leg x s(x)^-1 leaves ker s at " + std::to_string(x),
           {x});
    }
    const elem enc = ypart * nz + zpart;
    if (out.iso_inv[enc] >= 0) {
      fail(ErrKind::DecompositionFailed,
           "splitting map is not injective at " + std::to_string(x), {x});
    }
    out.iso[x] = enc;
    out.iso_inv[enc] = x;
  }

  ExtendedData& e = out.ext;
  e.Y = sp.y.group;
  e.Z = sp.z.group;
  e.B = d.B;

  auto hom_or_fail = [&](std::vector<elem> map, const FiniteGroup& dom,
                         const FiniteGroup& cod, const char* what) {
    if (auto w = hom_violation(dom, cod, map)) {
      fail(ErrKind::DecompositionFailed,
           std::string("induced map ") + what + " is not a homomorphism, " +
               "witness " + witness_string(*w),
           *w);
    }
    return map;
  };

  {  // d1 = t restricted to ker s, landing in the fixed points
    std::vector<elem> m(ny);
    for (elem y = 0; y < ny; ++y) {
      const elem img = d.t[sp.y.to_parent[y]];
      if (sp.z.from_parent[img] < 0) {
        fail(ErrKind::DecompositionFailed,
             "t does not map ker s into the fixed points", {y});
      }
      m[y] = sp.z.from_parent[img];
    }
    e.d1 = hom_or_fail(std::move(m), *e.Y, *e.Z, "d1");
  }
  {  // d0 = h restricted to the fixed points
    std::vector<elem> m(nz);
    for (elem z = 0; z < nz; ++z) m[z] = d.h[sp.z.to_parent[z]];
    e.d0 = hom_or_fail(std::move(m), *e.Z, *d.B, "d0");
  }
  // Unitor sections: z |-> lambda(z) s(lambda(z))^-1 (and the rho twin).
  auto section = [&](const std::vector<elem>& unitor, const char* what) {
    std::vector<elem> m(nz);
    for (elem z = 0; z < nz; ++z) {
      const elem lx = unitor[sp.z.to_parent[z]];
      const elem ypart = sp.y.from_parent[X.op(lx, X.inv(d.s[lx]))];
      if (ypart < 0) {
        fail(ErrKind::DecompositionFailed,
             std::string("section for ") + what + " leaves ker s", {z});
      }
      m[z] = ypart;
    }
    return hom_or_fail(std::move(m), *e.Z, *e.Y, what);
  };
  e.lambda0 = section(d.lambda, "lambda0");
  e.rho0 = section(d.rho, "rho0");

  {  // phi: conjugation of ker s by fixed points, inside X
    e.phi.resize(static_cast<size_t>(nz) * ny);
    for (elem z = 0; z < nz; ++z) {
      const elem zp = sp.z.to_parent[z];
      for (elem y = 0; y < ny; ++y) {
        const elem img = sp.y.from_parent[X.conjugate(zp, sp.y.to_parent[y])];
        if (img < 0) {
          fail(ErrKind::DecompositionFailed,
               "conjugation by a fixed point leaves ker s", {z, y});
        }
        e.phi[z * ny + y] = img;
      }
    }
  }
  {  // ambient action transported along the splitting
    const int nb = d.B->order();
    e.xiX.resize(static_cast<size_t>(nb) * nx);
    for (elem b = 0; b < nb; ++b) {
      for (elem pair = 0; pair < nx; ++pair) {
        e.xiX[b * nx + pair] = out.iso[d.act(b, out.iso_inv[pair])];
      }
    }
  }
  return out;
}

namespace {

void validate_extended(const ExtendedData& e, const SemidirectProduct& x) {
  const int ny = e.Y->order();
  const int nz = e.Z->order();
  auto hom_or_fail = [&](const std::vector<elem>& map, const FiniteGroup& dom,
                         const FiniteGroup& cod, const char* what) {
    if (auto w = hom_violation(dom, cod, map)) {
      Witness ww{*w};
      fail(ErrKind::InvariantViolation,
           std::string(what) + " is not a homomorphism, witness " +
               witness_string(ww),
           ww);
    }
  };
  hom_or_fail(e.d1, *e.Y, *e.Z, "d1");
  hom_or_fail(e.d0, *e.Z, *e.B, "d0");
  hom_or_fail(e.lambda0, *e.Z, *e.Y, "lambda0");
  hom_or_fail(e.rho0, *e.Z, *e.Y, "rho0");
  GroupAction phi{e.Z, e.Y, e.phi};
  if (auto w = action_violation(phi)) {
    fail(ErrKind::InvariantViolation,
         "phi is not an action by automorphisms, witness " +
             witness_string(*w),
         *w);
  }
  // Boundary composite is trivial.
  for (elem y = 0; y < ny; ++y) {
    if (e.d0[e.d1[y]] != FiniteGroup::id) {
      fail(ErrKind::InvariantViolation,
           "d0(d1(y)) != e at y = " + std::to_string(y), {y});
    }
  }
  // (Y, Z, d1, phi) is a crossed module: equivariance and the Peiffer law.
  for (elem z = 0; z < nz; ++z) {
    for (elem y = 0; y < ny; ++y) {
      if (e.d1[e.phi_apply(z, y)] != e.Z->conjugate(z, e.d1[y])) {
        fail(ErrKind::InvariantViolation,
             "d1 is not phi-equivariant at (z, y) = (" + std::to_string(z) +
                 ", " + std::to_string(y) + ")",
             {z, y});
      }
    }
  }
  for (elem y = 0; y < ny; ++y) {
    for (elem yp = 0; yp < ny; ++yp) {
      if (e.phi_apply(e.d1[y], yp) != e.Y->conjugate(y, yp)) {
        fail(ErrKind::InvariantViolation,
             "Peiffer law fails at (y, y') = (" + std::to_string(y) + ", " +
                 std::to_string(yp) + ")",
             {y, yp});
      }
    }
  }
  // Ambient action on the rebuilt carrier.
  GroupAction xiX{e.B, x.group, e.xiX};
  if (auto w = action_violation(xiX)) {
    fail(ErrKind::InvariantViolation,
         "ambient action is invalid, witness " + witness_string(*w), *w);
  }
}

}  // namespace

BicatData reconstruct(const ExtendedData& e) {
  GroupAction phi{e.Z, e.Y, e.phi};
  if (auto w = action_violation(phi)) {
    fail(ErrKind::InvariantViolation,
         "phi is not an action by automorphisms, witness " +
             witness_string(*w),
         *w);
  }
  SemidirectProduct x = semidirect_product_unchecked(e.Y, e.Z, phi);
  validate_extended(e, x);

  const int nz = e.Z->order();
  const int nx = x.group->order();
  BicatData d;
  d.X = x.group;
  d.B = e.B;
  d.h.resize(nx);
  d.s.resize(nx);
  d.t.resize(nx);
  d.lambda.resize(nx);
  d.rho.resize(nx);
  for (elem g = 0; g < nx; ++g) {
    const elem y = g / nz;
    const elem z = g % nz;
    d.h[g] = e.d0[z];
    d.s[g] = x.encode(FiniteGroup::id, z);
    d.t[g] = x.encode(FiniteGroup::id, e.Z->op(e.d1[y], z));
    // Unitors act by the section on the Y leg and shift the Z leg by the
    // section's boundary: (y, z) -> (y lambda0(z), z d1(lambda0(z))^-1).
    const elem ly = e.lambda0[z];
    d.lambda[g] =
        x.encode(e.Y->op(y, ly), e.Z->op(z, e.Z->inv(e.d1[ly])));
    const elem ry = e.rho0[z];
    d.rho[g] = x.encode(e.Y->op(y, ry), e.Z->op(z, e.Z->inv(e.d1[ry])));
  }
  d.xi = e.xiX;
  // The rebuilt unitors must again be homomorphisms of the product.
  for (const auto* m : {&d.s, &d.t, &d.lambda, &d.rho}) {
    if (auto w = hom_violation(*d.X, *d.X, *m)) {
      fail(ErrKind::InvariantViolation,
           "rebuilt endomorphism is not a homomorphism, witness " +
               witness_string(*w),
           *w);
    }
  }
  if (auto w = hom_violation(*d.X, *d.B, d.h)) {
    fail(ErrKind::InvariantViolation, "rebuilt h is not a homomorphism");
  }
  return d;
}

namespace {

struct RealizeContext {
  const ExtendedData* e;
  SemidirectProduct x;   // Y x| Z
  DerivedMaps dm;
  int ny, nz, nb;

  elem enc_x(elem y, elem z) const { return x.encode(y, z); }
  elem bnd(elem z) const { return e->d0[z]; }  // codomain shift of a 1-cell
};

RealizeContext make_context(const ExtendedData& e) {
  RealizeContext c;
  c.e = &e;
  GroupAction phi{e.Z, e.Y, e.phi};
  c.x = semidirect_product_unchecked(e.Y, e.Z, phi);
  BicatData d = reconstruct(e);
  c.dm = derive_maps(d);
  c.ny = e.Y->order();
  c.nz = e.Z->order();
  c.nb = e.B->order();
  return c;
}

// Z-part of a 1-cell tensor: z' d1(rho0(z'))^-1 z d1(lambda0(z))^-1.
elem tensor_one_z(const RealizeContext& c, elem zl, elem zr) {
  const auto& e = *c.e;
  const elem a = e.Z->op(zl, e.Z->inv(e.d1[e.rho0[zl]]));
  return e.Z->op(a, e.Z->op(zr, e.Z->inv(e.d1[e.lambda0[zr]])));
}

}  // namespace

RealizedBicategory realize(const ExtendedData& e, AssocVariant variant) {
  RealizeContext c = make_context(e);
  const int ny = c.ny, nz = c.nz, nb = c.nb;

  RealizedBicategory rb;
  rb.n_obj = nb;
  rb.n_one = nz * nb;
  rb.n_two = ny * nz * nb;

  rb.one_dom.resize(rb.n_one);
  rb.one_cod.resize(rb.n_one);
  rb.id_one.resize(nb);
  for (elem z = 0; z < nz; ++z) {
    for (elem b = 0; b < nb; ++b) {
      const int f = one_index(e, z, b);
      rb.one_dom[f] = b;
      rb.one_cod[f] = e.B->op(c.bnd(z), b);
    }
  }
  for (elem b = 0; b < nb; ++b) rb.id_one[b] = one_index(e, 0, b);

  rb.two_src.resize(rb.n_two);
  rb.two_tgt.resize(rb.n_two);
  rb.id_two.resize(rb.n_one);
  for (elem y = 0; y < ny; ++y) {
    for (elem z = 0; z < nz; ++z) {
      for (elem b = 0; b < nb; ++b) {
        const int cell = two_index(e, y, z, b);
        rb.two_src[cell] = one_index(e, z, b);
        rb.two_tgt[cell] = one_index(e, e.Z->op(e.d1[y], z), b);
      }
    }
  }
  for (elem z = 0; z < nz; ++z) {
    for (elem b = 0; b < nb; ++b) {
      rb.id_two[one_index(e, z, b)] = two_index(e, 0, z, b);
    }
  }

  // Vertical composition stacks the Y legs over a shared source 1-cell.
  rb.vcomp.assign(static_cast<size_t>(rb.n_two) * rb.n_two, -1);
  for (int upper = 0; upper < rb.n_two; ++upper) {
    for (int lower = 0; lower < rb.n_two; ++lower) {
      if (rb.two_src[upper] != rb.two_tgt[lower]) continue;
      const elem yu = upper / (nz * nb);
      const elem yl = lower / (nz * nb);
      const elem zl = (lower / nb) % nz;
      const elem b = lower % nb;
      rb.vcomp[static_cast<size_t>(upper) * rb.n_two + lower] =
          two_index(e, e.Y->op(yu, yl), zl, b);
    }
  }

  rb.tensor_one.assign(static_cast<size_t>(rb.n_one) * rb.n_one, -1);
  for (int l = 0; l < rb.n_one; ++l) {
    for (int r = 0; r < rb.n_one; ++r) {
      if (rb.one_dom[l] != rb.one_cod[r]) continue;
      const elem zl = l / nb;
      const elem zr = r / nb;
      rb.tensor_one[static_cast<size_t>(l) * rb.n_one + r] =
          one_index(e, tensor_one_z(c, zl, zr), rb.one_dom[r]);
    }
  }

  // Horizontal composition of 2-cells via the derived maps on Y x| Z.
  rb.tensor_two.assign(static_cast<size_t>(rb.n_two) * rb.n_two, -1);
  for (int l = 0; l < rb.n_two; ++l) {
    const elem yl = l / (nz * nb);
    const elem zl = (l / nb) % nz;
    for (int r = 0; r < rb.n_two; ++r) {
      if (rb.one_dom[rb.two_src[l]] != rb.one_cod[rb.two_src[r]]) continue;
      const elem yr = r / (nz * nb);
      const elem zr = (r / nb) % nz;
      const elem b = r % nb;
      const elem w =
          c.x.group->op(c.dm.u[c.enc_x(yl, zl)], c.dm.v[c.enc_x(yr, zr)]);
      rb.tensor_two[static_cast<size_t>(l) * rb.n_two + r] =
          two_index(e, c.x.x_part(w), c.x.b_part(w), b);
    }
  }

  CoherenceCells cc = coherence_cells(e, variant);
  rb.unitor_l = std::move(cc.unitor_l);
  rb.unitor_r = std::move(cc.unitor_r);
  rb.assoc = std::move(cc.assoc);
  return rb;
}

CoherenceCells coherence_cells(const ExtendedData& e, AssocVariant variant) {
  RealizeContext c = make_context(e);
  const int nz = c.nz, nb = c.nb;
  const int n_one = nz * nb;

  CoherenceCells cc;
  cc.unitor_l.resize(n_one);
  cc.unitor_r.resize(n_one);
  for (elem z = 0; z < nz; ++z) {
    const elem lz = e.Z->op(z, e.Z->inv(e.d1[e.lambda0[z]]));
    const elem rz = e.Z->op(z, e.Z->inv(e.d1[e.rho0[z]]));
    for (elem b = 0; b < nb; ++b) {
      cc.unitor_l[one_index(e, z, b)] = two_index(e, e.lambda0[z], lz, b);
      cc.unitor_r[one_index(e, z, b)] = two_index(e, e.rho0[z], rz, b);
    }
  }

  const bool arith = variant == AssocVariant::Arithmetic;
  const std::vector<elem>& a1 = arith ? c.dm.a1_arith : c.dm.a1;
  const std::vector<elem>& a2 =
      arith ? c.dm.a2_arith
            : (variant == AssocVariant::ViaT ? c.dm.a2_via_t : c.dm.a2_direct);
  const std::vector<elem>& a3 = arith ? c.dm.a3_arith : c.dm.a3;
  cc.assoc.assign(static_cast<size_t>(n_one) * n_one * n_one, -1);
  for (elem z2 = 0; z2 < nz; ++z2) {
    for (elem z1 = 0; z1 < nz; ++z1) {
      for (elem z0 = 0; z0 < nz; ++z0) {
        // Y leg: the derived maps evaluated on the unit-Y fibre, multiplied
        // in Y x| Z.  Middle leg: the right-bracketed 1-cell composite.
        // That the carrier element w itself decomposes over that composite
        // is a checked property of valid data, not assumed here.
        const elem w = c.x.group->op(
            c.x.group->op(a1[c.enc_x(0, z2)], a2[c.enc_x(0, z1)]),
            a3[c.enc_x(0, z0)]);
        const elem zbar = tensor_one_z(c, z2, tensor_one_z(c, z1, z0));
        for (elem b = 0; b < nb; ++b) {
          const int g0 = one_index(e, z0, b);
          const elem b1 = e.B->op(c.bnd(z0), b);
          const int g1 = one_index(e, z1, b1);
          const elem b2 = e.B->op(c.bnd(z1), b1);
          const int g2 = one_index(e, z2, b2);
          cc.assoc[(static_cast<size_t>(g2) * n_one + g1) * n_one + g0] =
              two_index(e, c.x.x_part(w), zbar, b);
        }
      }
    }
  }
  return cc;
}

}  // namespace bicat
