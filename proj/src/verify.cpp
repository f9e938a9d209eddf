#include "bicat/verify.hpp"

#include <algorithm>
#include <utility>

namespace bicat {

bool AxiomReport::ok() const {
  return std::all_of(lines.begin(), lines.end(),
                     [](const AxiomLine& l) { return l.ok; });
}

const AxiomLine* AxiomReport::find(const std::string& name) const {
  for (const auto& l : lines) {
    if (l.name == name) return &l;
  }
  return nullptr;
}

void AxiomReport::merge(AxiomReport other) {
  for (auto& l : other.lines) lines.push_back(std::move(l));
}

namespace {

struct LineBuilder {
  AxiomLine line;

  explicit LineBuilder(std::string name) { line.name = std::move(name); }

  // Records the first failure only; later ones just raise the case count.
  void check(bool ok, std::initializer_list<int64_t> witness) {
    ++line.cases;
    if (!ok && line.ok) {
      line.ok = false;
      line.witness = witness;
    }
  }
  void push_into(AxiomReport& r) { r.lines.push_back(std::move(line)); }
};

bool in_range(int v, int n) { return v >= 0 && v < n; }
bool in_range_or_hole(int v, int n) { return v == -1 || (v >= 0 && v < n); }

// Partial-table lookups that tolerate an undefined (-1) operand, so a hole
// met mid-chain propagates instead of indexing out of range on broken
// tables.  Equality against -1 then simply fails the enclosing check.
int vc_s(const RealizedBicategory& rb, int upper, int lower) {
  if (upper < 0 || lower < 0) return -1;
  return rb.vc(upper, lower);
}
int t1_s(const RealizedBicategory& rb, int l, int r) {
  if (l < 0 || r < 0) return -1;
  return rb.t1(l, r);
}
int t2_s(const RealizedBicategory& rb, int l, int r) {
  if (l < 0 || r < 0) return -1;
  return rb.t2(l, r);
}
int a_s(const RealizedBicategory& rb, int g2, int g1, int g0) {
  if (g2 < 0 || g1 < 0 || g0 < 0) return -1;
  return rb.a_at(g2, g1, g0);
}

// Cells grouped by a boundary table, for walking composable chains.
std::vector<std::vector<int>> group_by(const std::vector<int>& key, int nkeys) {
  std::vector<std::vector<int>> out(nkeys);
  for (int i = 0; i < static_cast<int>(key.size()); ++i) {
    out[key[i]].push_back(i);
  }
  return out;
}

}  // namespace

AxiomReport verify_shape(const RealizedBicategory& rb) {
  AxiomReport r;
  const size_t n1 = rb.n_one, n2 = rb.n_two;

  LineBuilder shapes("table-shapes");
  shapes.check(rb.n_obj >= 0 && rb.n_one >= 0 && rb.n_two >= 0, {0});
  shapes.check(rb.one_dom.size() == n1 && rb.one_cod.size() == n1, {1});
  shapes.check(rb.two_src.size() == n2 && rb.two_tgt.size() == n2, {2});
  shapes.check(rb.id_one.size() == static_cast<size_t>(rb.n_obj), {3});
  shapes.check(rb.id_two.size() == n1, {4});
  shapes.check(rb.vcomp.size() == n2 * n2, {5});
  shapes.check(rb.tensor_one.size() == n1 * n1, {6});
  shapes.check(rb.tensor_two.size() == n2 * n2, {7});
  shapes.check(rb.unitor_l.size() == n1 && rb.unitor_r.size() == n1, {8});
  shapes.check(rb.assoc.size() == n1 * n1 * n1, {9});
  const bool shapes_ok = shapes.line.ok;
  shapes.push_into(r);
  if (!shapes_ok) return r;  // nothing below can index safely

  LineBuilder ranges("index-ranges");
  for (int f = 0; f < rb.n_one; ++f) {
    ranges.check(in_range(rb.one_dom[f], rb.n_obj) &&
                     in_range(rb.one_cod[f], rb.n_obj),
                 {0, f});
  }
  for (int a = 0; a < rb.n_two; ++a) {
    ranges.check(in_range(rb.two_src[a], rb.n_one) &&
                     in_range(rb.two_tgt[a], rb.n_one),
                 {1, a});
  }
  for (int o = 0; o < rb.n_obj; ++o) {
    ranges.check(in_range(rb.id_one[o], rb.n_one), {2, o});
  }
  for (int f = 0; f < rb.n_one; ++f) {
    ranges.check(in_range(rb.id_two[f], rb.n_two), {3, f});
    ranges.check(in_range(rb.unitor_l[f], rb.n_two) &&
                     in_range(rb.unitor_r[f], rb.n_two),
                 {4, f});
  }
  for (size_t i = 0; i < rb.vcomp.size(); ++i) {
    ranges.check(in_range_or_hole(rb.vcomp[i], rb.n_two),
                 {5, static_cast<int64_t>(i)});
  }
  for (size_t i = 0; i < rb.tensor_one.size(); ++i) {
    ranges.check(in_range_or_hole(rb.tensor_one[i], rb.n_one),
                 {6, static_cast<int64_t>(i)});
  }
  for (size_t i = 0; i < rb.tensor_two.size(); ++i) {
    ranges.check(in_range_or_hole(rb.tensor_two[i], rb.n_two),
                 {7, static_cast<int64_t>(i)});
  }
  for (size_t i = 0; i < rb.assoc.size(); ++i) {
    ranges.check(in_range_or_hole(rb.assoc[i], rb.n_two),
                 {8, static_cast<int64_t>(i)});
  }
  const bool ranges_ok = ranges.line.ok;
  ranges.push_into(r);
  if (!ranges_ok) return r;

  LineBuilder idb("identity-boundaries");
  for (int o = 0; o < rb.n_obj; ++o) {
    idb.check(rb.one_dom[rb.id_one[o]] == o && rb.one_cod[rb.id_one[o]] == o,
              {0, o});
  }
  for (int f = 0; f < rb.n_one; ++f) {
    idb.check(rb.two_src[rb.id_two[f]] == f && rb.two_tgt[rb.id_two[f]] == f,
              {1, f});
  }
  idb.push_into(r);

  LineBuilder vdef("vcomp-defined-iff-composable");
  for (int upper = 0; upper < rb.n_two; ++upper) {
    for (int lower = 0; lower < rb.n_two; ++lower) {
      const bool composable = rb.two_src[upper] == rb.two_tgt[lower];
      vdef.check((rb.vc(upper, lower) != -1) == composable, {upper, lower});
    }
  }
  vdef.push_into(r);

  LineBuilder t1def("tensor-one-defined-iff-composable");
  for (int l = 0; l < rb.n_one; ++l) {
    for (int rr = 0; rr < rb.n_one; ++rr) {
      const bool composable = rb.one_dom[l] == rb.one_cod[rr];
      t1def.check((rb.t1(l, rr) != -1) == composable, {l, rr});
    }
  }
  t1def.push_into(r);

  LineBuilder t2def("tensor-two-defined-iff-composable");
  for (int l = 0; l < rb.n_two; ++l) {
    for (int rr = 0; rr < rb.n_two; ++rr) {
      const bool composable =
          rb.one_dom[rb.two_src[l]] == rb.one_cod[rb.two_src[rr]];
      t2def.check((rb.t2(l, rr) != -1) == composable, {l, rr});
    }
  }
  t2def.push_into(r);

  LineBuilder adef("assoc-defined-iff-composable");
  for (int g2 = 0; g2 < rb.n_one; ++g2) {
    for (int g1 = 0; g1 < rb.n_one; ++g1) {
      const bool upper = rb.one_dom[g2] == rb.one_cod[g1];
      for (int g0 = 0; g0 < rb.n_one; ++g0) {
        const bool composable = upper && rb.one_dom[g1] == rb.one_cod[g0];
        adef.check((rb.a_at(g2, g1, g0) != -1) == composable, {g2, g1, g0});
      }
    }
  }
  adef.push_into(r);
  return r;
}

AxiomReport verify_vertical(const RealizedBicategory& rb) {
  AxiomReport r;
  const auto by_src = group_by(rb.two_src, rb.n_one);

  LineBuilder bnd("vcomp-boundaries");
  LineBuilder assoc("vcomp-associative");
  LineBuilder units("vcomp-units");
  LineBuilder inv("vcomp-inverses");

  for (int a = 0; a < rb.n_two; ++a) {
    units.check(rb.vc(rb.id_two[rb.two_tgt[a]], a) == a, {0, a});
    units.check(rb.vc(a, rb.id_two[rb.two_src[a]]) == a, {1, a});

    bool found_inverse = false;
    for (int b : by_src[rb.two_tgt[a]]) {
      const int ba = rb.vc(b, a);
      bnd.check(ba != -1 && rb.two_src[ba] == rb.two_src[a] &&
                    rb.two_tgt[ba] == rb.two_tgt[b],
                {b, a});
      if (ba == rb.id_two[rb.two_src[a]] &&
          rb.vc(a, b) == rb.id_two[rb.two_tgt[a]]) {
        found_inverse = true;
      }
      for (int c : by_src[rb.two_tgt[b]]) {
        assoc.check(vc_s(rb, c, ba) == vc_s(rb, rb.vc(c, b), a), {c, b, a});
      }
    }
    inv.check(found_inverse, {a});
  }
  bnd.push_into(r);
  assoc.push_into(r);
  units.push_into(r);
  inv.push_into(r);
  return r;
}

AxiomReport verify_interchange(const RealizedBicategory& rb) {
  AxiomReport r;

  LineBuilder t1b("tensor-one-boundaries");
  for (int l = 0; l < rb.n_one; ++l) {
    for (int rr = 0; rr < rb.n_one; ++rr) {
      const int lf = rb.t1(l, rr);
      if (lf == -1) continue;
      t1b.check(rb.one_dom[lf] == rb.one_dom[rr] &&
                    rb.one_cod[lf] == rb.one_cod[l],
                {l, rr});
    }
  }
  t1b.push_into(r);

  LineBuilder t2b("tensor-two-boundaries");
  LineBuilder tid("tensor-identities");
  for (int l = 0; l < rb.n_two; ++l) {
    for (int rr = 0; rr < rb.n_two; ++rr) {
      const int cell = rb.t2(l, rr);
      if (cell == -1) continue;
      t2b.check(rb.two_src[cell] ==
                        t1_s(rb, rb.two_src[l], rb.two_src[rr]) &&
                    rb.two_tgt[cell] ==
                        t1_s(rb, rb.two_tgt[l], rb.two_tgt[rr]),
                {l, rr});
    }
  }
  for (int f = 0; f < rb.n_one; ++f) {
    for (int g = 0; g < rb.n_one; ++g) {
      const int fg = rb.t1(f, g);
      if (fg == -1) continue;
      tid.check(rb.t2(rb.id_two[f], rb.id_two[g]) == rb.id_two[fg], {f, g});
    }
  }
  t2b.push_into(r);
  tid.push_into(r);

  // Interchange: both orders of combining two vertical chains agree.
  LineBuilder inter("interchange");
  std::vector<std::pair<int, int>> vpairs;  // (upper, lower), composable
  for (int upper = 0; upper < rb.n_two; ++upper) {
    for (int lower = 0; lower < rb.n_two; ++lower) {
      if (rb.vc(upper, lower) != -1) vpairs.emplace_back(upper, lower);
    }
  }
  for (const auto& [b, a] : vpairs) {
    for (const auto& [bp, ap] : vpairs) {
      if (rb.t2(a, ap) == -1) continue;  // not horizontally composable
      const int lhs = t2_s(rb, rb.vc(b, a), rb.vc(bp, ap));
      const int rhs = vc_s(rb, rb.t2(b, bp), rb.t2(a, ap));
      inter.check(lhs != -1 && lhs == rhs, {b, a, bp, ap});
    }
  }
  inter.push_into(r);
  return r;
}

AxiomReport verify_coherence(const RealizedBicategory& rb) {
  AxiomReport r;

  LineBuilder ulb("unitor-l-boundaries");
  LineBuilder urb("unitor-r-boundaries");
  for (int f = 0; f < rb.n_one; ++f) {
    const int lf = rb.unitor_l[f];
    ulb.check(rb.two_src[lf] == rb.t1(rb.id_one[rb.one_cod[f]], f) &&
                  rb.two_tgt[lf] == f,
              {f});
    const int rf = rb.unitor_r[f];
    urb.check(rb.two_src[rf] == rb.t1(f, rb.id_one[rb.one_dom[f]]) &&
                  rb.two_tgt[rf] == f,
              {f});
  }
  ulb.push_into(r);
  urb.push_into(r);

  LineBuilder uln("unitor-l-natural");
  LineBuilder urn("unitor-r-natural");
  for (int a = 0; a < rb.n_two; ++a) {
    const int f = rb.two_src[a];
    const int fp = rb.two_tgt[a];
    const int idc = rb.id_two[rb.id_one[rb.one_cod[f]]];
    uln.check(vc_s(rb, rb.unitor_l[fp], rb.t2(idc, a)) ==
                  vc_s(rb, a, rb.unitor_l[f]),
              {a});
    const int idd = rb.id_two[rb.id_one[rb.one_dom[f]]];
    urn.check(vc_s(rb, rb.unitor_r[fp], rb.t2(a, idd)) ==
                  vc_s(rb, a, rb.unitor_r[f]),
              {a});
  }
  uln.push_into(r);
  urn.push_into(r);

  LineBuilder uid("unit-tensor-idempotent");
  for (int o = 0; o < rb.n_obj; ++o) {
    uid.check(rb.t1(rb.id_one[o], rb.id_one[o]) == rb.id_one[o], {o});
  }
  uid.push_into(r);

  const auto by_dom = group_by(rb.one_dom, rb.n_obj);

  LineBuilder ab("assoc-boundaries");
  LineBuilder an2("assoc-natural-left");
  LineBuilder an1("assoc-natural-middle");
  LineBuilder an0("assoc-natural-right");
  LineBuilder tri("triangle");
  for (int g0 = 0; g0 < rb.n_one; ++g0) {
    for (int g1 : by_dom[rb.one_cod[g0]]) {
      for (int g2 : by_dom[rb.one_cod[g1]]) {
        const int cell = rb.a_at(g2, g1, g0);
        ab.check(cell != -1 &&
                     rb.two_src[cell] == t1_s(rb, g2, rb.t1(g1, g0)) &&
                     rb.two_tgt[cell] == t1_s(rb, rb.t1(g2, g1), g0),
                 {g2, g1, g0});
        const int i2 = rb.id_two[g2], i1 = rb.id_two[g1], i0 = rb.id_two[g0];
        // Naturality, one slot at a time with identities elsewhere.
        for (int al = 0; al < rb.n_two; ++al) {
          if (rb.two_src[al] == g2) {
            an2.check(vc_s(rb, a_s(rb, rb.two_tgt[al], g1, g0),
                           t2_s(rb, al, rb.t2(i1, i0))) ==
                          vc_s(rb, t2_s(rb, rb.t2(al, i1), i0), cell),
                      {al, g2, g1, g0});
          }
          if (rb.two_src[al] == g1) {
            an1.check(vc_s(rb, a_s(rb, g2, rb.two_tgt[al], g0),
                           t2_s(rb, i2, rb.t2(al, i0))) ==
                          vc_s(rb, t2_s(rb, rb.t2(i2, al), i0), cell),
                      {al, g2, g1, g0});
          }
          if (rb.two_src[al] == g0) {
            an0.check(vc_s(rb, a_s(rb, g2, g1, rb.two_tgt[al]),
                           t2_s(rb, i2, rb.t2(i1, al))) ==
                          vc_s(rb, t2_s(rb, rb.t2(i2, i1), al), cell),
                      {al, g2, g1, g0});
          }
        }
      }
      // Triangle over the identity of the shared object.
      const int m = rb.one_cod[g0];
      for (int g : by_dom[m]) {
        tri.check(vc_s(rb, rb.t2(rb.unitor_r[g], rb.id_two[g0]),
                       rb.a_at(g, rb.id_one[m], g0)) ==
                      rb.t2(rb.id_two[g], rb.unitor_l[g0]),
                  {g, g0});
      }
    }
  }
  ab.push_into(r);
  an2.push_into(r);
  an1.push_into(r);
  an0.push_into(r);
  tri.push_into(r);

  LineBuilder pent("pentagon");
  for (int f = 0; f < rb.n_one; ++f) {
    for (int g : by_dom[rb.one_cod[f]]) {
      const int gf = rb.t1(g, f);
      for (int h : by_dom[rb.one_cod[g]]) {
        const int hg = rb.t1(h, g);
        for (int k : by_dom[rb.one_cod[h]]) {
          const int kh = rb.t1(k, h);
          const int lhs = vc_s(rb, a_s(rb, kh, g, f), a_s(rb, k, h, gf));
          const int rhs = vc_s(
              rb, t2_s(rb, a_s(rb, k, h, g), rb.id_two[f]),
              vc_s(rb, a_s(rb, k, hg, f),
                   t2_s(rb, rb.id_two[k], a_s(rb, h, g, f))));
          pent.check(lhs != -1 && lhs == rhs, {k, h, g, f});
        }
      }
    }
  }
  pent.push_into(r);
  return r;
}

AxiomReport verify_bicategory(const RealizedBicategory& rb) {
  AxiomReport r = verify_shape(rb);
  if (!r.ok()) return r;
  r.merge(verify_vertical(rb));
  r.merge(verify_interchange(rb));
  r.merge(verify_coherence(rb));
  return r;
}

}  // namespace bicat
