#include "bicat/verify.hpp"

#include <string>
#include <vector>

#include "doctest.h"

#include "bicat/groups_zoo.hpp"

using namespace bicat;

namespace {

BicatData conjugation_data(GroupPtr g) {
  const int n = g->order();
  BicatData d;
  d.X = g;
  d.B = g;
  d.h.resize(n);
  for (elem i = 0; i < n; ++i) d.h[i] = i;
  d.s = d.t = d.lambda = d.rho = d.h;
  d.xi.resize(static_cast<size_t>(n) * n);
  for (elem b = 0; b < n; ++b)
    for (elem x = 0; x < n; ++x) d.xi[b * n + x] = g->conjugate(b, x);
  return d;
}

RealizedBicategory conjugation_realized(GroupPtr g) {
  return realize(decompose(conjugation_data(g)).ext);
}

const char* kAllLines[] = {"table-shapes",
                           "index-ranges",
                           "identity-boundaries",
                           "vcomp-defined-iff-composable",
                           "tensor-one-defined-iff-composable",
                           "tensor-two-defined-iff-composable",
                           "assoc-defined-iff-composable",
                           "vcomp-boundaries",
                           "vcomp-associative",
                           "vcomp-units",
                           "vcomp-inverses",
                           "tensor-one-boundaries",
                           "tensor-two-boundaries",
                           "tensor-identities",
                           "interchange",
                           "unitor-l-boundaries",
                           "unitor-r-boundaries",
                           "unitor-l-natural",
                           "unitor-r-natural",
                           "unit-tensor-idempotent",
                           "assoc-boundaries",
                           "assoc-natural-left",
                           "assoc-natural-middle",
                           "assoc-natural-right",
                           "triangle",
                           "pentagon"};

}  // namespace

TEST_CASE("conjugation realization passes every axiom line") {
  const AxiomReport r = verify_bicategory(conjugation_realized(sym3()));
  CHECK(r.ok());
  for (const char* name : kAllLines) {
    const AxiomLine* line = r.find(name);
    REQUIRE(line != nullptr);
    CHECK(line->ok);
    CHECK(line->witness.empty());
    CHECK(line->cases > 0);
  }
  // One line per axiom, no extras.
  CHECK(r.lines.size() == sizeof(kAllLines) / sizeof(kAllLines[0]));
  // The pentagon ranges over composable quadruples: 6^4 of the 1-cell
  // z legs and a shared base point, 7776 on this fixture.
  CHECK(r.find("pentagon")->cases == 7776);
}

TEST_CASE("the trivial realization verifies") {
  const AxiomReport r = verify_bicategory(conjugation_realized(trivial_group()));
  CHECK(r.ok());
}

TEST_CASE("shape failures stop the remaining passes") {
  RealizedBicategory rb = conjugation_realized(cyclic(2));
  rb.unitor_l.pop_back();
  const AxiomReport r = verify_bicategory(rb);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.find("table-shapes")->ok);
  CHECK(r.find("pentagon") == nullptr);
  CHECK(r.find("vcomp-boundaries") == nullptr);
}

TEST_CASE("out-of-range cell indices are caught before use") {
  RealizedBicategory rb = conjugation_realized(cyclic(2));
  rb.id_two[0] = rb.n_two;  // one past the end
  const AxiomReport r = verify_bicategory(rb);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.find("index-ranges")->ok);
  CHECK(r.find("vcomp-boundaries") == nullptr);
}

TEST_CASE("targeted breaks fail the matching named line") {
  GroupPtr s3 = sym3();

  SUBCASE("vcomp entry with mismatched boundary") {
    RealizedBicategory rb = conjugation_realized(s3);
    // Y is trivial, so every defined vcomp entry is on the diagonal; point
    // one at a 2-cell over a different 1-cell.
    const int a = rb.vc(0, 0);
    REQUIRE(a >= 0);
    rb.vcomp[0] = (a + 1) % rb.n_two;
    const AxiomReport r = verify_bicategory(rb);
    CHECK_FALSE(r.ok());
    CHECK(r.find("table-shapes")->ok);
    CHECK_FALSE(r.find("vcomp-boundaries")->ok);
  }

  SUBCASE("undefined entry where 2-cells compose") {
    RealizedBicategory rb = conjugation_realized(s3);
    REQUIRE(rb.vc(0, 0) >= 0);
    rb.vcomp[0] = -1;
    const AxiomReport r = verify_bicategory(rb);
    CHECK_FALSE(r.find("vcomp-defined-iff-composable")->ok);
    CHECK(r.find("vcomp-defined-iff-composable")->witness ==
          Witness{0, 0});
  }

  SUBCASE("assoc removed where 1-cells compose") {
    RealizedBicategory rb = conjugation_realized(s3);
    int idx = -1;
    for (size_t i = 0; i < rb.assoc.size(); ++i)
      if (rb.assoc[i] >= 0) {
        idx = static_cast<int>(i);
        break;
      }
    REQUIRE(idx >= 0);
    rb.assoc[idx] = -1;
    const AxiomReport r = verify_bicategory(rb);
    CHECK_FALSE(r.find("assoc-defined-iff-composable")->ok);
  }

  SUBCASE("unitor with the wrong source") {
    RealizedBicategory rb = conjugation_realized(s3);
    // Point the left unitor of 1-cell 0 at a 2-cell over another 1-cell.
    rb.unitor_l[0] = rb.id_two[1];
    const AxiomReport r = verify_bicategory(rb);
    CHECK_FALSE(r.find("unitor-l-boundaries")->ok);
  }

  SUBCASE("identity 2-cell on the wrong 1-cell") {
    RealizedBicategory rb = conjugation_realized(s3);
    rb.id_two[0] = rb.id_two[1];
    const AxiomReport r = verify_bicategory(rb);
    CHECK_FALSE(r.find("identity-boundaries")->ok);
  }
}

TEST_CASE("coherence separates the reassociator assemblies") {
  // Valid structure on which the word-formula components differ from the
  // arithmetic ones by an extra rho in the middle (all five (viii) maps are
  // homomorphisms, so the condition reports cannot tell them apart).  Only
  // the arithmetic assembly satisfies the pentagon.
  BicatData d;
  d.X = klein4();
  d.B = trivial_group();
  d.h.assign(4, 0);
  d.s = d.t = {0, 0, 2, 2};
  d.lambda = {0, 1, 2, 3};
  d.rho = {0, 1, 3, 2};
  d.xi = {0, 1, 2, 3};
  REQUIRE(full_check(d).overall());
  const ExtendedData e = decompose(d).ext;

  CHECK(verify_bicategory(realize(e)).ok());

  for (AssocVariant v : {AssocVariant::ViaT, AssocVariant::Direct}) {
    const AxiomReport r = verify_bicategory(realize(e, v));
    CHECK_FALSE(r.ok());
    // Everything up to and including naturality and the triangle still
    // holds; the failure is exactly the pentagon.
    for (const AxiomLine& l : r.lines)
      CHECK(l.ok == (l.name != "pentagon"));
    CHECK(r.find("pentagon")->witness == Witness{0, 1, 0, 0});
  }
}

TEST_CASE("report find and merge") {
  AxiomReport a;
  a.lines.push_back({"alpha", true, {}, 3});
  AxiomReport b;
  b.lines.push_back({"beta", false, {7}, 9});
  a.merge(std::move(b));
  REQUIRE(a.lines.size() == 2);
  CHECK(a.find("alpha") != nullptr);
  CHECK(a.find("beta") != nullptr);
  CHECK(a.find("gamma") == nullptr);
  CHECK_FALSE(a.ok());
  CHECK(a.find("beta")->witness == Witness{7});
}
