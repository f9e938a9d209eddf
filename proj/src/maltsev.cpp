// Triples (A, s, t), property (P1), the groupoid correspondence, the 2-cell
// calculus between triple morphisms, and the pseudocategory composition.

#include "bicat/maltsev.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <unordered_set>
#include <utility>

namespace bicat {

namespace {

bool table_shaped(const FiniteGroup& dom, const FiniteGroup& cod,
                  const std::vector<elem>& f) {
  if (static_cast<int>(f.size()) != dom.order()) return false;
  for (elem v : f)
    if (v < 0 || v >= cod.order()) return false;
  return true;
}

void require_triple(const GpdTriple& g, const char* who) {
  if (!g.A)
    fail(ErrKind::PreconditionFailed,
         std::string(who) + ": triple has no carrier group");
  if (auto w = triple_violation(g))
    fail(ErrKind::PreconditionFailed,
         std::string(who) + ": (A, s, t) is not a triple on " + g.A->name(),
         *w);
}

bool same_triple(const GpdTriple& a, const GpdTriple& b) {
  return a.A == b.A && a.s == b.s && a.t == b.t;
}

// Complete homomorphism check for a map f defined on a subgroup H of a
// product group, with H given as its sorted encoded element list and the
// product structure as callbacks on encodings.  The identity must encode
// as 0.  Exhaustive over all pairs while |H|^2 stays within budget;
// otherwise a generating sequence of H is extracted by greedy closure and
// only generator*element products are checked.  That still decides the
// property: every element is a word in the generators and their inverses,
// and f(g w) = f(g) f(w) for each such letter g peels words apart one
// letter at a time, so multiplicativity on letters plus f(id) = id forces
// it everywhere.  Returns the first offending pair in scan order.
constexpr int64_t kExhaustivePairBudget = 20'000'000;

std::optional<std::array<int64_t, 2>> encoded_hom_violation(
    const std::vector<int64_t>& elems,
    const std::function<int64_t(int64_t, int64_t)>& mul,
    const std::function<int64_t(int64_t)>& inv,
    const std::function<elem(int64_t)>& f, const FiniteGroup& target) {
  if (elems.empty() || elems.front() != 0)
    fail(ErrKind::PreconditionFailed,
         "encoded subgroup does not start at the identity");
  if (f(0) != FiniteGroup::id) return std::array<int64_t, 2>{0, 0};

  const int64_t h = static_cast<int64_t>(elems.size());
  if (h * h <= kExhaustivePairBudget) {
    for (int64_t g : elems)
      for (int64_t w : elems)
        if (f(mul(g, w)) != target.op(f(g), f(w)))
          return std::array<int64_t, 2>{g, w};
    return std::nullopt;
  }

  std::vector<int64_t> gens;
  std::unordered_set<int64_t> reached;
  auto closure = [&]() {
    reached.clear();
    reached.insert(0);
    std::vector<int64_t> letters;
    for (int64_t g : gens) {
      letters.push_back(g);
      letters.push_back(inv(g));
    }
    std::vector<int64_t> queue{0};
    while (!queue.empty()) {
      int64_t w = queue.back();
      queue.pop_back();
      for (int64_t l : letters) {
        int64_t x = mul(w, l);
        if (reached.insert(x).second) queue.push_back(x);
      }
    }
  };
  closure();
  size_t scan = 0;
  while (reached.size() < elems.size()) {
    while (scan < elems.size() && reached.count(elems[scan])) ++scan;
    gens.push_back(elems[scan]);
    closure();
  }

  std::vector<int64_t> letters;
  for (int64_t g : gens) {
    letters.push_back(g);
    letters.push_back(inv(g));
  }
  for (int64_t g : letters)
    for (int64_t w : elems)
      if (f(mul(g, w)) != target.op(f(g), f(w)))
        return std::array<int64_t, 2>{g, w};
  return std::nullopt;
}

}  // namespace

std::optional<Witness> triple_violation(const GpdTriple& g) {
  // Shape problems report as {4, table} (size) / {5, table, x} (range),
  // then the laws as documented in the header.
  if (!g.A) return Witness{4, 0};
  const int n = g.A->order();
  if (static_cast<int>(g.s.size()) != n) return Witness{4, 0};
  if (static_cast<int>(g.t.size()) != n) return Witness{4, 1};
  for (elem x = 0; x < n; ++x)
    if (g.s[x] < 0 || g.s[x] >= n) return Witness{5, 0, x};
  for (elem x = 0; x < n; ++x)
    if (g.t[x] < 0 || g.t[x] >= n) return Witness{5, 1, x};
  if (auto w = hom_violation(*g.A, *g.A, g.s))
    return Witness{0, (*w)[0], (*w)[1]};
  if (auto w = hom_violation(*g.A, *g.A, g.t))
    return Witness{1, (*w)[0], (*w)[1]};
  for (elem x = 0; x < n; ++x)
    if (g.s[g.t[x]] != g.t[x]) return Witness{2, x};
  for (elem x = 0; x < n; ++x)
    if (g.t[g.s[x]] != g.s[x]) return Witness{3, x};
  return std::nullopt;
}

GpdTriple make_triple(GroupPtr a, std::vector<elem> s, std::vector<elem> t) {
  GpdTriple g{std::move(a), std::move(s), std::move(t)};
  require_triple(g, "make_triple");
  return g;
}

std::optional<Witness> triple_morphism_violation(const GpdTriple& from,
                                                 const GpdTriple& to,
                                                 const std::vector<elem>& f) {
  if (!from.A || !to.A) return Witness{3};
  if (!table_shaped(*from.A, *to.A, f)) return Witness{3};
  if (auto w = hom_violation(*from.A, *to.A, f))
    return Witness{0, (*w)[0], (*w)[1]};
  const int n = from.A->order();
  for (elem x = 0; x < n; ++x)
    if (f[from.s[x]] != to.s[f[x]]) return Witness{1, x};
  for (elem x = 0; x < n; ++x)
    if (f[from.t[x]] != to.t[f[x]]) return Witness{2, x};
  return std::nullopt;
}

bool check_P1(const GpdTriple& g, Witness* witness) {
  require_triple(g, "check_P1");
  const FiniteGroup& A = *g.A;
  const int64_t n = A.order();

  // R(s,t) in ascending encoded order (a n + b) n + c, assembled from
  // fibers: b runs over the s-fiber of s(a), c over the t-fiber of t(b).
  // Subgrouphood is automatic because s and t are homomorphisms.
  std::vector<std::vector<elem>> s_fiber(n), t_fiber(n);
  for (elem x = 0; x < n; ++x) {
    s_fiber[g.s[x]].push_back(x);
    t_fiber[g.t[x]].push_back(x);
  }
  std::vector<int64_t> elems;
  for (elem a = 0; a < n; ++a)
    for (elem b : s_fiber[g.s[a]])
      for (elem c : t_fiber[g.t[b]]) elems.push_back((a * n + b) * n + c);

  auto mul = [&](int64_t u, int64_t v) {
    return (static_cast<int64_t>(
                A.op(static_cast<elem>(u / (n * n)), static_cast<elem>(v / (n * n)))) *
                n +
            A.op(static_cast<elem>(u / n % n), static_cast<elem>(v / n % n))) *
               n +
           A.op(static_cast<elem>(u % n), static_cast<elem>(v % n));
  };
  auto inv = [&](int64_t u) {
    return (static_cast<int64_t>(A.inv(static_cast<elem>(u / (n * n)))) * n +
            A.inv(static_cast<elem>(u / n % n))) *
               n +
           A.inv(static_cast<elem>(u % n));
  };
  auto f = [&](int64_t u) {
    return A.p(static_cast<elem>(u / (n * n)), static_cast<elem>(u / n % n),
               static_cast<elem>(u % n));
  };

  auto bad = encoded_hom_violation(elems, mul, inv, f, A);
  if (!bad) return true;
  if (witness) {
    auto [u, v] = *bad;
    *witness = {u / (n * n), u / n % n, u % n, v / (n * n), v / n % n, v % n};
  }
  return false;
}

bool check_P1prime(const GpdTriple& g, Witness* witness) {
  require_triple(g, "check_P1prime");
  const FiniteGroup& A = *g.A;
  const int n = A.order();
  std::vector<elem> i(n);
  for (elem x = 0; x < n; ++x) i[x] = A.p(g.s[x], x, g.t[x]);
  if (auto w = hom_violation(A, A, i)) {
    if (witness) *witness = *w;
    return false;
  }
  return true;
}

std::optional<Witness> groupoid_violation(const InternalGroupoidGrp& g) {
  // Checks run in a fixed order; the witness is the first failure found,
  // led by a code naming the law:
  //   0 shape   1/2 d/c not hom            3/4 image of d/c outside C0
  //   5/6 d/c not identity on C0           7 C0 malformed
  //   8 product group mismatch             9 C2 is not the composable pairs
  //  10 m defined off/missing on C2       11 m out of range
  //  12 m not a homomorphism on C2        13/14 boundary of a composite
  //  15/16 unit laws                      17 associativity
  //  18 i not a homomorphism              19/20 boundaries of i
  //  21/22 inverse laws
  if (!g.C1) return Witness{0};
  const FiniteGroup& A = *g.C1;
  const int n = A.order();
  if (!table_shaped(A, A, g.d) || !table_shaped(A, A, g.c) ||
      !table_shaped(A, A, g.i) ||
      g.m.size() != static_cast<size_t>(n) * n)
    return Witness{0};
  for (elem v : g.m)
    if (v < -1 || v >= n) return Witness{11};

  if (auto w = hom_violation(A, A, g.d)) return Witness{1, (*w)[0], (*w)[1]};
  if (auto w = hom_violation(A, A, g.c)) return Witness{2, (*w)[0], (*w)[1]};

  if (g.C0.parent != g.C1 || g.C0.elements.empty() ||
      g.C0.elements.front() != 0 ||
      !std::is_sorted(g.C0.elements.begin(), g.C0.elements.end()))
    return Witness{7};
  for (elem x = 0; x < n; ++x)
    if (!g.C0.contains(g.d[x])) return Witness{3, x};
  for (elem x = 0; x < n; ++x)
    if (!g.C0.contains(g.c[x])) return Witness{4, x};
  for (elem a : g.C0.elements)
    if (g.d[a] != a) return Witness{5, a};
  for (elem a : g.C0.elements)
    if (g.c[a] != a) return Witness{6, a};

  if (!g.product || g.product->order() != n * n || g.C2.parent != g.product)
    return Witness{8};
  std::vector<int64_t> pairs;
  for (elem x1 = 0; x1 < n; ++x1)
    for (elem x2 = 0; x2 < n; ++x2)
      if (g.d[x1] == g.c[x2]) pairs.push_back(static_cast<int64_t>(x1) * n + x2);
  if (pairs.size() != g.C2.elements.size()) return Witness{9, -1};
  for (size_t k = 0; k < pairs.size(); ++k)
    if (pairs[k] != g.C2.elements[k]) return Witness{9, pairs[k]};

  for (elem x1 = 0; x1 < n; ++x1)
    for (elem x2 = 0; x2 < n; ++x2) {
      const bool composable = g.d[x1] == g.c[x2];
      if ((g.m_at(x1, x2) >= 0) != composable) return Witness{10, x1, x2};
    }

  auto mul = [&](int64_t u, int64_t v) {
    return static_cast<int64_t>(A.op(static_cast<elem>(u / n),
                                     static_cast<elem>(v / n))) *
               n +
           A.op(static_cast<elem>(u % n), static_cast<elem>(v % n));
  };
  auto inv = [&](int64_t u) {
    return static_cast<int64_t>(A.inv(static_cast<elem>(u / n))) * n +
           A.inv(static_cast<elem>(u % n));
  };
  auto f = [&](int64_t u) { return g.m[u]; };
  if (auto bad = encoded_hom_violation(pairs, mul, inv, f, A)) {
    auto [u, v] = *bad;
    return Witness{12, u / n, u % n, v / n, v % n};
  }

  for (int64_t pr : pairs) {
    const elem x1 = static_cast<elem>(pr / n), x2 = static_cast<elem>(pr % n);
    const elem y = g.m_at(x1, x2);
    if (g.d[y] != g.d[x2]) return Witness{13, x1, x2};
    if (g.c[y] != g.c[x1]) return Witness{14, x1, x2};
  }
  for (elem x = 0; x < n; ++x)
    if (g.m_at(x, g.d[x]) != x) return Witness{15, x};
  for (elem x = 0; x < n; ++x)
    if (g.m_at(g.c[x], x) != x) return Witness{16, x};

  // Associativity over composable chains, walked through the d/c fibers.
  std::vector<std::vector<elem>> d_fiber(n), c_fiber(n);
  for (elem x = 0; x < n; ++x) {
    d_fiber[g.d[x]].push_back(x);
    c_fiber[g.c[x]].push_back(x);
  }
  for (elem x2 = 0; x2 < n; ++x2)
    for (elem x1 : d_fiber[g.c[x2]])
      for (elem x3 : c_fiber[g.d[x2]]) {
        const elem a = g.m_at(x1, x2), b = g.m_at(x2, x3);
        if (a < 0 || b < 0 || g.m_at(a, x3) != g.m_at(x1, b))
          return Witness{17, x1, x2, x3};
      }

  if (auto w = hom_violation(A, A, g.i)) return Witness{18, (*w)[0], (*w)[1]};
  for (elem x = 0; x < n; ++x)
    if (g.d[g.i[x]] != g.c[x]) return Witness{19, x};
  for (elem x = 0; x < n; ++x)
    if (g.c[g.i[x]] != g.d[x]) return Witness{20, x};
  for (elem x = 0; x < n; ++x)
    if (g.m_at(g.i[x], x) != g.d[x]) return Witness{21, x};
  for (elem x = 0; x < n; ++x)
    if (g.m_at(x, g.i[x]) != g.c[x]) return Witness{22, x};
  return std::nullopt;
}

InternalGroupoidGrp groupoid_from_triple(const GpdTriple& g) {
  require_triple(g, "groupoid_from_triple");
  Witness w;
  if (!check_P1(g, &w))
    fail(ErrKind::P1Fails,
         "p is not a homomorphism on R(s,t) over " + g.A->name(), w);

  const FiniteGroup& A = *g.A;
  const int n = A.order();
  InternalGroupoidGrp out;
  out.C1 = g.A;
  std::vector<elem> fixed;
  for (elem x = 0; x < n; ++x)
    if (g.s[x] == x) fixed.push_back(x);
  out.C0 = Subgroup{g.A, std::move(fixed)};
  out.d = g.s;
  out.c = g.t;
  out.product = direct_product(g.A, g.A).group;
  std::vector<elem> pairs;
  out.m.assign(static_cast<size_t>(n) * n, -1);
  for (elem x1 = 0; x1 < n; ++x1)
    for (elem x2 = 0; x2 < n; ++x2)
      if (g.s[x1] == g.t[x2]) {
        pairs.push_back(static_cast<elem>(x1 * n + x2));
        out.m[static_cast<size_t>(x1) * n + x2] = A.p(x1, g.s[x1], x2);
      }
  out.C2 = Subgroup{out.product, std::move(pairs)};
  out.i.resize(n);
  for (elem x = 0; x < n; ++x) out.i[x] = A.p(g.s[x], x, g.t[x]);

  if (auto v = groupoid_violation(out))
    fail(ErrKind::InvariantViolation,
         "groupoid built from a (P1) triple fails its own laws", *v);
  return out;
}

GpdTriple triple_from_groupoid(const InternalGroupoidGrp& g) {
  if (auto w = groupoid_violation(g))
    fail(ErrKind::PreconditionFailed, "not an internal groupoid", *w);
  return GpdTriple{g.C1, g.d, g.c};
}

PassocReport check_p_associativity(const GpdTriple& g, int64_t tuple_cap) {
  require_triple(g, "check_p_associativity");
  const FiniteGroup& A = *g.A;
  const int n = A.order();

  std::vector<std::vector<elem>> S(n), T(n);
  std::vector<std::vector<std::vector<elem>>> ST(
      n, std::vector<std::vector<elem>>(n));
  for (elem x = 0; x < n; ++x) {
    S[g.s[x]].push_back(x);
    T[g.t[x]].push_back(x);
    ST[g.s[x]][g.t[x]].push_back(x);
  }

  PassocReport rep;

  // Nine variables under the constraints
  //   s x1 = s x2 = s y1 = s y2,  t x2 = t x3,  t y1 = t z1,  s x3 = s y3,
  //   s z1 = s z2,  t y2 = t y3 = t z2 = t z3,
  // walked so that every loop ranges over exactly the fiber its constraint
  // allows; the remaining constraints hold by construction.
  [&] {
    for (elem x1 = 0; x1 < n; ++x1)
      for (elem x2 : S[g.s[x1]])
        for (elem x3 : T[g.t[x2]])
          for (elem y1 : S[g.s[x1]])
            for (elem y2 : S[g.s[x1]])
              for (elem y3 : ST[g.s[x3]][g.t[y2]])
                for (elem z1 : T[g.t[y1]])
                  for (elem z2 : ST[g.s[z1]][g.t[y2]])
                    for (elem z3 : T[g.t[y2]]) {
                      if (rep.main_cases == tuple_cap) {
                        rep.main_exhaustive = false;
                        return;
                      }
                      ++rep.main_cases;
                      const elem lhs = A.p(A.p(x1, x2, x3), A.p(y1, y2, y3),
                                           A.p(z1, z2, z3));
                      const elem rhs = A.p(A.p(x1, y1, z1), A.p(x2, y2, z2),
                                           A.p(x3, y3, z3));
                      if (lhs != rhs) {
                        rep.main_ok = false;
                        rep.main_witness = {x1, x2, x3, y1, y2, y3, z1, z2, z3};
                        return;
                      }
                    }
  }();

  // p(x1, x2, p(x2, y2, z3)) = p(x1, y2, z3) with s x1 = s x2 = s y2 and
  // t y2 = t z3.
  [&] {
    for (elem x1 = 0; x1 < n; ++x1)
      for (elem x2 : S[g.s[x1]])
        for (elem y2 : S[g.s[x1]])
          for (elem z3 : T[g.t[y2]]) {
            if (rep.left_cases == tuple_cap) {
              rep.left_exhaustive = false;
              return;
            }
            ++rep.left_cases;
            if (A.p(x1, x2, A.p(x2, y2, z3)) != A.p(x1, y2, z3)) {
              rep.left_ok = false;
              rep.left_witness = {x1, x2, y2, z3};
              return;
            }
          }
  }();

  // p(p(x1, y2, z2), z2, z3) = p(x1, y2, z3) with s x1 = s y2 and
  // t y2 = t z2 = t z3.
  [&] {
    for (elem x1 = 0; x1 < n; ++x1)
      for (elem y2 : S[g.s[x1]])
        for (elem z2 : T[g.t[y2]])
          for (elem z3 : T[g.t[y2]]) {
            if (rep.right_cases == tuple_cap) {
              rep.right_exhaustive = false;
              return;
            }
            ++rep.right_cases;
            if (A.p(A.p(x1, y2, z2), z2, z3) != A.p(x1, y2, z3)) {
              rep.right_ok = false;
              rep.right_witness = {x1, y2, z2, z3};
              return;
            }
          }
  }();

  return rep;
}

std::optional<Witness> twocell_violation(const TwoCellH& tc) {
  if (!tc.from.A || !tc.to.A || !table_shaped(*tc.from.A, *tc.to.A, tc.tau))
    return Witness{3};
  if (auto w = hom_violation(*tc.from.A, *tc.to.A, tc.tau))
    return Witness{0, (*w)[0], (*w)[1]};
  const int n = tc.from.A->order();
  const auto& s = tc.to.s;
  const auto& t = tc.to.t;
  for (elem x = 0; x < n; ++x)
    if (s[tc.tau[tc.from.s[x]]] != s[tc.tau[x]]) return Witness{1, x};
  for (elem x = 0; x < n; ++x)
    if (t[tc.tau[tc.from.t[x]]] != t[tc.tau[x]]) return Witness{2, x};
  return std::nullopt;
}

TwoCellH make_twocell(GpdTriple from, GpdTriple to, std::vector<elem> tau) {
  require_triple(from, "make_twocell");
  require_triple(to, "make_twocell");
  TwoCellH tc{std::move(from), std::move(to), std::move(tau)};
  if (auto w = twocell_violation(tc)) {
    if (!w->empty() && (*w)[0] == 0)
      fail(ErrKind::NotHomomorphism, "2-cell map is not a homomorphism", *w);
    fail(ErrKind::PreconditionFailed,
         "2-cell map does not satisfy the s/t compatibility laws", *w);
  }
  return tc;
}

std::vector<elem> twocell_dom(const TwoCellH& tc) {
  const FiniteGroup& A = *tc.to.A;
  const int n = tc.from.A->order();
  std::vector<elem> dom(n);
  for (elem x = 0; x < n; ++x) {
    const elem tt = tc.tau[tc.from.t[x]];
    dom[x] = A.p(tc.to.s[tt], tt, tc.tau[x]);
  }
  if (auto w = triple_morphism_violation(tc.from, tc.to, dom))
    fail(ErrKind::InvariantViolation,
         "dom of a 2-cell is not a morphism of triples (target lacks (P1)?)",
         *w);
  return dom;
}

std::vector<elem> twocell_cod(const TwoCellH& tc) {
  const FiniteGroup& A = *tc.to.A;
  const int n = tc.from.A->order();
  std::vector<elem> cod(n);
  for (elem x = 0; x < n; ++x) {
    const elem ts = tc.tau[tc.from.s[x]];
    cod[x] = A.p(tc.tau[x], ts, tc.to.t[ts]);
  }
  if (auto w = triple_morphism_violation(tc.from, tc.to, cod))
    fail(ErrKind::InvariantViolation,
         "cod of a 2-cell is not a morphism of triples (target lacks (P1)?)",
         *w);
  return cod;
}

TwoCellH twocell_zero(GpdTriple from, GpdTriple to, std::vector<elem> f) {
  require_triple(from, "twocell_zero");
  require_triple(to, "twocell_zero");
  if (auto w = triple_morphism_violation(from, to, f))
    fail(ErrKind::PreconditionFailed,
         "zero 2-cell needs a morphism of triples", *w);
  return TwoCellH{std::move(from), std::move(to), std::move(f)};
}

TwoCellH twocell_add(const TwoCellH& tau, const TwoCellH& sigma) {
  if (!same_triple(tau.from, sigma.from) || !same_triple(tau.to, sigma.to))
    fail(ErrKind::NotComposable, "2-cells live between different triples");
  const std::vector<elem> f = twocell_dom(tau);
  const std::vector<elem> g = twocell_cod(sigma);
  for (elem x = 0; x < static_cast<elem>(f.size()); ++x)
    if (f[x] != g[x])
      fail(ErrKind::NotComposable, "dom of the left 2-cell differs from cod of the right",
           {x, f[x], g[x]});

  const FiniteGroup& A = *tau.to.A;
  const int n = tau.from.A->order();
  std::vector<elem> sum(n);
  for (elem x = 0; x < n; ++x) sum[x] = A.p(tau.tau[x], f[x], sigma.tau[x]);
  TwoCellH out{tau.from, tau.to, std::move(sum)};
  if (auto w = twocell_violation(out))
    fail(ErrKind::InvariantViolation, "sum of 2-cells left the 2-cell set",
         *w);
  return out;
}

TwoCellH twocell_neg(const TwoCellH& tau) {
  const std::vector<elem> dom = twocell_dom(tau);
  const std::vector<elem> cod = twocell_cod(tau);
  const FiniteGroup& A = *tau.to.A;
  const int n = tau.from.A->order();
  std::vector<elem> neg(n);
  for (elem x = 0; x < n; ++x) neg[x] = A.p(dom[x], tau.tau[x], cod[x]);
  TwoCellH out{tau.from, tau.to, std::move(neg)};
  if (auto w = twocell_violation(out))
    fail(ErrKind::InvariantViolation, "negation of a 2-cell left the 2-cell set",
         *w);
  return out;
}

TwoCellH twocell_precompose(const TwoCellH& tau, const GpdTriple& g,
                            const std::vector<elem>& u) {
  require_triple(g, "twocell_precompose");
  if (auto w = triple_morphism_violation(g, tau.from, u))
    fail(ErrKind::PreconditionFailed,
         "whiskering map is not a morphism of triples", *w);
  const int n = g.A->order();
  std::vector<elem> out(n);
  for (elem x = 0; x < n; ++x) out[x] = tau.tau[u[x]];
  TwoCellH res{g, tau.to, std::move(out)};
  if (auto w = twocell_violation(res))
    fail(ErrKind::InvariantViolation, "whiskered 2-cell left the 2-cell set",
         *w);
  return res;
}

TwoCellH twocell_postcompose(const GpdTriple& g, const std::vector<elem>& v,
                             const TwoCellH& tau) {
  require_triple(g, "twocell_postcompose");
  if (auto w = triple_morphism_violation(tau.to, g, v))
    fail(ErrKind::PreconditionFailed,
         "whiskering map is not a morphism of triples", *w);
  const int n = tau.from.A->order();
  std::vector<elem> out(n);
  for (elem x = 0; x < n; ++x) out[x] = v[tau.tau[x]];
  TwoCellH res{tau.from, g, std::move(out)};
  if (auto w = twocell_violation(res))
    fail(ErrKind::InvariantViolation, "whiskered 2-cell left the 2-cell set",
         *w);
  return res;
}

bool PseudocatReport::preconditions_ok() const {
  for (const Line& l : preconditions)
    if (!l.ok) return false;
  return true;
}

bool PseudocatReport::ok() const {
  // alpha_agree is deliberately absent: the word-formula expansion diverging
  // from the arithmetic reassociator is recorded, not an error.
  return preconditions_ok() && m_hom.ok && m_triple.ok && m_bounds.ok &&
         alpha_hom.ok && alpha_h.ok && alpha_bounds.ok;
}

PseudocatReport pseudocat_from_data(const PseudocatData& pd) {
  PseudocatReport rep;
  auto pre = [&](const char* name, std::optional<Witness> w) {
    rep.preconditions.push_back({name, !w, w ? *w : Witness{}});
    if (w)
      fail(ErrKind::PreconditionFailed,
           std::string("pseudocategory precondition '") + name + "' failed",
           *w);
  };
  auto pre_scan = [&](const char* name, const std::function<bool(elem)>& law,
                      int n) {
    std::optional<Witness> w;
    for (elem x = 0; x < n; ++x)
      if (!law(x)) {
        w = Witness{x};
        break;
      }
    pre(name, w);
  };

  pre("C1-triple", triple_violation(pd.C1));
  pre("C0-triple", triple_violation(pd.C0));
  const FiniteGroup& A = *pd.C1.A;
  const FiniteGroup& B = *pd.C0.A;
  const int n = A.order();
  const int n0 = B.order();

  pre("d-morphism", triple_morphism_violation(pd.C1, pd.C0, pd.d));
  pre("c-morphism", triple_morphism_violation(pd.C1, pd.C0, pd.c));
  pre("e-morphism", triple_morphism_violation(pd.C0, pd.C1, pd.e));
  pre_scan("d-e-identity", [&](elem b) { return pd.d[pd.e[b]] == b; }, n0);
  pre_scan("c-e-identity", [&](elem b) { return pd.c[pd.e[b]] == b; }, n0);

  pre("lambda-endocell", same_triple(pd.lambda.from, pd.C1) &&
                                 same_triple(pd.lambda.to, pd.C1)
                             ? std::nullopt
                             : std::make_optional(Witness{}));
  pre("rho-endocell", same_triple(pd.rho.from, pd.C1) &&
                              same_triple(pd.rho.to, pd.C1)
                          ? std::nullopt
                          : std::make_optional(Witness{}));
  pre("lambda-2cell", twocell_violation(pd.lambda));
  pre("rho-2cell", twocell_violation(pd.rho));

  const auto& lam = pd.lambda.tau;
  const auto& rho = pd.rho.tau;
  pre_scan("d-lambda", [&](elem x) { return pd.d[lam[x]] == pd.d[x]; }, n);
  pre_scan("d-rho", [&](elem x) { return pd.d[rho[x]] == pd.d[x]; }, n);
  pre_scan("c-lambda", [&](elem x) { return pd.c[lam[x]] == pd.c[x]; }, n);
  pre_scan("c-rho", [&](elem x) { return pd.c[rho[x]] == pd.c[x]; }, n);
  pre_scan("lambda-e", [&](elem b) { return lam[pd.e[b]] == pd.e[b]; }, n0);
  pre_scan("rho-e", [&](elem b) { return rho[pd.e[b]] == pd.e[b]; }, n0);

  {
    Witness w;
    pre("P1-on-C1", check_P1(pd.C1, &w) ? std::nullopt : std::make_optional(w));
  }

  // cod of both unitors must be the identity morphism; dom(rho) and
  // dom(lambda) are the two legs the composition is built from.
  const std::vector<elem> cod_l = twocell_cod(pd.lambda);
  const std::vector<elem> cod_r = twocell_cod(pd.rho);
  pre_scan("cod-lambda-identity", [&](elem x) { return cod_l[x] == x; }, n);
  pre_scan("cod-rho-identity", [&](elem x) { return cod_r[x] == x; }, n);

  const std::vector<elem> R = twocell_dom(pd.rho);
  const std::vector<elem> L = twocell_dom(pd.lambda);
  auto ed = [&](elem x) { return pd.e[pd.d[x]]; };

  rep.n = n;
  rep.m.assign(static_cast<size_t>(n) * n, -1);
  std::vector<std::vector<elem>> c_fiber(n0);
  for (elem x = 0; x < n; ++x) c_fiber[pd.c[x]].push_back(x);
  std::vector<int64_t> pairs;
  for (elem x1 = 0; x1 < n; ++x1)
    for (elem x2 : c_fiber[pd.d[x1]]) {
      pairs.push_back(static_cast<int64_t>(x1) * n + x2);
      rep.m[static_cast<size_t>(x1) * n + x2] = A.p(R[x1], ed(x1), L[x2]);
    }

  auto mul2 = [&](int64_t u, int64_t v) {
    return static_cast<int64_t>(A.op(static_cast<elem>(u / n),
                                     static_cast<elem>(v / n))) *
               n +
           A.op(static_cast<elem>(u % n), static_cast<elem>(v % n));
  };
  auto inv2 = [&](int64_t u) {
    return static_cast<int64_t>(A.inv(static_cast<elem>(u / n))) * n +
           A.inv(static_cast<elem>(u % n));
  };
  if (auto bad = encoded_hom_violation(
          pairs, mul2, inv2, [&](int64_t u) { return rep.m[u]; }, A)) {
    auto [u, v] = *bad;
    rep.m_hom.ok = false;
    rep.m_hom.witness = {u / n, u % n, v / n, v % n};
  }

  for (int64_t pr : pairs) {
    const elem x1 = static_cast<elem>(pr / n), x2 = static_cast<elem>(pr % n);
    const elem y = rep.m[pr];
    if (rep.m_triple.ok) {
      if (rep.m[static_cast<size_t>(pd.C1.s[x1]) * n + pd.C1.s[x2]] !=
          pd.C1.s[y])
        rep.m_triple = {"m-triple-morphism", false, {0, x1, x2}};
      else if (rep.m[static_cast<size_t>(pd.C1.t[x1]) * n + pd.C1.t[x2]] !=
               pd.C1.t[y])
        rep.m_triple = {"m-triple-morphism", false, {1, x1, x2}};
    }
    if (rep.m_bounds.ok) {
      if (pd.d[y] != pd.d[x2])
        rep.m_bounds = {"m-boundaries", false, {0, x1, x2}};
      else if (pd.c[y] != pd.c[x1])
        rep.m_bounds = {"m-boundaries", false, {1, x1, x2}};
    }
  }

  // The reassociator, assembled twice over composable triples.
  const TwoCellH a1 = twocell_precompose(pd.rho, pd.C1, R);
  const TwoCellH a2 =
      twocell_add(twocell_neg(twocell_postcompose(pd.C1, R, pd.lambda)),
                  twocell_precompose(pd.lambda, pd.C1, R));
  const TwoCellH a3 = twocell_precompose(pd.lambda, pd.C1, L);

  std::vector<elem> f1(n), f2(n), f3(n);
  for (elem x = 0; x < n; ++x) {
    const elem rt = rho[pd.C1.t[x]];
    const elem tail = A.p(pd.C1.s[rt], rt, rho[x]);
    const elem lt = lam[pd.C1.t[x]];
    f1[x] = A.p(pd.C1.s[rho[rt]], rho[pd.C1.s[rt]], tail);
    f2[x] = A.p(pd.C1.s[rho[lt]], rho[pd.C1.s[lt]], tail);
    f3[x] = A.p(lam[pd.C1.s[lt]], lam[lt], lam[lam[x]]);
  }

  for (elem x1 = 0; x1 < n; ++x1)
    for (elem x2 : c_fiber[pd.d[x1]])
      for (elem x3 : c_fiber[pd.d[x2]])
        rep.triples.push_back((static_cast<int64_t>(x1) * n + x2) * n + x3);
  rep.alpha_arith.reserve(rep.triples.size());
  rep.alpha_formula.reserve(rep.triples.size());
  for (int64_t tr : rep.triples) {
    const elem x1 = static_cast<elem>(tr / (static_cast<int64_t>(n) * n));
    const elem x2 = static_cast<elem>(tr / n % n);
    const elem x3 = static_cast<elem>(tr % n);
    rep.alpha_arith.push_back(
        A.p(a1.tau[x1], ed(x1), A.p(a2.tau[x2], ed(x2), a3.tau[x3])));
    rep.alpha_formula.push_back(
        A.p(f1[x1], ed(x1), A.p(f2[x2], ed(x2), f3[x3])));
    if (rep.alpha_agree.ok && rep.alpha_arith.back() != rep.alpha_formula.back())
      rep.alpha_agree = {"alpha-groupings-agree",
                         false,
                         {x1, x2, x3, rep.alpha_arith.back(),
                          rep.alpha_formula.back()}};
  }

  auto alpha_at = [&](int64_t enc) {
    const auto it =
        std::lower_bound(rep.triples.begin(), rep.triples.end(), enc);
    if (it == rep.triples.end() || *it != enc)
      fail(ErrKind::InvariantViolation,
           "reassociator queried off the composable triples", {enc});
    return rep.alpha_arith[it - rep.triples.begin()];
  };
  auto mul3 = [&](int64_t u, int64_t v) {
    const int64_t nn = static_cast<int64_t>(n) * n;
    return (static_cast<int64_t>(A.op(static_cast<elem>(u / nn),
                                      static_cast<elem>(v / nn))) *
                n +
            A.op(static_cast<elem>(u / n % n), static_cast<elem>(v / n % n))) *
               n +
           A.op(static_cast<elem>(u % n), static_cast<elem>(v % n));
  };
  auto inv3 = [&](int64_t u) {
    const int64_t nn = static_cast<int64_t>(n) * n;
    return (static_cast<int64_t>(A.inv(static_cast<elem>(u / nn))) * n +
            A.inv(static_cast<elem>(u / n % n))) *
               n +
           A.inv(static_cast<elem>(u % n));
  };
  if (auto bad = encoded_hom_violation(rep.triples, mul3, inv3, alpha_at, A)) {
    const int64_t nn = static_cast<int64_t>(n) * n;
    auto [u, v] = *bad;
    rep.alpha_hom.ok = false;
    rep.alpha_hom.witness = {u / nn, u / n % n, u % n,
                             v / nn, v / n % n, v % n};
  }

  for (int64_t tr : rep.triples) {
    const elem x1 = static_cast<elem>(tr / (static_cast<int64_t>(n) * n));
    const elem x2 = static_cast<elem>(tr / n % n);
    const elem x3 = static_cast<elem>(tr % n);
    const elem ax = alpha_at(tr);
    const auto& s = pd.C1.s;
    const auto& t = pd.C1.t;
    if (rep.alpha_h.ok) {
      const elem as =
          alpha_at((static_cast<int64_t>(s[x1]) * n + s[x2]) * n + s[x3]);
      const elem at =
          alpha_at((static_cast<int64_t>(t[x1]) * n + t[x2]) * n + t[x3]);
      if (s[as] != s[ax])
        rep.alpha_h = {"alpha-2cell-membership", false, {0, x1, x2, x3}};
      else if (t[at] != t[ax])
        rep.alpha_h = {"alpha-2cell-membership", false, {1, x1, x2, x3}};
    }
    if (rep.alpha_bounds.ok) {
      const elem at =
          alpha_at((static_cast<int64_t>(t[x1]) * n + t[x2]) * n + t[x3]);
      const elem as =
          alpha_at((static_cast<int64_t>(s[x1]) * n + s[x2]) * n + s[x3]);
      const elem dom_a = A.p(s[at], at, ax);
      const elem cod_a = A.p(ax, as, t[as]);
      const elem in_r = rep.m[static_cast<size_t>(x2) * n + x3];
      const elem right =
          in_r < 0 ? -1 : rep.m[static_cast<size_t>(x1) * n + in_r];
      const elem in_l = rep.m[static_cast<size_t>(x1) * n + x2];
      const elem left =
          in_l < 0 ? -1 : rep.m[static_cast<size_t>(in_l) * n + x3];
      if (dom_a != right)
        rep.alpha_bounds = {"alpha-boundaries", false,
                            {0, x1, x2, x3, dom_a, right}};
      else if (cod_a != left)
        rep.alpha_bounds = {"alpha-boundaries", false,
                            {1, x1, x2, x3, cod_a, left}};
    }
  }

  if (!rep.m_hom.ok)
    fail(ErrKind::NotHomomorphism,
         "pseudocategory composition is not a homomorphism on the pullback",
         rep.m_hom.witness);
  if (!rep.alpha_hom.ok)
    fail(ErrKind::NotHomomorphism,
         "reassociator is not a homomorphism on composable triples",
         rep.alpha_hom.witness);
  return rep;
}

PseudocatData encode_as_pseudocat(const BicatData& d) {
  if (!d.X || !d.B)
    fail(ErrKind::PreconditionFailed, "encode_as_pseudocat: missing groups");
  const int nx = d.X->order(), nb = d.B->order();
  if (static_cast<int>(d.h.size()) != nx ||
      static_cast<int>(d.s.size()) != nx ||
      static_cast<int>(d.t.size()) != nx ||
      static_cast<int>(d.lambda.size()) != nx ||
      static_cast<int>(d.rho.size()) != nx ||
      d.xi.size() != static_cast<size_t>(nb) * nx)
    fail(ErrKind::PreconditionFailed, "encode_as_pseudocat: malformed tables");

  const GroupAction xi = make_action(d.B, d.X, d.xi);
  const SemidirectProduct sd = semidirect_product_unchecked(d.X, d.B, xi);
  const int n = nx * nb;

  // Extending an endomorphism f of X by the identity on the base is a
  // homomorphism of the product exactly when f commutes with the action;
  // make_triple / make_twocell reject the data otherwise.
  auto lift = [&](const std::vector<elem>& f) {
    std::vector<elem> out(n);
    for (elem x = 0; x < nx; ++x)
      for (elem b = 0; b < nb; ++b) out[sd.encode(x, b)] = sd.encode(f[x], b);
    return out;
  };

  std::vector<elem> ident(nb);
  for (elem b = 0; b < nb; ++b) ident[b] = b;

  PseudocatData out{make_triple(sd.group, lift(d.s), lift(d.t)),
                    make_triple(d.B, ident, ident),
                    std::vector<elem>(n),
                    std::vector<elem>(n),
                    std::vector<elem>(nb),
                    {},
                    {}};
  for (elem g = 0; g < n; ++g) {
    out.d[g] = sd.b_part(g);
    out.c[g] = d.B->op(d.h[sd.x_part(g)], sd.b_part(g));
  }
  for (elem b = 0; b < nb; ++b) out.e[b] = sd.encode(0, b);
  out.lambda = make_twocell(out.C1, out.C1, lift(d.lambda));
  out.rho = make_twocell(out.C1, out.C1, lift(d.rho));
  return out;
}

}  // namespace bicat
