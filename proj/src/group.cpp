#include "bicat/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bicat {

FiniteGroup::FiniteGroup(std::vector<elem> table, int order, std::string name)
    : n_(order), table_(std::move(table)), inv_(order, -1),
      name_(std::move(name)) {}

int FiniteGroup::element_order(elem a) const {
  int k = 1;
  elem x = a;
  while (x != id) {
    x = op(x, a);
    ++k;
  }
  return k;
}

namespace {

void check_shape(const std::vector<elem>& table, int order) {
  if (order <= 0 || table.size() != static_cast<size_t>(order) * order) {
    fail(ErrKind::NotClosed, "operation table has wrong shape");
  }
}

std::vector<elem> compute_inverses(const std::vector<elem>& table, int order,
                                   bool throw_on_missing) {
  std::vector<elem> inv(order, -1);
  for (elem a = 0; a < order; ++a) {
    for (elem b = 0; b < order; ++b) {
      if (table[a * order + b] == 0 && table[b * order + a] == 0) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0 && throw_on_missing) {
      fail(ErrKind::NoInverse,
           "element " + std::to_string(a) + " has no two-sided inverse", {a});
    }
  }
  return inv;
}

}  // namespace

std::shared_ptr<const FiniteGroup> FiniteGroup::validate(
    std::vector<elem> table, int order, std::string name) {
  check_shape(table, order);
  const int n = order;
  for (elem a = 0; a < n; ++a) {
    for (elem b = 0; b < n; ++b) {
      elem c = table[a * n + b];
      if (c < 0 || c >= n) {
        fail(ErrKind::NotClosed,
             "entry (" + std::to_string(a) + ", " + std::to_string(b) +
                 ") = " + std::to_string(c) + " is out of range",
             {a, b});
      }
    }
  }
  for (elem a = 0; a < n; ++a) {
    if (table[0 * n + a] != a || table[a * n + 0] != a) {
      fail(ErrKind::NoIdentity,
           "index 0 is not a two-sided identity at element " +
               std::to_string(a),
           {a});
    }
  }
  auto inv = compute_inverses(table, n, true);
  // Associativity last, so its witnesses are only reported on tables that
  // already have identity and inverses: least triple in row-major order.
  const int64_t total = static_cast<int64_t>(n) * n * n;
  int64_t bad = scan_least_violation(total, [&](int64_t idx) {
    const elem a = static_cast<elem>(idx / (n * n));
    const elem b = static_cast<elem>((idx / n) % n);
    const elem c = static_cast<elem>(idx % n);
    return table[table[a * n + b] * n + c] == table[a * n + table[b * n + c]];
  });
  if (bad < total) {
    const elem a = static_cast<elem>(bad / (n * n));
    const elem b = static_cast<elem>((bad / n) % n);
    const elem c = static_cast<elem>(bad % n);
    fail(ErrKind::NotAssociative,
         "(a*b)*c != a*(b*c) at (" + std::to_string(a) + ", " +
             std::to_string(b) + ", " + std::to_string(c) + ")",
         {a, b, c});
  }
  auto g = std::shared_ptr<FiniteGroup>(
      new FiniteGroup(std::move(table), n, std::move(name)));
  g->inv_ = std::move(inv);
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::unchecked(
    std::vector<elem> table, int order, std::string name) {
  check_shape(table, order);
  auto g = std::shared_ptr<FiniteGroup>(
      new FiniteGroup(std::move(table), order, std::move(name)));
  g->inv_ = compute_inverses(g->table_, order, true);
  return g;
}

GroupPtr validate_group(std::vector<elem> table, int order, std::string name) {
  return FiniteGroup::validate(std::move(table), order, std::move(name));
}

std::optional<Witness> hom_violation(const FiniteGroup& dom,
                                     const FiniteGroup& cod,
                                     const std::vector<elem>& map,
                                     ExecMode mode) {
  const int n = dom.order();
  if (map.size() != static_cast<size_t>(n)) return Witness{-1};
  for (elem x = 0; x < n; ++x) {
    if (map[x] < 0 || map[x] >= cod.order()) return Witness{x};
  }
  const int64_t total = static_cast<int64_t>(n) * n;
  int64_t bad = scan_least_violation(
      total,
      [&](int64_t idx) {
        const elem x = static_cast<elem>(idx / n);
        const elem y = static_cast<elem>(idx % n);
        return map[dom.op(x, y)] == cod.op(map[x], map[y]);
      },
      mode);
  if (bad == total) return std::nullopt;
  return Witness{bad / n, bad % n};
}

GroupHom make_hom(GroupPtr dom, GroupPtr cod, std::vector<elem> map) {
  if (auto w = hom_violation(*dom, *cod, map)) {
    fail(ErrKind::NotHomomorphism,
         "map is not a homomorphism, witness " + witness_string(*w), *w);
  }
  return GroupHom{std::move(dom), std::move(cod), std::move(map)};
}

GroupHom identity_hom(GroupPtr g) {
  std::vector<elem> m(g->order());
  std::iota(m.begin(), m.end(), 0);
  return GroupHom{g, g, std::move(m)};
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
  std::vector<elem> m(g.dom->order());
  for (elem x = 0; x < g.dom->order(); ++x) m[x] = f.map[g.map[x]];
  return GroupHom{g.dom, f.cod, std::move(m)};
}

bool Subgroup::contains(elem x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

Subgroup kernel(const GroupHom& f) {
  Subgroup s;
  s.parent = f.dom;
  for (elem x = 0; x < f.dom->order(); ++x) {
    if (f.map[x] == FiniteGroup::id) s.elements.push_back(x);
  }
  return s;
}

Subgroup full_subgroup(GroupPtr g) {
  Subgroup s;
  s.parent = g;
  s.elements.resize(g->order());
  std::iota(s.elements.begin(), s.elements.end(), 0);
  return s;
}

Subgroup subgroup_closure(GroupPtr g, const std::vector<elem>& gens) {
  std::set<elem> seen{FiniteGroup::id};
  std::vector<elem> frontier{FiniteGroup::id};
  while (!frontier.empty()) {
    std::vector<elem> next;
    for (elem x : frontier) {
      for (elem s : gens) {
        for (elem y : {g->op(x, s), g->op(x, g->inv(s))}) {
          if (seen.insert(y).second) next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  Subgroup out;
  out.parent = g;
  out.elements.assign(seen.begin(), seen.end());
  return out;
}

bool centralizes(const Subgroup& h, const Subgroup& k, Witness* witness) {
  const auto& g = *h.parent;
  for (elem a : h.elements) {
    for (elem b : k.elements) {
      if (g.op(a, b) != g.op(b, a)) {
        if (witness) *witness = {a, b};
        return false;
      }
    }
  }
  return true;
}

ReindexedGroup subgroup_as_group(const Subgroup& s, std::string name) {
  const auto& g = *s.parent;
  ReindexedGroup out;
  out.to_parent = s.elements;  // sorted, so identity (0) lands at index 0
  out.from_parent.assign(g.order(), -1);
  for (size_t i = 0; i < s.elements.size(); ++i) {
    out.from_parent[s.elements[i]] = static_cast<elem>(i);
  }
  const int m = s.size();
  std::vector<elem> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      elem prod = g.op(s.elements[i], s.elements[j]);
      elem local = out.from_parent[prod];
      if (local < 0) {
        fail(ErrKind::NotClosed,
             "subset is not closed under the parent operation",
             {s.elements[i], s.elements[j]});
      }
      table[i * m + j] = local;
    }
  }
  out.group = FiniteGroup::unchecked(std::move(table), m, std::move(name));
  return out;
}

std::optional<Witness> action_violation(const GroupAction& a, ExecMode mode) {
  const int nb = a.acting->order();
  const int nx = a.target->order();
  if (a.auts.size() != static_cast<size_t>(nb) * nx) return Witness{-1};
  // Rule 0: the identity acts trivially.  Rule 1: each row is a bijective
  // homomorphism of the target.  Rule 2: rows compose along the acting group.
  for (elem x = 0; x < nx; ++x) {
    if (a.apply(FiniteGroup::id, x) != x) return Witness{0, 0, x};
  }
  for (elem b = 0; b < nb; ++b) {
    std::vector<bool> hit(nx, false);
    for (elem x = 0; x < nx; ++x) {
      elem y = a.apply(b, x);
      if (y < 0 || y >= nx || hit[y]) return Witness{1, b, x};
      hit[y] = true;
    }
    for (elem x = 0; x < nx; ++x) {
      for (elem y = 0; y < nx; ++y) {
        if (a.apply(b, a.target->op(x, y)) !=
            a.target->op(a.apply(b, x), a.apply(b, y))) {
          return Witness{1, b, x, y};
        }
      }
    }
  }
  const int64_t total = static_cast<int64_t>(nb) * nb;
  int64_t bad = scan_least_violation(
      total,
      [&](int64_t idx) {
        const elem b1 = static_cast<elem>(idx / nb);
        const elem b2 = static_cast<elem>(idx % nb);
        const elem prod = a.acting->op(b1, b2);
        for (elem x = 0; x < nx; ++x) {
          if (a.apply(prod, x) != a.apply(b1, a.apply(b2, x))) return false;
        }
        return true;
      },
      mode);
  if (bad == total) return std::nullopt;
  return Witness{2, bad / nb, bad % nb};
}

GroupAction make_action(GroupPtr acting, GroupPtr target,
                        std::vector<elem> auts) {
  GroupAction a{std::move(acting), std::move(target), std::move(auts)};
  if (auto w = action_violation(a)) {
    fail(ErrKind::ActionInvalid,
         "not an action by automorphisms, witness " + witness_string(*w), *w);
  }
  return a;
}

GroupAction trivial_action(GroupPtr acting, GroupPtr target) {
  const int nb = acting->order();
  const int nx = target->order();
  std::vector<elem> auts(static_cast<size_t>(nb) * nx);
  for (elem b = 0; b < nb; ++b) {
    for (elem x = 0; x < nx; ++x) auts[b * nx + x] = x;
  }
  return GroupAction{std::move(acting), std::move(target), std::move(auts)};
}

GroupAction conjugation_action(GroupPtr g) {
  const int n = g->order();
  std::vector<elem> auts(static_cast<size_t>(n) * n);
  for (elem b = 0; b < n; ++b) {
    for (elem x = 0; x < n; ++x) auts[b * n + x] = g->conjugate(b, x);
  }
  return GroupAction{g, g, std::move(auts)};
}

namespace {

SemidirectProduct build_semidirect(GroupPtr x, GroupPtr b,
                                   const GroupAction& xi) {
  const int nx = x->order();
  const int nb = b->order();
  const int n = nx * nb;
  std::vector<elem> table(static_cast<size_t>(n) * n);
  for (elem x1 = 0; x1 < nx; ++x1) {
    for (elem b1 = 0; b1 < nb; ++b1) {
      const elem g1 = x1 * nb + b1;
      for (elem x2 = 0; x2 < nx; ++x2) {
        const elem moved = xi.apply(b1, x2);
        for (elem b2 = 0; b2 < nb; ++b2) {
          table[static_cast<size_t>(g1) * n + (x2 * nb + b2)] =
              x->op(x1, moved) * nb + b->op(b1, b2);
        }
      }
    }
  }
  SemidirectProduct out;
  out.group = FiniteGroup::unchecked(std::move(table), n,
                                     x->name() + "x|" + b->name());
  out.left = std::move(x);
  out.right = std::move(b);
  return out;
}

}  // namespace

SemidirectProduct semidirect_product(GroupPtr x, GroupPtr b,
                                     const GroupAction& xi) {
  if (xi.acting.get() != b.get() || xi.target.get() != x.get()) {
    fail(ErrKind::ActionInvalid, "action groups do not match the factors");
  }
  if (auto w = action_violation(xi)) {
    fail(ErrKind::ActionInvalid,
         "twisting map is not an action, witness " + witness_string(*w), *w);
  }
  return build_semidirect(std::move(x), std::move(b), xi);
}

SemidirectProduct semidirect_product_unchecked(GroupPtr x, GroupPtr b,
                                               const GroupAction& xi) {
  return build_semidirect(std::move(x), std::move(b), xi);
}

SemidirectProduct direct_product(GroupPtr x, GroupPtr b) {
  auto triv = trivial_action(b, x);
  return build_semidirect(std::move(x), std::move(b), triv);
}

elem maltsev_p(const FiniteGroup& g, elem a, elem b, elem c) {
  return g.p(a, b, c);
}

std::vector<elem> small_generating_sequence(const FiniteGroup& g) {
  std::vector<elem> gens;
  std::set<elem> closure{FiniteGroup::id};
  while (static_cast<int>(closure.size()) < g.order()) {
    // Greedy: add the least element outside the current closure.
    elem pick = -1;
    for (elem x = 0; x < g.order(); ++x) {
      if (!closure.count(x)) {
        pick = x;
        break;
      }
    }
    gens.push_back(pick);
    // Re-close.
    std::vector<elem> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<elem> next;
      for (elem a : frontier) {
        for (elem s : gens) {
          elem y = g.op(a, s);
          if (closure.insert(y).second) next.push_back(y);
          y = g.op(s, a);
          if (closure.insert(y).second) next.push_back(y);
        }
      }
      frontier = std::move(next);
    }
  }
  return gens;
}

namespace {

// Words over the generating sequence reach every element; precompute, for
// each element, one way to write it as (previous element) * generator.
struct WordTable {
  std::vector<elem> gens;
  std::vector<elem> parent;   // element -> previous element in its word
  std::vector<int> via_gen;   // element -> generator index applied last
  std::vector<elem> bfs_order;
};

WordTable word_table(const FiniteGroup& g) {
  WordTable wt;
  wt.gens = small_generating_sequence(g);
  wt.parent.assign(g.order(), -1);
  wt.via_gen.assign(g.order(), -1);
  wt.bfs_order.push_back(FiniteGroup::id);
  std::vector<bool> seen(g.order(), false);
  seen[FiniteGroup::id] = true;
  for (size_t head = 0; head < wt.bfs_order.size(); ++head) {
    elem a = wt.bfs_order[head];
    for (size_t gi = 0; gi < wt.gens.size(); ++gi) {
      elem b = g.op(a, wt.gens[gi]);
      if (!seen[b]) {
        seen[b] = true;
        wt.parent[b] = a;
        wt.via_gen[b] = static_cast<int>(gi);
        wt.bfs_order.push_back(b);
      }
    }
  }
  return wt;
}

}  // namespace

std::vector<GroupHom> enumerate_homs(GroupPtr g, GroupPtr h) {
  const auto& G = *g;
  const auto& H = *h;
  WordTable wt = word_table(G);
  const int k = static_cast<int>(wt.gens.size());
  std::vector<GroupHom> out;

  std::vector<elem> images(std::max(k, 1), 0);
  // Odometer over generator images; each assignment extends uniquely along
  // the word table and is then verified as a homomorphism.
  while (true) {
    std::vector<elem> map(G.order(), -1);
    map[FiniteGroup::id] = FiniteGroup::id;
    bool consistent = true;
    for (elem a : wt.bfs_order) {
      if (a == FiniteGroup::id) continue;
      map[a] = H.op(map[wt.parent[a]], images[wt.via_gen[a]]);
    }
    // Generator orders give a fast reject before the full pair sweep.
    for (int gi = 0; gi < k && consistent; ++gi) {
      if (G.element_order(wt.gens[gi]) % H.element_order(images[gi]) != 0) {
        consistent = false;
      }
    }
    if (consistent && !hom_violation(G, H, map, ExecMode::Serial)) {
      out.push_back(GroupHom{g, h, std::move(map)});
    }
    int pos = k - 1;
    while (pos >= 0 && images[pos] == H.order() - 1) {
      images[pos] = 0;
      --pos;
    }
    if (pos < 0 || k == 0) break;
    ++images[pos];
  }
  std::sort(out.begin(), out.end(),
            [](const GroupHom& a, const GroupHom& b) { return a.map < b.map; });
  return out;
}

std::vector<GroupHom> enumerate_endos(GroupPtr g) {
  return enumerate_homs(g, g);
}

AutomorphismGroup automorphism_group(GroupPtr g) {
  AutomorphismGroup out;
  for (auto& f : enumerate_endos(g)) {
    std::vector<bool> hit(g->order(), false);
    bool bij = true;
    for (elem x : f.map) {
      if (hit[x]) {
        bij = false;
        break;
      }
      hit[x] = true;
    }
    if (bij) out.perms.push_back(f.map);
  }
  // enumerate_endos is already sorted, so the identity permutation (the
  // lexicographically least bijection) sits at index 0.
  const int m = static_cast<int>(out.perms.size());
  std::vector<elem> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      std::vector<elem> comp(g->order());
      for (elem x = 0; x < g->order(); ++x) comp[x] = out.perms[i][out.perms[j][x]];
      auto it = std::lower_bound(out.perms.begin(), out.perms.end(), comp);
      table[i * m + j] = static_cast<elem>(it - out.perms.begin());
    }
  }
  out.group = FiniteGroup::unchecked(std::move(table), m,
                                     "Aut(" + g->name() + ")");
  return out;
}

std::vector<GroupAction> enumerate_actions(GroupPtr acting, GroupPtr target) {
  AutomorphismGroup aut = automorphism_group(target);
  std::vector<GroupAction> out;
  for (auto& f : enumerate_homs(acting, aut.group)) {
    GroupAction a;
    a.acting = acting;
    a.target = target;
    a.auts.reserve(static_cast<size_t>(acting->order()) * target->order());
    for (elem b = 0; b < acting->order(); ++b) {
      const auto& perm = aut.perms[f.map[b]];
      a.auts.insert(a.auts.end(), perm.begin(), perm.end());
    }
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end(),
            [](const GroupAction& a, const GroupAction& b) {
              return a.auts < b.auts;
            });
  return out;
}

namespace {

bool extend_iso(const FiniteGroup& g, const FiniteGroup& h,
                std::vector<elem>& map, std::vector<bool>& used,
                const std::vector<int>& order_of_h, size_t next) {
  const int n = g.order();
  if (static_cast<int>(next) == n) {
    // Forcing below is partial, so a complete assignment still needs the
    // full multiplicativity sweep before it counts.
    return !hom_violation(g, h, map, ExecMode::Serial).has_value();
  }
  const elem a = static_cast<elem>(next);
  if (map[a] >= 0) return extend_iso(g, h, map, used, order_of_h, next + 1);
  const int oa = g.element_order(a);
  for (elem b = 0; b < n; ++b) {
    if (used[b] || order_of_h[b] != oa) continue;
    // Tentatively map a -> b, then force products with already-mapped
    // elements and check consistency.
    std::vector<std::pair<elem, elem>> placed;
    bool ok = true;
    map[a] = b;
    used[b] = true;
    placed.push_back({a, b});
    for (elem x = 0; x < n && ok; ++x) {
      if (map[x] < 0 || x == a) continue;
      const std::pair<elem, elem> forced[2] = {
          {g.op(x, a), h.op(map[x], b)},
          {g.op(a, x), h.op(b, map[x])},
      };
      for (const auto& [y, img] : forced) {
        if (map[y] < 0) {
          if (used[img]) {
            ok = false;
            break;
          }
          map[y] = img;
          used[img] = true;
          placed.push_back({y, img});
        } else if (map[y] != img) {
          ok = false;
          break;
        }
      }
    }
    if (ok && extend_iso(g, h, map, used, order_of_h, next + 1)) return true;
    for (auto& [x, y] : placed) {
      map[x] = -1;
      used[y] = false;
    }
  }
  return false;
}

}  // namespace

bool isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                std::vector<elem>* iso_out) {
  if (g.order() != h.order()) return false;
  const int n = g.order();
  std::vector<int> og(n), order_of_h(n);
  for (elem x = 0; x < n; ++x) {
    og[x] = g.element_order(x);
    order_of_h[x] = h.element_order(x);
  }
  {
    auto a = og, b = order_of_h;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  std::vector<elem> map(n, -1);
  std::vector<bool> used(n, false);
  map[FiniteGroup::id] = FiniteGroup::id;
  used[FiniteGroup::id] = true;
  if (!extend_iso(g, h, map, used, order_of_h, 1)) return false;
  if (iso_out) *iso_out = map;
  return true;
}

}  // namespace bicat
