#include "bicat/bicat_data.hpp"

#include <algorithm>

namespace bicat {

std::vector<elem> BicatData::key() const {
  std::vector<elem> k;
  k.reserve(h.size() + 4 * s.size() + xi.size());
  for (const auto* part : {&h, &s, &t, &lambda, &rho, &xi}) {
    k.insert(k.end(), part->begin(), part->end());
  }
  return k;
}

const char* cond_label(CondId id) {
  switch (id) {
    case CondId::Wellformed: return "(0)";
    case CondId::Action: return "(i)";
    case CondId::Equivariance: return "(ii)";
    case CondId::Retractions: return "(iii)";
    case CondId::BaseCollapse: return "(iv)";
    case CondId::BaseUnitors: return "(v)";
    case CondId::UnitorIdentity: return "(vi)";
    case CondId::KernelsCommute: return "(vii)";
    case CondId::Composition: return "(viii)";
  }
  return "(?)";
}

const char* cond_name(CondId id) {
  switch (id) {
    case CondId::Wellformed: return "maps are homomorphisms";
    case CondId::Action: return "xi is an action by automorphisms";
    case CondId::Equivariance: return "h is equivariant for conjugation";
    case CondId::Retractions: return "s*t = t and t*s = s";
    case CondId::BaseCollapse: return "h*s = h = h*t";
    case CondId::BaseUnitors: return "h*lambda = h = h*rho";
    case CondId::UnitorIdentity: return "unitor cancellation is the identity";
    case CondId::KernelsCommute: return "ker s commutes with ker t";
    case CondId::Composition: return "composite and reassociator are homs";
  }
  return "?";
}

const CondEntry& ConditionReport::entry(CondId id) const {
  for (const auto& e : entries) {
    if (e.id == id) return e;
  }
  fail(ErrKind::UsageError, "missing report entry");
}

CondEntry& ConditionReport::entry(CondId id) {
  for (auto& e : entries) {
    if (e.id == id) return e;
  }
  fail(ErrKind::UsageError, "missing report entry");
}

bool ConditionReport::overall() const {
  for (const auto& e : entries) {
    if (e.checked && !e.ok) return false;
  }
  return true;
}

bool ConditionReport::all_checked() const {
  for (const auto& e : entries) {
    if (!e.checked) return false;
  }
  return true;
}

namespace {

bool shape_ok(const BicatData& d) {
  const size_t nx = static_cast<size_t>(d.X->order());
  const size_t nb = static_cast<size_t>(d.B->order());
  auto in_range = [](const std::vector<elem>& v, int bound) {
    for (elem e : v) {
      if (e < 0 || e >= bound) return false;
    }
    return true;
  };
  return d.h.size() == nx && d.s.size() == nx && d.t.size() == nx &&
         d.lambda.size() == nx && d.rho.size() == nx &&
         d.xi.size() == nb * nx && in_range(d.h, d.B->order()) &&
         in_range(d.s, d.X->order()) && in_range(d.t, d.X->order()) &&
         in_range(d.lambda, d.X->order()) && in_range(d.rho, d.X->order()) &&
         in_range(d.xi, d.X->order());
}

CondEntry check_wellformed(const BicatData& d, ExecMode mode) {
  CondEntry e{CondId::Wellformed, true, true, {}, ""};
  if (!shape_ok(d)) {
    e.ok = false;
    e.note = "table shapes or ranges are wrong";
    e.witness = {-1};
    return e;
  }
  const struct {
    const char* name;
    const std::vector<elem>* map;
    const FiniteGroup* cod;
  } maps[] = {
      {"h", &d.h, d.B.get()},      {"s", &d.s, d.X.get()},
      {"t", &d.t, d.X.get()},      {"lambda", &d.lambda, d.X.get()},
      {"rho", &d.rho, d.X.get()},
  };
  for (int i = 0; i < 5; ++i) {
    if (auto w = hom_violation(*d.X, *maps[i].cod, *maps[i].map, mode)) {
      e.ok = false;
      e.note = std::string(maps[i].name) + " is not a homomorphism";
      e.witness = {i};
      e.witness.insert(e.witness.end(), w->begin(), w->end());
      return e;
    }
  }
  return e;
}

CondEntry simple_entry(CondId id, std::optional<Witness> w,
                       const std::string& note_on_fail) {
  CondEntry e{id, true, !w.has_value(), w.value_or(Witness{}), ""};
  if (w) e.note = note_on_fail;
  return e;
}

}  // namespace

ConditionReport check_conditions(const BicatData& d, ExecMode mode) {
  ConditionReport r;
  r.entries.push_back(check_wellformed(d, mode));
  if (!r.entries.front().ok) {
    // Nothing below is meaningful on malformed tables; report the rest as
    // unchecked rather than guessing.
    for (CondId id :
         {CondId::Action, CondId::Equivariance, CondId::Retractions,
          CondId::BaseCollapse, CondId::BaseUnitors, CondId::UnitorIdentity,
          CondId::KernelsCommute, CondId::Composition}) {
      r.entries.push_back(CondEntry{id, false, false, {}, "not evaluated"});
    }
    // (i) is still evaluated: a broken xi should be reported as (i) even
    // when some endomorphism table is also broken.
    r.entry(CondId::Action) =
        simple_entry(CondId::Action, action_violation(d.action(), mode),
                     "action law violated");
    return r;
  }

  const FiniteGroup& X = *d.X;
  const FiniteGroup& B = *d.B;
  const int nx = X.order();
  const int nb = B.order();

  r.entries.push_back(simple_entry(
      CondId::Action, action_violation(d.action(), mode),
      "action law violated"));

  {  // (ii) over all pairs (b, x)
    const int64_t total = static_cast<int64_t>(nb) * nx;
    int64_t bad = scan_least_violation(
        total,
        [&](int64_t i) {
          const elem b = static_cast<elem>(i / nx);
          const elem x = static_cast<elem>(i % nx);
          return d.h[d.act(b, x)] == B.conjugate(b, d.h[x]);
        },
        mode);
    std::optional<Witness> w;
    if (bad < total) w = Witness{bad / nx, bad % nx};
    r.entries.push_back(
        simple_entry(CondId::Equivariance, w, "h(b.x) != b h(x) b^-1"));
  }

  auto pointwise = [&](CondId id, auto lhs_ok, const char* note) {
    int64_t bad = scan_least_violation(
        nx, [&](int64_t x) { return lhs_ok(static_cast<elem>(x)); }, mode);
    std::optional<Witness> w;
    if (bad < nx) w = Witness{bad};
    r.entries.push_back(simple_entry(id, w, note));
  };

  pointwise(
      CondId::Retractions,
      [&](elem x) { return d.s[d.t[x]] == d.t[x] && d.t[d.s[x]] == d.s[x]; },
      "s(t(x)) != t(x) or t(s(x)) != s(x)");
  pointwise(
      CondId::BaseCollapse,
      [&](elem x) { return d.h[d.s[x]] == d.h[x] && d.h[d.t[x]] == d.h[x]; },
      "h(s(x)) != h(x) or h(t(x)) != h(x)");
  pointwise(
      CondId::BaseUnitors,
      [&](elem x) {
        return d.h[d.lambda[x]] == d.h[x] && d.h[d.rho[x]] == d.h[x];
      },
      "h(lambda(x)) != h(x) or h(rho(x)) != h(x)");
  pointwise(
      CondId::UnitorIdentity,
      [&](elem x) {
        const elem ls = d.lambda[d.s[x]];
        const elem rs = d.rho[d.s[x]];
        return X.p(d.lambda[x], ls, d.t[ls]) == x &&
               X.p(d.rho[x], rs, d.t[rs]) == x;
      },
      "unitor cancellation differs from the identity");

  {  // (vii)
    Subgroup ks = kernel(GroupHom{d.X, d.X, d.s});
    Subgroup kt = kernel(GroupHom{d.X, d.X, d.t});
    Witness w;
    bool ok = centralizes(ks, kt, &w);
    CondEntry e{CondId::KernelsCommute, true, ok, ok ? Witness{} : w, ""};
    if (!ok) e.note = "noncommuting pair across the two kernels";
    r.entries.push_back(e);
  }

  r.entries.push_back(
      CondEntry{CondId::Composition, false, false, {}, "not evaluated"});
  return r;
}

DerivedMaps derive_maps(const BicatData& d) {
  const FiniteGroup& X = *d.X;
  const int nx = X.order();
  DerivedMaps m;
  m.u.resize(nx);
  m.v.resize(nx);
  m.a1.resize(nx);
  m.a2_direct.resize(nx);
  m.a2_via_t.resize(nx);
  m.a3.resize(nx);
  m.a1_arith.resize(nx);
  m.a2_arith.resize(nx);
  m.a3_arith.resize(nx);
  const auto& s = d.s;
  const auto& t = d.t;
  const auto& l = d.lambda;
  const auto& rh = d.rho;
  for (elem x = 0; x < nx; ++x) {
    const elem rt = rh[t[x]];
    const elem lt = l[t[x]];
    // u = s rho t - rho t + rho, v = s lambda t - lambda t + lambda,
    // as alternating products a b^-1 c evaluated left to right.
    m.u[x] = X.p(s[rt], rt, rh[x]);
    m.v[x] = X.p(s[lt], lt, l[x]);
    // a1 = s rho rho t - rho s rho t + s rho t - rho t + rho
    const elem srt = s[rt];
    m.a1[x] = X.op(X.p(s[rh[rt]], rh[srt], srt), X.p(FiniteGroup::id, rt, rh[x]));
    // a3 = lambda s lambda t - lambda lambda t + lambda lambda
    m.a3[x] = X.op(X.p(l[s[lt]], l[lt], l[l[x]]), FiniteGroup::id);
    // The two a2 bracketings share their tail s rho t - rho t + rho and
    // differ only in the head pair.
    const elem tail = X.p(srt, rt, rh[x]);
    const elem rslt = rh[s[lt]];
    m.a2_direct[x] = X.op(X.p(s[rh[l[x]]], rslt, FiniteGroup::id), tail);
    m.a2_via_t[x] = X.op(X.p(s[rh[lt]], rslt, FiniteGroup::id), tail);
  }
  // Arithmetic assembly: a1 = rho.u, a2 = u.v - u.lambda + lambda.u,
  // a3 = lambda.v.  Needs the finished u and v tables, hence a second pass.
  for (elem x = 0; x < nx; ++x) {
    m.a1_arith[x] = rh[m.u[x]];
    m.a2_arith[x] = X.p(m.u[m.v[x]], m.u[l[x]], l[m.u[x]]);
    m.a3_arith[x] = l[m.v[x]];
  }
  return m;
}

namespace {

// Iterated products used by condition (viii).  The twist of each layer acts
// through the base group: layer k acts on X via xi composed with
// (x', ..., b) -> h(x' * ... ) * b, which is a homomorphism exactly when
// (ii) holds — hence the precondition.
struct CompositionCarriers {
  SemidirectProduct g1;  // X x| B
  SemidirectProduct g2;  // X x| (X x| B)
  SemidirectProduct g3;  // X x| (X x| (X x| B))
};

CompositionCarriers build_carriers(const BicatData& d) {
  CompositionCarriers c;
  GroupAction xi{d.B, d.X, d.xi};
  c.g1 = semidirect_product_unchecked(d.X, d.B, xi);

  const int nx = d.X->order();
  auto lift = [&](const SemidirectProduct& base,
                  auto&& base_elem_to_b) {
    const int nbase = base.group->order();
    GroupAction a;
    a.acting = base.group;
    a.target = d.X;
    a.auts.resize(static_cast<size_t>(nbase) * nx);
    for (elem g = 0; g < nbase; ++g) {
      const elem b = base_elem_to_b(g);
      for (elem x = 0; x < nx; ++x) a.auts[g * nx + x] = d.act(b, x);
    }
    return semidirect_product_unchecked(d.X, base.group, a);
  };

  const int nb = d.B->order();
  c.g2 = lift(c.g1, [&](elem g) {
    const elem xp = g / nb;
    const elem b = g % nb;
    return d.B->op(d.h[xp], b);
  });
  const int n1 = c.g1.group->order();
  c.g3 = lift(c.g2, [&](elem g) {
    const elem xp = g / n1;
    const elem inner = g % n1;
    const elem xpp = inner / nb;
    const elem b = inner % nb;
    return d.B->op(d.h[d.X->op(xp, xpp)], b);
  });
  return c;
}

}  // namespace

MAlphaReport check_m_alpha_homs(const BicatData& d, ExecMode mode) {
  ConditionReport pre = check_conditions(d, mode);
  if (!pre.overall()) {
    for (const auto& e : pre.entries) {
      if (e.checked && !e.ok) {
        fail(ErrKind::PreconditionFailed,
             std::string("condition ") + cond_label(e.id) +
                 " fails, witness " + witness_string(e.witness),
             e.witness);
      }
    }
  }
  CompositionCarriers c = build_carriers(d);
  DerivedMaps dm = derive_maps(d);
  const FiniteGroup& X = *d.X;
  const int nb = d.B->order();
  const int n1 = c.g1.group->order();
  const int n2 = c.g2.group->order();
  const int n3 = c.g3.group->order();

  MAlphaReport rep;

  {  // m(x, (x', b)) = (u(x) v(x'), b)
    std::vector<elem> m_map(n2);
    for (elem g = 0; g < n2; ++g) {
      const elem x = g / n1;
      const elem xp = (g % n1) / nb;
      const elem b = g % nb;
      m_map[g] = X.op(dm.u[x], dm.v[xp]) * nb + b;
    }
    auto w = hom_violation(*c.g2.group, *c.g1.group, m_map, mode);
    rep.m_ok = !w.has_value();
    if (w) rep.m_witness = *w;
  }

  auto alpha_check = [&](const std::vector<elem>& a1,
                         const std::vector<elem>& a2,
                         const std::vector<elem>& a3, Witness& w_out,
                         bool& ok_out) {
    std::vector<elem> a_map(n3);
    for (elem g = 0; g < n3; ++g) {
      const elem x = g / n2;
      const elem rest = g % n2;
      const elem xp = rest / n1;
      const elem xpp = (rest % n1) / nb;
      const elem b = g % nb;
      a_map[g] = X.op(X.op(a1[x], a2[xp]), a3[xpp]) * nb + b;
    }
    auto w = hom_violation(*c.g3.group, *c.g1.group, a_map, mode);
    ok_out = !w.has_value();
    if (w) w_out = *w;
  };
  alpha_check(dm.a1_arith, dm.a2_arith, dm.a3_arith, rep.alpha_witness_arith,
              rep.alpha_ok_arith);
  alpha_check(dm.a1, dm.a2_direct, dm.a3, rep.alpha_witness_direct,
              rep.alpha_ok_direct);
  alpha_check(dm.a1, dm.a2_via_t, dm.a3, rep.alpha_witness_via_t,
              rep.alpha_ok_via_t);
  return rep;
}

ConditionReport full_check(const BicatData& d, ExecMode mode) {
  ConditionReport r = check_conditions(d, mode);
  if (!r.overall()) return r;
  MAlphaReport ma = check_m_alpha_homs(d, mode);
  CondEntry& e = r.entry(CondId::Composition);
  e.checked = true;
  e.ok = ma.ok();
  if (!ma.m_ok) {
    e.witness = ma.m_witness;
    e.note = "pair composite is not a homomorphism";
  } else if (!e.ok) {
    e.witness = ma.alpha_witness_arith;
    e.note = "reassociator is not a homomorphism";
  } else if (!ma.alpha_ok_direct || !ma.alpha_ok_via_t) {
    e.note = ma.alpha_ok_direct || ma.alpha_ok_via_t
                 ? std::string("word-formula reassociator matches under the ") +
                       (ma.alpha_ok_direct ? "direct" : "via-target") +
                       " bracketing only"
                 : "word-formula reassociator matches under neither bracketing";
  }
  return r;
}

bool is_crossed_module(const BicatData& d, Witness* witness) {
  const int nx = d.X->order();
  for (elem x = 0; x < nx; ++x) {
    if (d.s[x] != x || d.t[x] != x || d.lambda[x] != x || d.rho[x] != x) {
      fail(ErrKind::PreconditionFailed,
           "an endomorphism is not the identity at " + std::to_string(x),
           {x});
    }
  }
  const FiniteGroup& X = *d.X;
  const FiniteGroup& B = *d.B;
  for (elem b = 0; b < B.order(); ++b) {
    for (elem x = 0; x < nx; ++x) {
      if (d.h[d.act(b, x)] != B.conjugate(b, d.h[x])) {
        if (witness) *witness = {0, b, x};
        return false;
      }
    }
  }
  for (elem x = 0; x < nx; ++x) {
    for (elem y = 0; y < nx; ++y) {
      if (X.conjugate(x, y) != d.act(d.h[x], y)) {
        if (witness) *witness = {1, x, y};
        return false;
      }
    }
  }
  return true;
}

}  // namespace bicat
