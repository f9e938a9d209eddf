// Layered exhaustive search, its naive oracle, and the mutation harness.

#include "bicat/enumerate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "bicat/verify.hpp"

namespace bicat {

namespace {

// Survivor indices of a pure predicate over [0, n), ascending.  The
// parallel form fills a flag array so the output order never depends on
// scheduling; the serial form is the reference.
template <typename Pred>
std::vector<int64_t> keep_indices(int64_t n, ExecMode mode, Pred&& keep) {
  std::vector<char> flag(static_cast<size_t>(n), 0);
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for
    for (int64_t i = 0; i < n; ++i)
      flag[static_cast<size_t>(i)] = keep(i) ? 1 : 0;
  } else {
    for (int64_t i = 0; i < n; ++i)
      flag[static_cast<size_t>(i)] = keep(i) ? 1 : 0;
  }
  std::vector<int64_t> out;
  for (int64_t i = 0; i < n; ++i)
    if (flag[static_cast<size_t>(i)]) out.push_back(i);
  return out;
}

struct BudgetMeter {
  int64_t budget;
  int64_t inspected = 0;

  // Charge for the candidates a layer is about to inspect, or give up.
  void enter(int layer, int64_t candidates) {
    if (candidates > budget - inspected)
      fail(ErrKind::SearchBudgetExceeded,
           "enumeration budget exhausted entering layer " +
               std::to_string(layer),
           Witness{layer, inspected, candidates});
    inspected += candidates;
  }
};

// Leaf filter shared by every enumerator that selects on the full condition
// set.  Inner checks run serially; parallelism lives in the candidate loop.
bool accept_structure(const BicatData& d, StructureFingerprint& fp) {
  ConditionReport cr = check_conditions(d, ExecMode::Serial);
  if (!cr.overall()) return false;
  MAlphaReport ma = check_m_alpha_homs(d, ExecMode::Serial);
  if (!ma.ok()) return false;
  fp = StructureFingerprint{true, ma.alpha_ok_direct, ma.alpha_ok_via_t};
  return true;
}

// Canonical form: sort by serialized tables, drop exact duplicates.
void canonicalize(EnumerationResult& r) {
  std::vector<std::vector<elem>> keys(r.structures.size());
  for (size_t i = 0; i < r.structures.size(); ++i)
    keys[i] = r.structures[i].key();
  std::vector<size_t> perm(r.structures.size());
  std::iota(perm.begin(), perm.end(), size_t{0});
  std::sort(perm.begin(), perm.end(),
            [&](size_t a, size_t b) { return keys[a] < keys[b]; });
  EnumerationResult out;
  out.x_name = r.x_name;
  out.b_name = r.b_name;
  for (size_t i : perm) {
    if (!out.structures.empty() && keys[i] == out.structures.back().key())
      continue;
    out.structures.push_back(std::move(r.structures[i]));
    out.fingerprints.push_back(r.fingerprints[i]);
  }
  out.count = static_cast<int64_t>(out.structures.size());
  r = std::move(out);
}

// Runs the leaf filter over a candidate list and collects the survivors.
template <typename Build>
void collect_leaves(int64_t n, ExecMode mode, Build&& build,
                    EnumerationResult& r) {
  std::vector<char> flag(static_cast<size_t>(n), 0);
  std::vector<StructureFingerprint> fps(static_cast<size_t>(n));
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for
    for (int64_t i = 0; i < n; ++i) {
      BicatData d = build(i);
      flag[static_cast<size_t>(i)] =
          accept_structure(d, fps[static_cast<size_t>(i)]) ? 1 : 0;
    }
  } else {
    for (int64_t i = 0; i < n; ++i) {
      BicatData d = build(i);
      flag[static_cast<size_t>(i)] =
          accept_structure(d, fps[static_cast<size_t>(i)]) ? 1 : 0;
    }
  }
  for (int64_t i = 0; i < n; ++i) {
    if (!flag[static_cast<size_t>(i)]) continue;
    r.structures.push_back(build(i));
    r.fingerprints.push_back(fps[static_cast<size_t>(i)]);
  }
}

}  // namespace

EnumerationResult enumerate_bicat_data(GroupPtr X, GroupPtr B, int64_t budget,
                                       ExecMode mode) {
  const elem nx = X->order();
  const std::vector<GroupHom> endos = enumerate_endos(X);
  const std::vector<GroupHom> homs = enumerate_homs(X, B);
  const std::vector<GroupAction> actions = enumerate_actions(B, X);
  const int64_t ne = static_cast<int64_t>(endos.size());
  const int64_t nh = static_cast<int64_t>(homs.size());
  const int64_t na = static_cast<int64_t>(actions.size());

  EnumerationResult r;
  r.x_name = X->name();
  r.b_name = B->name();
  BudgetMeter meter{budget};

  // Layer 1: source/target pairs with s t = t and t s = s.
  meter.enter(1, ne * ne);
  const std::vector<int64_t> l1 = keep_indices(ne * ne, mode, [&](int64_t c) {
    const auto& s = endos[static_cast<size_t>(c / ne)].map;
    const auto& t = endos[static_cast<size_t>(c % ne)].map;
    for (elem x = 0; x < nx; ++x)
      if (s[t[x]] != t[x] || t[s[x]] != s[x]) return false;
    return true;
  });

  // Layer 2: unitor pairs whose cancellation against (s, t) is the
  // identity.
  meter.enter(2, static_cast<int64_t>(l1.size()) * ne * ne);
  const std::vector<int64_t> l2 = keep_indices(
      static_cast<int64_t>(l1.size()) * ne * ne, mode, [&](int64_t c) {
        const int64_t pair = l1[static_cast<size_t>(c / (ne * ne))];
        const auto& s = endos[static_cast<size_t>(pair / ne)].map;
        const auto& t = endos[static_cast<size_t>(pair % ne)].map;
        const auto& lam = endos[static_cast<size_t>((c / ne) % ne)].map;
        const auto& rh = endos[static_cast<size_t>(c % ne)].map;
        for (elem x = 0; x < nx; ++x) {
          const elem ls = lam[s[x]];
          const elem rs = rh[s[x]];
          if (X->p(lam[x], ls, t[ls]) != x || X->p(rh[x], rs, t[rs]) != x)
            return false;
        }
        return true;
      });

  // Layer 3: base maps collapsing s, t and both unitors.
  meter.enter(3, static_cast<int64_t>(l2.size()) * nh);
  const std::vector<int64_t> l3 = keep_indices(
      static_cast<int64_t>(l2.size()) * nh, mode, [&](int64_t c) {
        const int64_t inner = l2[static_cast<size_t>(c / nh)];
        const int64_t pair = l1[static_cast<size_t>(inner / (ne * ne))];
        const auto& s = endos[static_cast<size_t>(pair / ne)].map;
        const auto& t = endos[static_cast<size_t>(pair % ne)].map;
        const auto& lam = endos[static_cast<size_t>((inner / ne) % ne)].map;
        const auto& rh = endos[static_cast<size_t>(inner % ne)].map;
        const auto& h = homs[static_cast<size_t>(c % nh)].map;
        for (elem x = 0; x < nx; ++x) {
          if (h[s[x]] != h[x] || h[t[x]] != h[x]) return false;
          if (h[lam[x]] != h[x] || h[rh[x]] != h[x]) return false;
        }
        return true;
      });

  // Layer 4: actions whose composite with h is conjugation-equivariant.
  meter.enter(4, static_cast<int64_t>(l3.size()) * na);
  const std::vector<int64_t> l4 = keep_indices(
      static_cast<int64_t>(l3.size()) * na, mode, [&](int64_t c) {
        const int64_t l3c = l3[static_cast<size_t>(c / na)];
        const auto& h = homs[static_cast<size_t>(l3c % nh)].map;
        const GroupAction& a = actions[static_cast<size_t>(c % na)];
        for (elem b = 0; b < B->order(); ++b)
          for (elem x = 0; x < nx; ++x)
            if (h[a.apply(b, x)] != B->conjugate(b, h[x])) return false;
        return true;
      });

  // Layer 5: the full condition set, including both composite
  // homomorphism checks, decides membership.
  meter.enter(5, static_cast<int64_t>(l4.size()));
  auto build = [&](int64_t i) {
    const int64_t l4c = l4[static_cast<size_t>(i)];
    const int64_t l3c = l3[static_cast<size_t>(l4c / na)];
    const int64_t l2c = l2[static_cast<size_t>(l3c / nh)];
    const int64_t pair = l1[static_cast<size_t>(l2c / (ne * ne))];
    BicatData d;
    d.X = X;
    d.B = B;
    d.h = homs[static_cast<size_t>(l3c % nh)].map;
    d.s = endos[static_cast<size_t>(pair / ne)].map;
    d.t = endos[static_cast<size_t>(pair % ne)].map;
    d.lambda = endos[static_cast<size_t>((l2c / ne) % ne)].map;
    d.rho = endos[static_cast<size_t>(l2c % ne)].map;
    d.xi = actions[static_cast<size_t>(l4c % na)].auts;
    return d;
  };
  collect_leaves(static_cast<int64_t>(l4.size()), mode, build, r);
  canonicalize(r);
  return r;
}

EnumerationResult enumerate_bicat_data_naive(GroupPtr X, GroupPtr B,
                                             int64_t budget, ExecMode mode) {
  const std::vector<GroupHom> endos = enumerate_endos(X);
  const std::vector<GroupHom> homs = enumerate_homs(X, B);
  const std::vector<GroupAction> actions = enumerate_actions(B, X);
  const int64_t ne = static_cast<int64_t>(endos.size());
  const int64_t nh = static_cast<int64_t>(homs.size());
  const int64_t na = static_cast<int64_t>(actions.size());

  int64_t total = 1;
  for (int64_t f : {ne, ne, ne, ne, nh, na}) {
    if (total > budget / f)
      fail(ErrKind::SearchBudgetExceeded,
           "product space exceeds the naive scan budget",
           Witness{0, total, f});
    total *= f;
  }

  EnumerationResult r;
  r.x_name = X->name();
  r.b_name = B->name();
  auto build = [&](int64_t c) {
    BicatData d;
    d.X = X;
    d.B = B;
    d.xi = actions[static_cast<size_t>(c % na)].auts;
    c /= na;
    d.h = homs[static_cast<size_t>(c % nh)].map;
    c /= nh;
    d.rho = endos[static_cast<size_t>(c % ne)].map;
    c /= ne;
    d.lambda = endos[static_cast<size_t>(c % ne)].map;
    c /= ne;
    d.t = endos[static_cast<size_t>(c % ne)].map;
    d.s = endos[static_cast<size_t>(c / ne)].map;
    return d;
  };
  collect_leaves(total, mode, build, r);
  canonicalize(r);
  return r;
}

EnumerationResult enumerate_crossed_modules(GroupPtr X, GroupPtr B,
                                            int64_t budget, ExecMode mode) {
  const elem nx = X->order();
  const std::vector<GroupHom> homs = enumerate_homs(X, B);
  const std::vector<GroupAction> actions = enumerate_actions(B, X);
  const int64_t nh = static_cast<int64_t>(homs.size());
  const int64_t na = static_cast<int64_t>(actions.size());
  if (nh > budget / na)
    fail(ErrKind::SearchBudgetExceeded,
         "crossed-module candidate space exceeds the budget",
         Witness{1, nh, na});

  std::vector<elem> ident(static_cast<size_t>(nx));
  std::iota(ident.begin(), ident.end(), 0);

  EnumerationResult r;
  r.x_name = X->name();
  r.b_name = B->name();
  auto build = [&](int64_t c) {
    BicatData d;
    d.X = X;
    d.B = B;
    d.h = homs[static_cast<size_t>(c / na)].map;
    d.s = ident;
    d.t = ident;
    d.lambda = ident;
    d.rho = ident;
    d.xi = actions[static_cast<size_t>(c % na)].auts;
    return d;
  };
  const int64_t total = nh * na;
  std::vector<char> flag(static_cast<size_t>(total), 0);
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for
    for (int64_t i = 0; i < total; ++i) {
      BicatData d = build(i);
      flag[static_cast<size_t>(i)] = is_crossed_module(d) ? 1 : 0;
    }
  } else {
    for (int64_t i = 0; i < total; ++i) {
      BicatData d = build(i);
      flag[static_cast<size_t>(i)] = is_crossed_module(d) ? 1 : 0;
    }
  }
  for (int64_t i = 0; i < total; ++i) {
    if (!flag[static_cast<size_t>(i)]) continue;
    r.structures.push_back(build(i));
    r.fingerprints.push_back(StructureFingerprint{});
  }
  canonicalize(r);
  return r;
}

// --- Mutation harness ----------------------------------------------------

int MutationReport::rejected_count() const {
  int n = 0;
  for (const auto& o : outcomes) n += o.rejected ? 1 : 0;
  return n;
}

bool MutationReport::all_rejected() const {
  for (const auto& o : outcomes)
    if (o.rejected == o.noop) return false;
  return !outcomes.empty();
}

namespace {

struct TableSlot {
  std::vector<elem>* table;
  elem range;
};

TableSlot locate_table(BicatData& d, const std::string& name) {
  const elem nx = d.X->order();
  const elem nb = d.B->order();
  if (name == "h") return {&d.h, nb};
  if (name == "s") return {&d.s, nx};
  if (name == "t") return {&d.t, nx};
  if (name == "lambda") return {&d.lambda, nx};
  if (name == "rho") return {&d.rho, nx};
  if (name == "xi") return {&d.xi, nx};
  fail(ErrKind::UsageError, "unknown structure table '" + name + "'");
}

void apply_mutation(BicatData& d, const MutationSpec& spec, bool& noop) {
  TableSlot slot = locate_table(d, spec.table);
  if (spec.entry < 0 || spec.entry >= static_cast<int64_t>(slot.table->size()))
    fail(ErrKind::PreconditionFailed,
         "mutation entry outside table '" + spec.table + "'",
         Witness{spec.entry});
  if (spec.value < 0 || spec.value >= slot.range)
    fail(ErrKind::PreconditionFailed,
         "mutation value outside the codomain of '" + spec.table + "'",
         Witness{spec.value});
  elem& cell = (*slot.table)[static_cast<size_t>(spec.entry)];
  noop = cell == spec.value;
  cell = spec.value;
}

struct CellSlot {
  std::vector<int>* table;
  int range;
  bool partial;
};

CellSlot locate_table(RealizedBicategory& rb, const std::string& name) {
  if (name == "one_dom") return {&rb.one_dom, rb.n_obj, false};
  if (name == "one_cod") return {&rb.one_cod, rb.n_obj, false};
  if (name == "two_src") return {&rb.two_src, rb.n_one, false};
  if (name == "two_tgt") return {&rb.two_tgt, rb.n_one, false};
  if (name == "id_one") return {&rb.id_one, rb.n_one, false};
  if (name == "id_two") return {&rb.id_two, rb.n_two, false};
  if (name == "vcomp") return {&rb.vcomp, rb.n_two, true};
  if (name == "tensor_one") return {&rb.tensor_one, rb.n_one, true};
  if (name == "tensor_two") return {&rb.tensor_two, rb.n_two, true};
  if (name == "unitor_l") return {&rb.unitor_l, rb.n_two, false};
  if (name == "unitor_r") return {&rb.unitor_r, rb.n_two, false};
  if (name == "assoc") return {&rb.assoc, rb.n_two, true};
  fail(ErrKind::UsageError, "unknown cell table '" + name + "'");
}

void apply_mutation(RealizedBicategory& rb, const MutationSpec& spec,
                    bool& noop) {
  CellSlot slot = locate_table(rb, spec.table);
  if (spec.entry < 0 || spec.entry >= static_cast<int64_t>(slot.table->size()))
    fail(ErrKind::PreconditionFailed,
         "mutation entry outside table '" + spec.table + "'",
         Witness{spec.entry});
  const bool undefined_ok = slot.partial && spec.value == -1;
  if (!undefined_ok && (spec.value < 0 || spec.value >= slot.range))
    fail(ErrKind::PreconditionFailed,
         "mutation value outside the cell range of '" + spec.table + "'",
         Witness{spec.value});
  int& cell = (*slot.table)[static_cast<size_t>(spec.entry)];
  noop = cell == spec.value;
  cell = spec.value;
}

}  // namespace

MutationReport mutate_and_expect_reject(const BicatData& d,
                                        const std::vector<MutationSpec>& specs,
                                        ExecMode mode) {
  if (!full_check(d, mode).overall())
    fail(ErrKind::InvariantViolation,
         "mutation base structure fails its own verification");
  MutationReport rep;
  for (const MutationSpec& spec : specs) {
    MutationOutcome out;
    out.spec = spec;
    BicatData mutant = d;
    apply_mutation(mutant, spec, out.noop);
    ConditionReport cr = full_check(mutant, mode);
    for (const CondEntry& e : cr.entries) {
      if (!e.checked || e.ok) continue;
      out.rejected = true;
      out.reason = std::string(cond_label(e.id)) + " " + cond_name(e.id);
      out.witness = e.witness;
      break;
    }
    rep.outcomes.push_back(std::move(out));
  }
  return rep;
}

MutationReport mutate_and_expect_reject(
    const RealizedBicategory& rb, const std::vector<MutationSpec>& specs) {
  if (!verify_bicategory(rb).ok())
    fail(ErrKind::InvariantViolation,
         "mutation base bicategory fails its own verification");
  MutationReport rep;
  for (const MutationSpec& spec : specs) {
    MutationOutcome out;
    out.spec = spec;
    RealizedBicategory mutant = rb;
    apply_mutation(mutant, spec, out.noop);
    AxiomReport ar = verify_bicategory(mutant);
    for (const AxiomLine& line : ar.lines) {
      if (line.ok) continue;
      out.rejected = true;
      out.reason = line.name;
      out.witness = line.witness;
      break;
    }
    rep.outcomes.push_back(std::move(out));
  }
  return rep;
}

std::vector<MutationSpec> random_mutations(const BicatData& d, int count,
                                           std::uint64_t seed) {
  const elem nx = d.X->order();
  const elem nb = d.B->order();
  struct Entry {
    const char* name;
    const std::vector<elem>* table;
    elem range;
  };
  const Entry tables[] = {
      {"h", &d.h, nb},           {"s", &d.s, nx},   {"t", &d.t, nx},
      {"lambda", &d.lambda, nx}, {"rho", &d.rho, nx}, {"xi", &d.xi, nx},
  };
  std::vector<int> eligible;
  for (int i = 0; i < 6; ++i)
    if (tables[i].range >= 2 && !tables[i].table->empty()) eligible.push_back(i);
  if (eligible.empty())
    fail(ErrKind::PreconditionFailed,
         "no table admits a value-changing mutation");

  // mt19937_64 with plain modulo: the standard distributions are not
  // pinned across library implementations, the raw stream is.
  std::mt19937_64 rng(seed);
  std::vector<MutationSpec> specs;
  specs.reserve(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) {
    const Entry& e = tables[eligible[rng() % eligible.size()]];
    MutationSpec spec;
    spec.table = e.name;
    spec.entry = static_cast<int64_t>(rng() % e.table->size());
    const elem old = (*e.table)[static_cast<size_t>(spec.entry)];
    spec.value = static_cast<elem>(rng() % (e.range - 1));
    if (spec.value >= old) ++spec.value;
    specs.push_back(std::move(spec));
  }
  return specs;
}

}  // namespace bicat
