#include "bicat/scan.hpp"

#include <vector>

#include "doctest.h"

#include "bicat/enumerate.hpp"
#include "bicat/groups_zoo.hpp"

using namespace bicat;

namespace {

// Restores execution defaults on scope exit so test order cannot leak.
struct ModeGuard {
  ExecMode saved_mode = default_exec_mode();
  ~ModeGuard() {
    set_default_exec_mode(saved_mode);
    set_worker_count(0);
  }
};

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

bool reports_equal(const ConditionReport& a, const ConditionReport& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (size_t i = 0; i < a.entries.size(); ++i) {
    const CondEntry& x = a.entries[i];
    const CondEntry& y = b.entries[i];
    if (x.id != y.id || x.checked != y.checked || x.ok != y.ok ||
        x.witness != y.witness || x.note != y.note)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("scan kernels find the same least violation in both modes") {
  ModeGuard guard;
  const int64_t n = 10'000;
  for (int64_t bad : {int64_t{0}, int64_t{1}, n / 2, n - 1, n}) {
    // bad == n means no violation anywhere.
    auto ok = [bad](int64_t i) { return i != bad; };
    const int64_t serial = scan_least_violation(n, ok, ExecMode::Serial);
    const int64_t parallel = scan_least_violation(n, ok, ExecMode::Parallel);
    CHECK(serial == bad);
    CHECK(parallel == bad);
  }
  // Multiple violations: both modes report the least, not an arbitrary one.
  auto ok = [](int64_t i) { return i % 37 != 5; };
  CHECK(scan_least_violation(n, ok, ExecMode::Serial) == 5);
  CHECK(scan_least_violation(n, ok, ExecMode::Parallel) == 5);
  // Empty and single-element spaces.
  auto never = [](int64_t) { return false; };
  CHECK(scan_least_violation(0, never, ExecMode::Parallel) == 0);
  CHECK(scan_least_violation(1, never, ExecMode::Parallel) == 0);
}

TEST_CASE("worker count does not change scan results") {
  ModeGuard guard;
  auto ok = [](int64_t i) { return i < 7777; };
  for (int workers : {1, 2, 3, 8}) {
    set_worker_count(workers);
    CHECK(scan_least_violation(100'000, ok, ExecMode::Parallel) == 7777);
  }
}

TEST_CASE("condition reports agree fieldwise across modes") {
  ModeGuard guard;
  BicatData good = conjugation_data(sym3());
  BicatData bad = good;
  for (elem b = 0; b < 6; ++b)
    for (elem x = 0; x < 6; ++x) bad.xi[b * 6 + x] = x;  // breaks (ii)

  for (const BicatData* d : {&good, &bad}) {
    const ConditionReport serial = full_check(*d, ExecMode::Serial);
    const ConditionReport parallel = full_check(*d, ExecMode::Parallel);
    CHECK(reports_equal(serial, parallel));
  }

  const MAlphaReport ms = check_m_alpha_homs(good, ExecMode::Serial);
  const MAlphaReport mp = check_m_alpha_homs(good, ExecMode::Parallel);
  CHECK(ms.m_ok == mp.m_ok);
  CHECK(ms.alpha_ok_arith == mp.alpha_ok_arith);
  CHECK(ms.alpha_ok_direct == mp.alpha_ok_direct);
  CHECK(ms.alpha_ok_via_t == mp.alpha_ok_via_t);
  CHECK(ms.m_witness == mp.m_witness);
}

TEST_CASE("enumeration is mode- and worker-independent") {
  ModeGuard guard;
  const EnumerationResult serial =
      enumerate_bicat_data(klein4(), cyclic(2), kDefaultSearchBudget,
                           ExecMode::Serial);
  set_worker_count(3);
  const EnumerationResult parallel =
      enumerate_bicat_data(klein4(), cyclic(2), kDefaultSearchBudget,
                           ExecMode::Parallel);
  REQUIRE(serial.count == parallel.count);
  CHECK(serial.count == 191);
  for (size_t i = 0; i < serial.structures.size(); ++i) {
    CHECK(serial.structures[i].key() == parallel.structures[i].key());
    CHECK(serial.fingerprints[i].alpha_direct ==
          parallel.fingerprints[i].alpha_direct);
    CHECK(serial.fingerprints[i].alpha_via_t ==
          parallel.fingerprints[i].alpha_via_t);
  }
}

TEST_CASE("the default mode is adjustable and sticky") {
  ModeGuard guard;
  set_default_exec_mode(ExecMode::Serial);
  CHECK(default_exec_mode() == ExecMode::Serial);
  set_default_exec_mode(ExecMode::Parallel);
  CHECK(default_exec_mode() == ExecMode::Parallel);
  set_worker_count(2);
  CHECK(worker_count() == 2);
  set_worker_count(0);
  CHECK(worker_count() >= 1);
}
