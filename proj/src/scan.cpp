#include "bicat/scan.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bicat {

namespace {
ExecMode g_mode = ExecMode::Parallel;
int g_workers = 0;  // 0 = leave the OpenMP default alone
}  // namespace

ExecMode default_exec_mode() { return g_mode; }
void set_default_exec_mode(ExecMode m) { g_mode = m; }

void set_worker_count(int n) {
  g_workers = n > 0 ? n : 0;
#ifdef _OPENMP
  if (g_workers > 0) {
    omp_set_num_threads(g_workers);
  }
#endif
}

int worker_count() {
#ifdef _OPENMP
  return g_workers > 0 ? g_workers : omp_get_max_threads();
#else
  return 1;
#endif
}

const char* to_string(ErrKind k) {
  switch (k) {
    case ErrKind::NotClosed: return "NotClosed";
    case ErrKind::NoIdentity: return "NoIdentity";
    case ErrKind::NoInverse: return "NoInverse";
    case ErrKind::NotAssociative: return "NotAssociative";
    case ErrKind::NotHomomorphism: return "NotHomomorphism";
    case ErrKind::ActionInvalid: return "ActionInvalid";
    case ErrKind::PreconditionFailed: return "PreconditionFailed";
    case ErrKind::NotComposable: return "NotComposable";
    case ErrKind::DecompositionFailed: return "DecompositionFailed";
    case ErrKind::InvariantViolation: return "InvariantViolation";
    case ErrKind::P1Fails: return "P1Fails";
    case ErrKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrKind::ParseError: return "ParseError";
    case ErrKind::UsageError: return "UsageError";
  }
  return "UnknownError";
}

std::string witness_string(const Witness& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

namespace {

int64_t serial_scan(int64_t n, const std::function<bool(int64_t)>& ok) {
  for (int64_t i = 0; i < n; ++i) {
    if (!ok(i)) return i;
  }
  return n;
}

// Parallel variant: walk the space in blocks so a violation near the front
// stops the scan early, reduce to the minimum failing index inside each
// block so the answer matches the serial reference exactly.
int64_t parallel_scan(int64_t n, const std::function<bool(int64_t)>& ok) {
#ifndef _OPENMP
  return serial_scan(n, ok);
#else
  constexpr int64_t kBlock = 1 << 16;
  for (int64_t base = 0; base < n; base += kBlock) {
    const int64_t end = std::min(n, base + kBlock);
    int64_t found = end;
#pragma omp parallel for schedule(static) reduction(min : found)
    for (int64_t i = base; i < end; ++i) {
      if (!ok(i) && i < found) found = i;
    }
    if (found < end) return found;
  }
  return n;
#endif
}

}  // namespace

int64_t scan_least_violation(int64_t n, const std::function<bool(int64_t)>& ok,
                             ExecMode mode) {
  return mode == ExecMode::Serial ? serial_scan(n, ok) : parallel_scan(n, ok);
}

int64_t scan_least_violation(int64_t n,
                             const std::function<bool(int64_t)>& ok) {
  return scan_least_violation(n, ok, g_mode);
}

}  // namespace bicat
