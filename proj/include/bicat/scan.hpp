#pragma once
// Exhaustive-check kernels.  Every verifier in the engine walks an index
// space looking for the least violation; the walk exists in two forms, a
// plain serial loop (the reference) and an OpenMP partitioned loop with a
// deterministic min-reduction.  Tests pin the two against each other and
// the benchmark target times them side by side.

#include <cstdint>
#include <functional>

#include "bicat/common.hpp"

namespace bicat {

enum class ExecMode { Serial, Parallel };

ExecMode default_exec_mode();
void set_default_exec_mode(ExecMode m);

// Worker count for Parallel mode; n <= 0 restores the OpenMP default.
void set_worker_count(int n);
int worker_count();

// Least index in [0, n) where ok(i) is false, or n when the predicate holds
// everywhere.  ok must be pure: the result is independent of execution mode,
// worker count and scheduling.
int64_t scan_least_violation(int64_t n, const std::function<bool(int64_t)>& ok,
                             ExecMode mode);
int64_t scan_least_violation(int64_t n, const std::function<bool(int64_t)>& ok);

}  // namespace bicat
