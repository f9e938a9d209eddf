#pragma once
// Command dispatch behind the bicat binary, callable in-process so tests
// can drive the exact code path the executable runs.  Exit code 0 when all
// requested checks pass, 1 when a check fails (the report is still
// emitted), 2 when inputs or flags are unusable.

#include <iosfwd>

namespace bicat {

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace bicat
