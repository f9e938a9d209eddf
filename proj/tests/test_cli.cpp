#include "bicat/cli.hpp"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

const std::string kData = BICAT_DATA_DIR;

struct CliRun {
  int rc = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "bicat");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.rc = bicat::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("verify: exit code tracks the verdict") {
  const CliRun good = run({"verify", kData + "/s3-conjugation.struct"});
  CHECK(good.rc == 0);
  CHECK(good.out.find("ok: true") != std::string::npos);
  CHECK(good.out.find("(viii)") != std::string::npos);

  const CliRun bad = run({"verify", kData + "/broken-retraction.struct"});
  CHECK(bad.rc == 1);
  CHECK(bad.out.find("ok: false") != std::string::npos);

  const CliRun gone = run({"verify", kData + "/nonexistent.struct"});
  CHECK(gone.rc == 2);
  CHECK(gone.err.find("cannot open file") != std::string::npos);
}

TEST_CASE("verify: machine format is parseable JSON") {
  const CliRun r = run(
      {"--format", "machine", "verify", kData + "/s3-conjugation.struct"});
  REQUIRE(r.rc == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == true);
  REQUIRE(j["conditions"].is_array());
  CHECK(j["conditions"].size() == 9);
  for (const auto& c : j["conditions"]) {
    CHECK(c["ok"] == true);
    CHECK(c["checked"] == true);
  }
  CHECK(j["composite"]["pair_composite_hom"] == true);
}

TEST_CASE("enumerate: counts and fingerprints") {
  const CliRun r = run({"--format", "machine", "enumerate", "--x",
                        kData + "/z2.group", "--b", kData + "/z2.group"});
  REQUIRE(r.rc == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 3);
  CHECK(j["fingerprints"].size() == 3);

  // An exhausted budget is an unusable-input outcome, not a failed check.
  const CliRun capped =
      run({"enumerate", "--x", kData + "/z3.group", "--b",
           kData + "/z3.group", "--budget", "10"});
  CHECK(capped.rc == 2);
  CHECK(capped.err.find("SearchBudgetExceeded") != std::string::npos);
}

TEST_CASE("realize: axioms on the conjugation fixture") {
  const CliRun r = run({"--format", "machine", "realize",
                        kData + "/s3-conjugation.struct", "--check-axioms"});
  REQUIRE(r.rc == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["objects"] == 6);
  CHECK(j["one_cells"] == 36);
  CHECK(j["two_cells"] == 36);
  bool saw_pentagon = false;
  for (const auto& line : j["axioms"]) {
    CHECK(line["ok"] == true);
    if (line["name"] == "pentagon") {
      saw_pentagon = true;
      CHECK(line["cases"] == 7776);
    }
  }
  CHECK(saw_pentagon);

  const CliRun bad =
      run({"realize", kData + "/broken-retraction.struct"});
  CHECK(bad.rc == 1);
}

TEST_CASE("maltsev: property and equivalence modes") {
  const CliRun p1 = run({"maltsev", "p1", kData + "/demo.triple"});
  CHECK(p1.rc == 1);  // the collapse triple fails (P1)
  CHECK(p1.out.find("collapse") != std::string::npos);

  const CliRun equiv = run({"maltsev", "equiv", kData + "/demo.triple"});
  CHECK(equiv.rc == 0);  // both variants agree on every triple
  CHECK(equiv.out.find("agree: true") != std::string::npos);
}

TEST_CASE("path demo emits suite maxima") {
  const CliRun r = run({"--format", "machine", "path", "demo", "--grid", "16",
                        "--paths", "5"});
  REQUIRE(r.rc == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["paths"] == 5);
  CHECK(j["max_d0_d1"] == 0.0);
  CHECK(double(j["max_tensor_concat"]) <= 1e-12);

  const CliRun odd = run({"path", "demo", "--grid", "15"});
  CHECK(odd.rc == 2);
}

TEST_CASE("usage errors exit 2 without touching stdout") {
  const CliRun bogus = run({"frobnicate"});
  CHECK(bogus.rc == 2);
  CHECK(bogus.out.empty());

  const CliRun missing = run({"enumerate", "--x", kData + "/z2.group"});
  CHECK(missing.rc == 2);  // --b is required
}

TEST_CASE("output is byte-deterministic and worker-count independent") {
  const std::vector<std::string> args = {"--format", "machine", "realize",
                                         kData + "/s3-conjugation.struct",
                                         "--check-axioms", "--dump-cells"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  CHECK(a.rc == b.rc);
  CHECK(a.out == b.out);

  setenv("BICAT_WORKERS", "1", 1);
  const CliRun w1 = run(args);
  setenv("BICAT_WORKERS", "2", 1);
  const CliRun w2 = run(args);
  unsetenv("BICAT_WORKERS");
  const CliRun w0 = run(args);
  CHECK(w1.out == a.out);
  CHECK(w2.out == a.out);
  CHECK(w0.out == a.out);
}

TEST_CASE("text format renders nested reports") {
  const CliRun r = run({"verify", kData + "/s3-conjugation.struct"});
  REQUIRE(r.rc == 0);
  // One line per condition with label and name.
  CHECK(r.out.find("(iii)") != std::string::npos);
  CHECK(r.out.find("s*t = t and t*s = s") != std::string::npos);
  CHECK(r.out.find("composite and reassociator are homs") !=
        std::string::npos);
}
