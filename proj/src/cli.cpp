// Subcommand dispatch and report rendering.  Every command builds one
// ordered fact tree; machine mode prints it as JSON, text mode walks the
// same tree, so the two formats carry identical facts by construction.

#include "bicat/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bicat/enumerate.hpp"
#include "bicat/io.hpp"
#include "bicat/path.hpp"
#include "bicat/verify.hpp"

namespace bicat {

namespace {

using OJson = nlohmann::ordered_json;

bool is_scalar(const OJson& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_text(const OJson& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void put_multiline(std::ostream& out, const std::string& pad,
                   const std::string& s) {
  std::istringstream lines(s);
  std::string line;
  while (std::getline(lines, line)) out << pad << line << '\n';
}

void render_text(const OJson& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<size_t>(indent), ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const OJson& v = it.value();
      if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
        out << pad << it.key() << ": [";
        for (size_t k = 0; k < v.size(); ++k)
          out << (k ? " " : "") << scalar_text(v[k]);
        out << "]\n";
      } else if (is_scalar(v)) {
        const std::string s = scalar_text(v);
        if (s.find('\n') == std::string::npos) {
          out << pad << it.key() << ": " << s << '\n';
        } else {
          out << pad << it.key() << ":\n";
          put_multiline(out, pad + "  ", s);
        }
      } else {
        out << pad << it.key() << ":\n";
        render_text(v, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const OJson& v : j) {
      if (is_scalar(v)) {
        const std::string s = scalar_text(v);
        if (s.find('\n') == std::string::npos) {
          out << pad << "- " << s << '\n';
        } else {
          out << pad << "-\n";
          put_multiline(out, pad + "  ", s);
        }
      } else {
        out << pad << "-\n";
        render_text(v, out, indent + 2);
      }
    }
  }
}

void emit(const OJson& facts, const std::string& format, std::ostream& out) {
  if (format == "machine")
    out << facts.dump(1) << '\n';
  else
    render_text(facts, out, 0);
}

OJson group_facts(const FiniteGroup& g) {
  OJson j;
  j["name"] = g.name();
  j["order"] = g.order();
  return j;
}

int cmd_verify(const std::string& path, ExecMode mode, OJson& facts) {
  const BicatData d = load_structure_file(path);
  facts["command"] = "verify";
  facts["input"] = path;
  facts["x"] = group_facts(*d.X);
  facts["b"] = group_facts(*d.B);

  ConditionReport cr = check_conditions(d, mode);
  OJson composite;
  if (cr.overall()) {
    const MAlphaReport ma = check_m_alpha_homs(d, mode);
    CondEntry e{CondId::Composition, true, ma.ok(), {}, ""};
    if (!ma.m_ok) {
      e.witness = ma.m_witness;
      e.note = "pair composite is not a homomorphism";
    } else if (!e.ok) {
      e.witness = ma.alpha_witness_arith;
      e.note = "reassociator is not a homomorphism";
    } else if (!ma.alpha_ok_direct || !ma.alpha_ok_via_t) {
      e.note =
          ma.alpha_ok_direct || ma.alpha_ok_via_t
              ? std::string("word-formula reassociator matches under the ") +
                    (ma.alpha_ok_direct ? "direct" : "via-target") +
                    " bracketing only"
              : "word-formula reassociator matches under neither bracketing";
    }
    cr.entry(CondId::Composition) = e;
    composite["pair_composite_hom"] = ma.m_ok;
    composite["reassociator_hom_arith"] = ma.alpha_ok_arith;
    composite["reassociator_hom_direct"] = ma.alpha_ok_direct;
    composite["reassociator_hom_via_t"] = ma.alpha_ok_via_t;
  }

  OJson conds = OJson::array();
  for (const CondEntry& e : cr.entries) {
    OJson row;
    row["label"] = cond_label(e.id);
    row["name"] = cond_name(e.id);
    row["checked"] = e.checked;
    row["ok"] = e.ok;
    if (!e.witness.empty()) row["witness"] = e.witness;
    if (!e.note.empty()) row["note"] = e.note;
    conds.push_back(std::move(row));
  }
  facts["conditions"] = std::move(conds);
  if (!composite.is_null()) facts["composite"] = std::move(composite);

  const bool ok = cr.overall() && cr.entry(CondId::Composition).checked;
  facts["ok"] = ok;
  return ok ? 0 : 1;
}

int cmd_enumerate(const std::string& x_path, const std::string& b_path,
                  bool crossed, bool dump, int64_t budget, ExecMode mode,
                  OJson& facts) {
  const GroupPtr X = load_group_file(x_path);
  const GroupPtr B = load_group_file(b_path);
  facts["command"] = "enumerate";
  facts["x_input"] = x_path;
  facts["b_input"] = b_path;
  facts["x"] = group_facts(*X);
  facts["b"] = group_facts(*B);
  facts["crossed_modules"] = crossed;

  const EnumerationResult r = crossed
                                  ? enumerate_crossed_modules(X, B, budget, mode)
                                  : enumerate_bicat_data(X, B, budget, mode);
  facts["count"] = r.count;
  OJson fps = OJson::array();
  for (size_t i = 0; i < r.fingerprints.size(); ++i) {
    const StructureFingerprint& fp = r.fingerprints[i];
    OJson row;
    row["index"] = i;
    row["composition_checked"] = fp.composition_checked;
    if (fp.composition_checked) {
      row["alpha_direct"] = fp.alpha_direct;
      row["alpha_via_t"] = fp.alpha_via_t;
    }
    fps.push_back(std::move(row));
  }
  facts["fingerprints"] = std::move(fps);
  if (dump) {
    OJson dumps = OJson::array();
    for (const BicatData& d : r.structures)
      dumps.push_back(write_structure_file(d, x_path, b_path));
    facts["structures"] = std::move(dumps);
  }
  facts["ok"] = true;
  return 0;
}

int cmd_realize(const std::string& path, bool check_axioms,
                const std::string& variant, bool dump, ExecMode mode,
                OJson& facts) {
  const BicatData d = load_structure_file(path);
  facts["command"] = "realize";
  facts["input"] = path;

  ConditionReport cr = check_conditions(d, mode);
  if (!cr.overall()) {
    const CondEntry* bad = nullptr;
    for (const CondEntry& e : cr.entries)
      if (e.checked && !e.ok) {
        bad = &e;
        break;
      }
    facts["error"] = std::string("structure fails condition ") +
                     cond_label(bad->id) + " (" + cond_name(bad->id) + ")";
    if (!bad->witness.empty()) facts["witness"] = bad->witness;
    facts["ok"] = false;
    return 1;
  }
  const MAlphaReport ma = check_m_alpha_homs(d, mode);
  if (!ma.ok()) {
    facts["error"] = ma.m_ok ? "reassociator is not a homomorphism"
                             : "pair composite is not a homomorphism";
    facts["ok"] = false;
    return 1;
  }

  AssocVariant v = AssocVariant::Arithmetic;
  if (variant == "via-t")
    v = AssocVariant::ViaT;
  else if (variant == "direct")
    v = AssocVariant::Direct;
  facts["variant"] = variant;

  const DecomposeResult dec = decompose(d);
  const RealizedBicategory rb = realize(dec.ext, v);
  facts["objects"] = rb.n_obj;
  facts["one_cells"] = rb.n_one;
  facts["two_cells"] = rb.n_two;

  bool ok = true;
  if (check_axioms) {
    const AxiomReport ar = verify_bicategory(rb);
    OJson lines = OJson::array();
    for (const AxiomLine& line : ar.lines) {
      OJson row;
      row["name"] = line.name;
      row["ok"] = line.ok;
      row["cases"] = line.cases;
      if (!line.witness.empty()) row["witness"] = line.witness;
      lines.push_back(std::move(row));
    }
    facts["axioms"] = std::move(lines);
    ok = ar.ok();
  }
  if (dump) facts["cells"] = OJson::parse(dump_cells(rb));
  facts["ok"] = ok;
  return ok ? 0 : 1;
}

int cmd_maltsev(const std::string& path, bool equivalence, ExecMode mode,
                OJson& facts) {
  (void)mode;
  const TripleFile tf = load_triple_file(path);
  facts["command"] = equivalence ? "maltsev equiv" : "maltsev p1";
  facts["input"] = path;
  facts["group"] = group_facts(*tf.A);

  bool all_ok = true;
  OJson rows = OJson::array();
  for (size_t i = 0; i < tf.triples.size(); ++i) {
    OJson row;
    row["name"] = tf.names[i];
    const auto violation = triple_violation(tf.triples[i]);
    row["triple_valid"] = !violation.has_value();
    if (violation) {
      row["violation"] = *violation;
      all_ok = false;
      rows.push_back(std::move(row));
      continue;
    }
    Witness w1, w2;
    const bool p1 = check_P1(tf.triples[i], &w1);
    row["p1"] = p1;
    if (!p1) row["p1_witness"] = w1;
    if (equivalence) {
      const bool p1p = check_P1prime(tf.triples[i], &w2);
      row["p1_prime"] = p1p;
      if (!p1p) row["p1_prime_witness"] = w2;
      row["agree"] = p1 == p1p;
      if (p1 != p1p) all_ok = false;
    } else if (!p1) {
      all_ok = false;
    }
    rows.push_back(std::move(row));
  }
  facts["triples"] = std::move(rows);
  facts["ok"] = all_ok;
  return all_ok ? 0 : 1;
}

int cmd_path_demo(int dim, int grid, int paths, std::uint64_t seed,
                  double tolerance, OJson& facts) {
  if (grid < 2 || grid % 2 != 0)
    fail(ErrKind::UsageError, "--grid must be even and at least 2");
  PathSuiteConfig cfg;
  cfg.dim = dim;
  cfg.grid = grid;
  cfg.paths = paths;
  cfg.seed = seed;
  cfg.tolerance = tolerance;
  const PathSuiteReport rep = verify_path_axioms(cfg);
  facts["command"] = "path demo";
  facts["dim"] = dim;
  facts["grid"] = grid;
  facts["paths"] = rep.paths;
  facts["seed"] = seed;
  facts["tolerance"] = rep.tolerance;
  facts["max_tensor_concat"] = rep.max_tensor_concat;
  facts["max_additivity"] = rep.max_additivity;
  facts["max_boundary"] = rep.max_boundary;
  facts["max_d0_d1"] = rep.max_d0_d1;
  facts["ok"] = rep.ok;
  return rep.ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  if (const char* workers = std::getenv("BICAT_WORKERS")) {
    const int n = std::atoi(workers);
    if (n > 0) set_worker_count(n);
  }

  CLI::App app{
      "verify, enumerate and realize bicategory structures internal to "
      "finite groups"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "machine"}));

  std::string verify_path;
  CLI::App* verify = app.add_subcommand(
      "verify", "check every structure condition on one file");
  verify->add_option("structure-file", verify_path, "structure file")
      ->required();

  std::string enum_x, enum_b;
  bool enum_crossed = false, enum_dump = false;
  int64_t enum_budget = kDefaultSearchBudget;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list every valid structure over two groups");
  enumerate->add_option("--x", enum_x, "group file for the 2-cell carrier")
      ->required();
  enumerate->add_option("--b", enum_b, "group file for the base")->required();
  enumerate->add_flag("--crossed-modules", enum_crossed,
                      "restrict to identity source/target/unitors");
  enumerate->add_flag("--dump", enum_dump,
                      "include each structure in file format");
  enumerate->add_option("--budget", enum_budget,
                        "candidate inspection budget");

  std::string realize_path, realize_variant = "arith";
  bool realize_axioms = false, realize_dump = false;
  CLI::App* realize = app.add_subcommand(
      "realize", "build the cell tables over a structure file");
  realize->add_option("structure-file", realize_path, "structure file")
      ->required();
  realize->add_flag("--check-axioms", realize_axioms,
                    "run the bicategory axiom passes on the result");
  realize->add_option("--variant", realize_variant,
                      "reassociator assembly (arith is the coherent default; "
                      "via-t and direct are the word-formula bracketings)")
      ->check(CLI::IsMember({"arith", "via-t", "direct"}));
  realize->add_flag("--dump-cells", realize_dump,
                    "include the full cell tables");

  CLI::App* maltsev =
      app.add_subcommand("maltsev", "checks on source/target triples");
  maltsev->require_subcommand(1);
  std::string p1_path, equiv_path;
  CLI::App* p1 = maltsev->add_subcommand(
      "p1", "is the ternary map a homomorphism on composable tuples");
  p1->add_option("triple-file", p1_path, "triple file")->required();
  CLI::App* equiv = maltsev->add_subcommand(
      "equiv", "does the single-map criterion agree with the ternary one");
  equiv->add_option("triple-file", equiv_path, "triple file")->required();

  CLI::App* path = app.add_subcommand("path", "sampled-path checks");
  path->require_subcommand(1);
  int demo_dim = 3, demo_grid = 64, demo_paths = 100;
  std::uint64_t demo_seed = 1;
  double demo_tol = 1e-12;
  CLI::App* demo = path->add_subcommand(
      "demo", "compare the algebraic composite with direct concatenation");
  demo->add_option("--dim", demo_dim, "ambient dimension")
      ->check(CLI::PositiveNumber);
  demo->add_option("--grid", demo_grid, "samples per unit interval (even)");
  demo->add_option("--paths", demo_paths, "number of seeded path pairs")
      ->check(CLI::PositiveNumber);
  demo->add_option("--seed", demo_seed, "stream seed");
  demo->add_option("--tolerance", demo_tol, "acceptance tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  const ExecMode mode = default_exec_mode();
  try {
    OJson facts;
    int rc = 0;
    if (app.got_subcommand(verify)) {
      rc = cmd_verify(verify_path, mode, facts);
    } else if (app.got_subcommand(enumerate)) {
      rc = cmd_enumerate(enum_x, enum_b, enum_crossed, enum_dump, enum_budget,
                         mode, facts);
    } else if (app.got_subcommand(realize)) {
      rc = cmd_realize(realize_path, realize_axioms, realize_variant,
                       realize_dump, mode, facts);
    } else if (app.got_subcommand(maltsev)) {
      rc = maltsev->got_subcommand(p1) ? cmd_maltsev(p1_path, false, mode, facts)
                                       : cmd_maltsev(equiv_path, true, mode,
                                                     facts);
    } else {
      rc = cmd_path_demo(demo_dim, demo_grid, demo_paths, demo_seed, demo_tol,
                         facts);
    }
    emit(facts, format, out);
    return rc;
  } catch (const EngineError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 2;
  }
}

}  // namespace bicat
