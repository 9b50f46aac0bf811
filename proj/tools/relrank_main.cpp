// Command-line front end: load matroid/table specs, run the oracles and
// axiom suites, emit deterministic reports.
//
// Exit codes: 0 pass, 1 semantic violation, 2 parse error, 3 unknown label,
// 4 precondition failure.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relrank/enumeration.hpp"
#include "relrank/fincof.hpp"
#include "relrank/io.hpp"
#include "relrank/matroid.hpp"
#include "relrank/table.hpp"

namespace {

using namespace relrank;

constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnknownLabel = 3;
constexpr int kExitPrecondition = 4;

struct Output {
  bool machine = false;

  void emit(const std::string& key, const std::string& value) const {
    if (machine) {
      std::cout << key << "=" << value << "\n";
    } else {
      std::cout << key << " " << value << "\n";
    }
  }
  void line(const std::string& text, const std::string& machine_text) const {
    std::cout << (machine ? machine_text : text) << "\n";
  }
};

int cmd_rank(const Output& out, const std::string& spec_path, const std::string& set) {
  MatroidSpec spec = parse_matroid_spec_file(spec_path);
  const Matroid& m = spec.matroid();
  Mask x = parse_subset(m.ground(), set);
  Mask witness = m.max_independent_extension(0, x);
  out.emit("rank", std::to_string(popcount(witness)));
  out.emit("witness", format_subset(m.ground(), witness));
  return 0;
}

int cmd_relrank(const Output& out, const std::string& spec_path,
                const std::string& a_text, const std::string& b_text) {
  MatroidSpec spec = parse_matroid_spec_file(spec_path);
  const Matroid& m = spec.matroid();
  Mask a = parse_subset(m.ground(), a_text);
  Mask b = parse_subset(m.ground(), b_text);
  if (!subset_of(b, a)) throw PreconditionError("B must be a subset of A");
  Mask j = m.max_independent_extension(0, b);
  Mask i = m.max_independent_extension(j, a);
  out.emit("relrank", std::to_string(diff_size(i, j)));
  out.emit("I", format_subset(m.ground(), i));
  out.emit("J", format_subset(m.ground(), j));
  return 0;
}

int check_table(const Output& out, const GroundSet& e, const RelRankTable& t,
                bool with_redundancy) {
  RelRankReport rep = check_axioms(t);
  for (RankAxiom a : kRankAxioms) {
    out.emit(axiom_name(a), rep.axiom_passed(a)
                                ? "ok"
                                : "fail count=" +
                                      std::to_string(rep.counts[static_cast<int>(a)]));
  }
  std::vector<std::string> lines;
  for (const auto& w : rep.witnesses) lines.push_back(format_violation(e, w));
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) std::cout << l << "\n";
  if (with_redundancy) {
    RedundancyReport red = redundancy_report(t);
    out.emit("redundancy.r1r2r3", red.r1r2r3 ? "ok" : "fail");
    out.emit("redundancy.r4", red.contradiction_r4 ? "CONTRADICTS-REMARK" : "consistent");
    out.emit("redundancy.r5", red.contradiction_r5 ? "CONTRADICTS-REMARK" : "consistent");
    if (red.contradiction_r4 || red.contradiction_r5) return kExitViolation;
  }
  return rep.passed() ? 0 : kExitViolation;
}

int cmd_check(const Output& out, const std::string& path) {
  if (looks_like_table_spec(path)) {
    RelRankTable t = parse_table_spec_file(path);
    return check_table(out, t.ground(), t, true);
  }
  MatroidSpec spec = parse_matroid_spec_file(path);
  if (!spec.ok()) {
    std::vector<std::string> lines;
    for (const auto& v : spec.check.report.violations) {
      lines.push_back(format_violation(spec.ground, v));
    }
    std::sort(lines.begin(), lines.end());
    out.emit("independence-axioms", "fail");
    for (const auto& l : lines) std::cout << l << "\n";
    return kExitViolation;
  }
  out.emit("independence-axioms", "ok");
  return check_table(out, spec.ground, table_from_matroid(spec.matroid()), false);
}

int cmd_roundtrip(const Output& out, const std::string& path) {
  RelRankTable t = parse_table_spec_file(path);
  std::vector<Mask> indep = r_independents(t);
  ReconstructResult rec = reconstruct(t);
  out.emit("independents", std::to_string(indep.size()));
  out.emit("axioms", rec.matroid ? "ok" : "fail");
  if (!rec.matroid) {
    out.emit("table", "not-rebuilt");
    return kExitViolation;
  }
  if (rec.roundtrip_ok) {
    out.emit("table", "match");
    return 0;
  }
  out.emit("table", "mismatch at (" + format_subset(t.ground(), rec.mismatch->first) +
                        "," + format_subset(t.ground(), rec.mismatch->second) + ")");
  return kExitViolation;
}

int cmd_dualcheck(const Output& out, const std::string& path1, const std::string& path2) {
  MatroidSpec s1 = parse_matroid_spec_file(path1);
  MatroidSpec s2 = parse_matroid_spec_file(path2);
  auto witness = find_duality_violation(s1.matroid(), s2.matroid());
  if (!witness) {
    out.line("dual: yes", "dual=yes");
    return 0;
  }
  const GroundSet& e = s1.matroid().ground();
  std::string at = "(" + format_subset(e, witness->a) + "," +
                   format_subset(e, witness->b) + ") " + witness->lhs.str() +
                   " != " + std::to_string(witness->rhs);
  if (out.machine) {
    out.emit("dual", "no");
    out.emit("witness", at);
  } else {
    std::cout << "dual: no at " << at << "\n";
  }
  return kExitViolation;
}

int cmd_counterexample(const Output& out) {
  DistinguishingWitness w = distinguishing_witness();
  out.emit("ground", "Z");
  out.emit("rank.FreeZ(" + w.a.str() + ")",
           sym_rank(SymbolicKind::FreeZ, w.a).str());
  out.emit("rank.AlmostFreeZ(" + w.a.str() + ")",
           sym_rank(SymbolicKind::AlmostFreeZ, w.a).str());
  out.emit("rank.FreeZ(" + w.b.str() + ")",
           sym_rank(SymbolicKind::FreeZ, w.b).str());
  out.emit("rank.AlmostFreeZ(" + w.b.str() + ")",
           sym_rank(SymbolicKind::AlmostFreeZ, w.b).str());
  out.emit("relrank.FreeZ(" + w.a.str() + "|" + w.b.str() + ")", w.free_value.str());
  out.emit("relrank.AlmostFreeZ(" + w.a.str() + "|" + w.b.str() + ")",
           w.almost_value.str());
  return 0;
}

int cmd_enumerate(const Output& out, int n) {
  for (int i = 0; i <= n; ++i) {
    std::size_t labeled = enumerate_matroids(i).size();
    std::size_t classes = isomorphism_classes(i).size();
    out.line("n=" + std::to_string(i) + " labeled=" + std::to_string(labeled) +
                 " classes=" + std::to_string(classes),
             "n=" + std::to_string(i) + " labeled=" + std::to_string(labeled) +
                 " classes=" + std::to_string(classes));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relative-rank matroid toolkit"};
  app.require_subcommand(1);

  Output out;
  std::string format = "text";
  app.add_option("--format", format, "output format: text or machine")
      ->check(CLI::IsMember({"text", "machine"}));

  std::string spec_path, path2, set_text, a_text, b_text;
  int enum_n = 3;

  auto* rank = app.add_subcommand("rank", "rank of a subset with a greedy witness");
  rank->add_option("spec", spec_path, "matroid spec file")->required();
  rank->add_option("--set", set_text, "subset, e.g. {a,b}")->required();

  auto* relrank_cmd = app.add_subcommand("relrank", "relative rank r(A|B)");
  relrank_cmd->add_option("spec", spec_path, "matroid spec file")->required();
  relrank_cmd->add_option("--a", a_text, "outer subset A")->required();
  relrank_cmd->add_option("--b", b_text, "inner subset B")->required();

  auto* check = app.add_subcommand("check", "axiom suites for a matroid or table spec");
  check->add_option("file", spec_path, "matroid or table spec file")->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "table -> matroid -> table");
  roundtrip->add_option("table", spec_path, "table spec file")->required();

  auto* dualcheck = app.add_subcommand("dualcheck", "duality identity for two matroids");
  dualcheck->add_option("spec1", spec_path, "first matroid spec")->required();
  dualcheck->add_option("spec2", path2, "second matroid spec")->required();

  app.add_subcommand("counterexample",
                     "two infinite matroids with equal rank, different relative rank");

  auto* enumerate = app.add_subcommand("enumerate", "matroid counts for sizes 0..n");
  enumerate->add_option("n", enum_n, "max ground-set size")->required()
      ->check(CLI::Range(0, 5));

  CLI11_PARSE(app, argc, argv);
  out.machine = format == "machine";

  try {
    if (rank->parsed()) return cmd_rank(out, spec_path, set_text);
    if (relrank_cmd->parsed()) return cmd_relrank(out, spec_path, a_text, b_text);
    if (check->parsed()) return cmd_check(out, spec_path);
    if (roundtrip->parsed()) return cmd_roundtrip(out, spec_path);
    if (dualcheck->parsed()) return cmd_dualcheck(out, spec_path, path2);
    if (app.get_subcommand("counterexample")->parsed()) return cmd_counterexample(out);
    if (enumerate->parsed()) return cmd_enumerate(out, enum_n);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UnknownLabelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnknownLabel;
  } catch (const GroundMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return 0;
}
