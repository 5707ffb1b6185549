// apolar-lab: inverse-system calculus for Artinian Gorenstein local algebras.
//
// Every command parses a socle generator (or table parameters), runs one
// library pipeline, and prints either a human-readable summary or, with
// --json, a machine-readable report with stable key order and byte-stable
// output for identical inputs.  Exit codes: 0 success, 2 bad input, 3
// violated internal invariant or a failed verification suite.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "apolar/apolar_ideal.hpp"
#include "apolar/classify.hpp"
#include "apolar/decomposition.hpp"
#include "apolar/enumerate_tables.hpp"
#include "apolar/errors.hpp"
#include "apolar/growth.hpp"
#include "apolar/inverse_system.hpp"
#include "apolar/local_algebra.hpp"
#include "apolar/parse.hpp"
#include "apolar/poincare.hpp"
#include "apolar/polynomial.hpp"
#include "apolar/report.hpp"
#include "apolar/resolution.hpp"
#include "apolar/splits.hpp"
#include "apolar/suites.hpp"

namespace {

using namespace apolar;

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

std::string vec_str(const std::vector<long>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

// Shared state for one invocation.
struct Invocation {
  bool json = false;
  std::uint64_t seed = 0;
  Report report;
  std::ostringstream human;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  int exit_code = 0;
};

void fill_basics(Invocation& inv, const Polynomial& F) {
  InverseSystem sys = derivative_module(F);
  inv.report.input = F.str();
  inv.report.hilbert = sys.hilbert;
  inv.report.socle_degree = sys.socle_degree;
  inv.report.capital_degree = capital_degree(sys.hilbert);
  inv.report.dim = static_cast<long>(sys.dim());
}

std::string hilbert_line(const Report& r) {
  std::ostringstream os;
  os << "H = " << vec_str(r.hilbert) << "; dim = " << r.dim
     << "; sdeg = " << r.socle_degree << "; cdeg = " << r.capital_degree;
  return os.str();
}

void cmd_hilbert(Invocation& inv, const std::string& expr) {
  Polynomial F = parse_polynomial(expr);
  fill_basics(inv, F);
  inv.human << hilbert_line(inv.report) << "\n";
}

void cmd_ann(Invocation& inv, const std::string& expr) {
  Polynomial F = parse_polynomial(expr);
  fill_basics(inv, F);
  ApolarIdeal I = annihilator(F);
  for (const Polynomial& g : I.min_generators)
    inv.report.annihilator.push_back(g.str());
  inv.human << hilbert_line(inv.report) << "\n";
  inv.human << "minimal generators (" << I.min_generators.size()
            << ", dual-ring elements up to degree " << I.bound << "):\n";
  for (const Polynomial& g : I.min_generators) inv.human << "  " << g.str() << "\n";
}

void cmd_decompose(Invocation& inv, const std::string& expr) {
  Polynomial F = parse_polynomial(expr);
  fill_basics(inv, F);
  SymmetricDecomposition dec = symmetric_decomposition(F);
  inv.report.decomposition = dec.rows;
  inv.report.f = dec.f;
  inv.human << hilbert_line(inv.report) << "\n" << dec.str();
}

void cmd_betti(Invocation& inv, const std::string& expr, int pmax) {
  Polynomial F = parse_polynomial(expr);
  fill_basics(inv, F);
  FiniteLocalAlgebra A = FiniteLocalAlgebra::from_inverse_system(F);
  inv.report.betti = betti_numbers(A, pmax);
  inv.report.pmax = pmax;
  inv.human << hilbert_line(inv.report) << "\n";
  inv.human << "beta = " << vec_str(inv.report.betti) << "; pmax = " << pmax << "\n";
}

void cmd_poincare(Invocation& inv, const std::string& expr, int pmax) {
  Polynomial F = parse_polynomial(expr);
  fill_basics(inv, F);
  PoincarePrediction p = predict(F, pmax);
  inv.report.pmax = pmax;
  PoincareSection& sec = inv.report.poincare;
  sec.present = true;
  sec.has_closed_form = p.has_closed_form;
  if (p.has_closed_form) sec.closed_form = p.closed_form.str();
  sec.relation = p.relation;
  sec.oracle = p.oracle.str();
  sec.has_base = p.has_base;
  if (p.has_base) sec.base_oracle = p.base_oracle.str();
  sec.consistent = p.consistent;

  inv.human << hilbert_line(inv.report) << "\n";
  inv.human << "oracle = " << p.oracle.str() << "; pmax = " << pmax << "\n";
  if (p.has_closed_form)
    inv.human << "closed form = " << p.closed_form.str() << "\n";
  if (!p.relation.empty()) inv.human << "relation: " << p.relation << "\n";
  if (p.has_base) inv.human << "base oracle = " << p.base_oracle.str() << "\n";
  inv.human << "consistent: " << yesno(p.consistent) << "\n";
}

void print_verdicts(Invocation& inv, const TheoremVerdict& v) {
  inv.human << "m = " << v.m << "; c = " << v.c << "; cdeg = " << v.cdeg
            << "; dim = " << v.dim << "\n";
  inv.human << "column-then-one: " << yesno(v.column_then_one) << "\n";
  inv.human << "small-h2-small-dim: " << yesno(v.small_h2_small_dim) << "\n";
  inv.human << "small-h2-cdeg3: " << yesno(v.small_h2_cdeg3) << "\n";
  inv.human << "constant-column: " << yesno(v.constant_column) << "\n";
  if (v.f3_known)
    inv.human << "f3 = " << v.f3 << "; small-f3: " << yesno(v.small_f3) << "\n";
}

void cmd_classify(Invocation& inv, const std::string& expr,
                  const std::vector<int>& hilbert, long dim_hint) {
  if (!expr.empty()) {
    Polynomial F = parse_polynomial(expr);
    fill_basics(inv, F);
    inv.report.verdicts = classify(F);
    inv.report.has_verdicts = true;
    inv.human << hilbert_line(inv.report) << "\n";
  } else {
    inv.report.verdicts = classify(hilbert, dim_hint);
    inv.report.has_verdicts = true;
    inv.report.hilbert = hilbert;
    inv.report.dim = inv.report.verdicts.dim;
    inv.report.capital_degree = inv.report.verdicts.cdeg;
    inv.report.socle_degree = static_cast<int>(hilbert.size()) - 1;
    inv.human << hilbert_line(inv.report) << "\n";
  }
  print_verdicts(inv, inv.report.verdicts);
}

void fill_split(Invocation& inv, const SplitCheck& chk) {
  fill_basics(inv, chk.F);
  SplitSection& sec = inv.report.split;
  sec.present = true;
  sec.equal = chk.equal;
  sec.first_mismatch = chk.first_mismatch;
  sec.sigma_g = chk.sigma_g.str();
  if (!chk.sigma_h.is_zero()) sec.sigma_h = chk.sigma_h.str();
  for (const Polynomial& g : chk.generators) sec.generators.push_back(g.str());

  inv.human << "F = " << chk.F.str() << "\n";
  inv.human << hilbert_line(inv.report) << "\n";
  inv.human << "generators (" << chk.generators.size() << "):\n";
  for (const Polynomial& g : chk.generators) inv.human << "  " << g.str() << "\n";
  inv.human << "sigma_g = " << chk.sigma_g.str() << "\n";
  if (!chk.sigma_h.is_zero())
    inv.human << "sigma_h = " << chk.sigma_h.str() << "\n";
  inv.human << "equal to the annihilator: " << yesno(chk.equal);
  if (!chk.equal) inv.human << " (first mismatch in degree " << chk.first_mismatch << ")";
  inv.human << "\n";
}

void cmd_split(Invocation& inv, const std::string& g_expr,
               const std::string& h_expr, int total_vars) {
  Polynomial G = parse_polynomial(g_expr);
  if (!h_expr.empty()) {
    Polynomial H = parse_polynomial(h_expr);
    if (H.nvars() <= G.nvars())
      throw input_error(
          "split: the second block must use variables beyond the first block");
    fill_split(inv, split_annihilator(G, H));
  } else {
    fill_split(inv, split_quadrics(G, total_vars));
  }
}

void cmd_enumerate(Invocation& inv, int sdeg, long max_dim, int max_h2) {
  TableEnumeration en = enumerate_decompositions(sdeg, max_dim, max_h2);
  EnumerateSection& sec = inv.report.enumeration;
  sec.present = true;
  sec.socle_degree = en.socle_degree;
  sec.max_dim = en.max_dim;
  sec.max_h2 = en.max_h2;
  sec.dichotomy = en.dichotomy;
  for (const DecompositionTable& t : en.tables) sec.tables.push_back(t.rows);

  inv.human << "socle degree " << sdeg << ", dim <= " << max_dim
            << ", H(2) <= " << max_h2 << ": " << en.tables.size()
            << " admissible tables\n";
  inv.human << "every table has f3 <= 4 or capital degree <= 3: "
            << yesno(en.dichotomy) << "\n";
  for (const DecompositionTable& t : en.tables) inv.human << t.str() << "\n";
}

void cmd_verify(Invocation& inv, const std::string& suite, int trials,
                std::uint64_t seed) {
  SuiteResult res = run_suite(suite, trials, seed);
  VerifySection& sec = inv.report.verify;
  sec.present = true;
  sec.suite = res.suite;
  sec.seed = res.seed;
  sec.trials = res.trials;
  sec.performed = res.performed;
  sec.passed = res.passed;
  sec.ok = res.ok;
  sec.description = res.description;
  sec.failures = res.failures;

  inv.human << res.passed << "/" << res.performed << " " << res.description << "\n";
  for (const std::string& f : res.failures) inv.human << "  failure: " << f << "\n";
  if (!res.ok) {
    inv.human << "suite " << res.suite << " FAILED\n";
    inv.exit_code = 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Invocation inv;

  CLI::App app{"Inverse-system calculus for Artinian Gorenstein local algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", inv.json, "emit a machine-readable JSON report");
  app.add_option("--seed", inv.seed,
                 "seed for randomized commands (deterministic commands ignore it)");

  std::string expr, g_expr, h_expr, suite;
  int pmax = 6, total_vars = 0, sdeg = 0, max_h2 = 4, trials = 10;
  long max_dim = 16, dim_hint = -1;
  std::vector<int> hilbert_in;

  auto* c_hil = app.add_subcommand("hilbert", "Hilbert function of the algebra of F");
  c_hil->add_option("expr", expr, "socle generator, e.g. \"y1^3 + y2^2\"")->required();

  auto* c_ann = app.add_subcommand("ann", "minimal generators of the annihilator of F");
  c_ann->add_option("expr", expr)->required();

  auto* c_dec = app.add_subcommand("decompose",
                                   "symmetric decomposition of the associated graded algebra");
  c_dec->add_option("expr", expr)->required();

  auto* c_bet = app.add_subcommand("betti", "residue-field Betti numbers beta_0..beta_pmax");
  c_bet->add_option("expr", expr)->required();
  c_bet->add_option("--pmax", pmax, "last homological degree (default 6)")
      ->check(CLI::Range(0, 10));

  auto* c_poi = app.add_subcommand("poincare",
                                   "Betti series prediction checked against the resolution oracle");
  c_poi->add_option("expr", expr)->required();
  c_poi->add_option("--pmax", pmax, "oracle truncation order (default 6)")
      ->check(CLI::Range(0, 10));

  auto* c_cls = app.add_subcommand("classify",
                                   "structure-theorem hypothesis flags for F or a Hilbert function");
  auto* cls_expr = c_cls->add_option("expr", expr, "socle generator");
  auto* cls_hil = c_cls->add_option("--hilbert", hilbert_in,
                                    "comma-separated Hilbert values, e.g. 1,3,3,1")
                      ->delimiter(',');
  auto* cls_dim = c_cls->add_option("--dim", dim_hint, "expected total dimension");
  cls_expr->excludes(cls_hil)->excludes(cls_dim);

  auto* c_spl = app.add_subcommand("split",
                                   "annihilator of a two-block sum from blockwise generators");
  // The documented flag --h would collide with the default help alias -h.
  c_spl->set_help_flag("--help", "print this help message and exit");
  c_spl->add_option("--g", g_expr, "first block")->required();
  auto* spl_h = c_spl->add_option("--h", h_expr, "second block, in later variables");
  auto* spl_n = c_spl->add_option("--n", total_vars,
                                  "total variables; appends squares of the extra ones");
  spl_h->excludes(spl_n);

  auto* c_enu = app.add_subcommand("enumerate",
                                   "all admissible decomposition tables under budget constraints");
  c_enu->add_option("--sdeg", sdeg, "socle degree (>= 3)")->required();
  c_enu->add_option("--max-dim", max_dim, "total dimension budget (default 16)");
  c_enu->add_option("--max-h2", max_h2, "second Hilbert value budget (default 4)");

  auto* c_ver = app.add_subcommand("verify", "run a seeded verification suite");
  c_ver->add_option("--suite", suite, "suite name; see below")->required();
  c_ver->add_option("--trials", trials, "randomized trial count (default 10)");
  auto* ver_seed = c_ver->add_option("--seed", inv.seed, "random seed (default 0)");
  {
    std::string all;
    for (const std::string& n : suite_names()) all += (all.empty() ? "" : ", ") + n;
    c_ver->footer("suites: " + all);
  }
  (void)ver_seed;

  // Let global flags (--json, --seed) appear after the subcommand name.
  for (CLI::App* sub : {c_hil, c_ann, c_dec, c_bet, c_poi, c_cls, c_spl, c_enu, c_ver})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version are "successful" parse interruptions.
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_hil->parsed()) {
      inv.report.command = "hilbert";
      cmd_hilbert(inv, expr);
    } else if (c_ann->parsed()) {
      inv.report.command = "ann";
      cmd_ann(inv, expr);
    } else if (c_dec->parsed()) {
      inv.report.command = "decompose";
      cmd_decompose(inv, expr);
    } else if (c_bet->parsed()) {
      inv.report.command = "betti";
      cmd_betti(inv, expr, pmax);
    } else if (c_poi->parsed()) {
      inv.report.command = "poincare";
      cmd_poincare(inv, expr, pmax);
    } else if (c_cls->parsed()) {
      inv.report.command = "classify";
      if (expr.empty() && hilbert_in.empty())
        throw input_error("classify: provide a polynomial or --hilbert values");
      cmd_classify(inv, expr, hilbert_in, dim_hint);
    } else if (c_spl->parsed()) {
      inv.report.command = "split";
      if (h_expr.empty() && total_vars == 0)
        throw input_error("split: provide --h or --n");
      cmd_split(inv, g_expr, h_expr, total_vars);
    } else if (c_enu->parsed()) {
      inv.report.command = "enumerate";
      cmd_enumerate(inv, sdeg, max_dim, max_h2);
    } else if (c_ver->parsed()) {
      inv.report.command = "verify";
      cmd_verify(inv, suite, trials, inv.seed);
    }
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const invariant_error& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 3;
  }

  if (inv.json) {
    std::cout << to_json(inv.report);
  } else {
    std::cout << inv.human.str();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - inv.start)
                  .count();
    std::cout << "time: " << ms << " ms\n";
  }
  return inv.exit_code;
}
