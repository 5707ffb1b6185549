#include "apolar/report.hpp"

#include "json.hpp"

namespace apolar {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json verdict_json(const TheoremVerdict& v) {
  ordered_json out;
  out["column_then_one"] = v.column_then_one;
  out["small_h2_small_dim"] = v.small_h2_small_dim;
  out["small_h2_cdeg3"] = v.small_h2_cdeg3;
  out["constant_column"] = v.constant_column;
  out["f3_known"] = v.f3_known;
  if (v.f3_known) {
    out["small_f3"] = v.small_f3;
    out["f3"] = v.f3;
  }
  out["m"] = v.m;
  out["c"] = v.c;
  out["cdeg"] = v.cdeg;
  out["dim"] = v.dim;
  return out;
}

}  // namespace

std::string to_json(const Report& r) {
  ordered_json out;
  out["schema"] = "apolar-lab/1";
  out["command"] = r.command;
  if (!r.input.empty()) out["input"] = r.input;
  if (!r.hilbert.empty()) out["hilbert"] = r.hilbert;
  if (r.socle_degree >= 0) out["socle_degree"] = r.socle_degree;
  if (r.capital_degree >= 0) out["capital_degree"] = r.capital_degree;
  if (r.dim >= 0) out["dim"] = r.dim;
  if (!r.decomposition.empty()) {
    out["decomposition"] = r.decomposition;
    out["f"] = r.f;
  }
  if (!r.annihilator.empty()) out["annihilator"] = r.annihilator;
  if (!r.betti.empty()) {
    out["betti"] = r.betti;
    out["pmax"] = r.pmax;
  }
  if (r.poincare.present) {
    ordered_json p;
    if (r.poincare.has_closed_form) p["closed_form"] = r.poincare.closed_form;
    if (!r.poincare.relation.empty()) p["relation"] = r.poincare.relation;
    p["oracle"] = r.poincare.oracle;
    if (r.poincare.has_base) p["base_oracle"] = r.poincare.base_oracle;
    p["consistent"] = r.poincare.consistent;
    out["poincare"] = p;
  }
  if (r.has_verdicts) out["verdicts"] = verdict_json(r.verdicts);
  if (r.split.present) {
    ordered_json s;
    s["equal"] = r.split.equal;
    s["first_mismatch"] = r.split.first_mismatch;
    s["sigma_g"] = r.split.sigma_g;
    if (!r.split.sigma_h.empty()) s["sigma_h"] = r.split.sigma_h;
    s["generators"] = r.split.generators;
    out["split"] = s;
  }
  if (r.enumeration.present) {
    ordered_json e;
    e["socle_degree"] = r.enumeration.socle_degree;
    e["max_dim"] = r.enumeration.max_dim;
    e["max_h2"] = r.enumeration.max_h2;
    e["count"] = r.enumeration.tables.size();
    e["dichotomy"] = r.enumeration.dichotomy;
    e["tables"] = r.enumeration.tables;
    out["enumerate"] = e;
  }
  if (r.verify.present) {
    ordered_json v;
    v["suite"] = r.verify.suite;
    v["seed"] = r.verify.seed;
    v["trials"] = r.verify.trials;
    v["performed"] = r.verify.performed;
    v["passed"] = r.verify.passed;
    v["ok"] = r.verify.ok;
    v["description"] = r.verify.description;
    if (!r.verify.failures.empty()) v["failures"] = r.verify.failures;
    out["verify"] = v;
  }
  return out.dump(2) + "\n";
}

}  // namespace apolar
