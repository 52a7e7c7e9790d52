// Copyright 2026 The redchar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "redchar/chartab.h"
#include "redchar/classes.h"
#include "redchar/classfn.h"
#include "redchar/cyclo.h"
#include "redchar/dl.h"
#include "redchar/error.h"
#include "redchar/ff.h"
#include "redchar/groups.h"
#include "redchar/parahoric.h"
#include "redchar/sl3.h"
#include "redchar/stability.h"

namespace redchar::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::uint32_t q = 3;
  std::uint64_t seed = 1;
  std::string format = "json";
  double budget = 0;
};

json header(const std::string& command, const Options& o) {
  json j;
  j["version"] = kSchemaVersion;
  j["command"] = command;
  j["q"] = o.q;
  return j;
}

// Integral values as numbers, everything else as its exact string form.
json value(const Cyc& c) {
  if (c.is_rational()) {
    const Rat r = c.rational();
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) {
      return r.get_num().get_si();
    }
  }
  return c.to_string();
}

json value(const Rat& r) { return value(Cyc(r)); }

std::string sign_str(int s) { return s > 0 ? "+" : "-"; }

bool scalar(const json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "null";
  return j.dump();
}

void render_text(const json& j, std::ostream& os, int indent) {
  const std::string pad(indent, ' ');
  auto inline_array = [](const json& a) {
    std::string s;
    for (const auto& e : a) {
      if (!s.empty()) s += ", ";
      s += scalar_text(e);
    }
    return s;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (scalar(v)) {
        os << pad << k << ": " << scalar_text(v) << "\n";
      } else if (v.is_array() &&
                 std::all_of(v.begin(), v.end(), scalar)) {
        os << pad << k << ": [" << inline_array(v) << "]\n";
      } else {
        os << pad << k << ":\n";
        render_text(v, os, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (scalar(e)) {
        os << pad << "- " << scalar_text(e) << "\n";
      } else if (e.is_array() &&
                 std::all_of(e.begin(), e.end(), scalar)) {
        os << pad << "- [" << inline_array(e) << "]\n";
      } else {
        os << pad << "-\n";
        render_text(e, os, indent + 2);
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

void emit(const json& j, const Options& o, std::ostream& out) {
  if (o.format == "text") {
    render_text(j, out, 0);
  } else {
    out << j.dump(2) << "\n";
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) {
    if (c == '"') r += '"';
    r += c;
  }
  return r + "\"";
}

void csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ",";
    out << csv_field(cells[i]);
  }
  out << "\n";
}

void require_json_or_text(const Options& o, const std::string& command) {
  if (o.format == "csv") {
    throw PreconditionError("csv output is only available for classes and "
                            "chartab, not " + command);
  }
}

std::string opt_rat(const std::optional<Rat>& r) {
  return r ? rat_to_string(*r) : std::string();
}

json witness(const StabilityResult& r) {
  if (r.stable) return nullptr;
  json w;
  w["orbit"] = r.orbit ? json(*r.orbit) : json(nullptr);
  w["class_a"] = r.class_a;
  w["value_a"] = value(r.value_a);
  w["class_b"] = r.class_b;
  w["value_b"] = value(r.value_b);
  return w;
}

// ---- classes ---------------------------------------------------------------

struct ClassesArgs {
  bool oracle = false;
};

json classes_report(const Options& o, const ClassesArgs& a, bool* ok) {
  auto so4 = so4_classes(o.q);
  const SO4Group& g = *so4->group;
  const Field& f = g.field();
  const ClassInventory sym = symbolic_classes(g);

  std::optional<ReconcileReport> rec;
  std::map<std::string, std::uint64_t> oracle_counts;
  if (a.oracle) {
    rec = reconcile(g, sym, brute_force_classes(g));
    for (const auto& it : rec->items) oracle_counts[it.item] = it.oracle;
  }

  json j = header("classes", o);
  j["group_order"] = g.order();
  j["num_classes"] = sym.size();
  json rows = json::array();
  for (const auto& e : sym) {
    const std::string item = e.label.lemma_item;
    json r;
    r["label"] = e.label.name;
    r["representative"] = so4_format(f, e.label.display_rep);
    r["size"] = e.size;
    r["lemma_item"] = item;
    const auto stated = lemma_count(item, o.q);
    r["lemma_count"] = stated ? value(*stated) : json(nullptr);
    r["oracle_count"] =
        a.oracle ? json(oracle_counts[item]) : json(nullptr);
    rows.push_back(r);
  }
  j["classes"] = rows;
  *ok = true;
  if (rec) {
    json rj;
    rj["bijection"] = rec->bijection;
    rj["sizes_ok"] = rec->sizes_ok;
    rj["item11_reading"] = rec->item11_reading;
    rj["mismatches"] = rec->mismatches;
    json items = json::array();
    for (const auto& it : rec->items) {
      json ij;
      ij["item"] = it.item;
      ij["formula"] = it.formula;
      ij["stated"] = it.stated ? value(*it.stated) : json(nullptr);
      ij["oracle"] = it.oracle;
      ij["status"] = !it.stated ? "uncounted"
                                : (it.matches ? "confirmed" : "flagged");
      ij["witness"] = it.witness;
      items.push_back(ij);
    }
    rj["items"] = items;
    rj["flagged"] = rec->flagged_items();
    rj["ok"] = rec->ok();
    j["reconcile"] = rj;
    *ok = rec->ok();
  }
  return j;
}

int cmd_classes(const Options& o, const ClassesArgs& a, std::ostream& out,
                std::ostream& err) {
  bool ok = true;
  const json j = classes_report(o, a, &ok);
  if (o.format == "csv") {
    csv_row(out, {"label", "representative", "size", "lemma_item",
                  "lemma_count", "oracle_count"});
    for (const auto& r : j["classes"]) {
      csv_row(out, {scalar_text(r["label"]), scalar_text(r["representative"]),
                    scalar_text(r["size"]), scalar_text(r["lemma_item"]),
                    r["lemma_count"].is_null() ? ""
                                               : scalar_text(r["lemma_count"]),
                    r["oracle_count"].is_null()
                        ? ""
                        : scalar_text(r["oracle_count"])});
    }
    if (!ok) {
      err << j["reconcile"].dump() << "\n";
    }
  } else {
    emit(j, o, out);
  }
  return ok ? kOk : kFailed;
}

// ---- chartab ---------------------------------------------------------------

struct ChartabArgs {
  bool verify = false;
  bool oracle_correct = false;
  bool oracle = false;
};

json table_report_json(const TableReport& r) {
  json j;
  j["num_irreducibles"] = r.num_irreducibles;
  j["num_classes"] = r.num_classes;
  j["degree_square_sum"] = value(r.degree_square_sum);
  j["group_order"] = r.group_order;
  j["count_ok"] = r.count_ok;
  j["degrees_ok"] = r.degrees_ok;
  j["row_orthogonality"] = r.row_orthogonality;
  j["column_orthogonality"] = r.column_orthogonality;
  j["oracle_match"] = r.oracle_match ? json(*r.oracle_match) : json(nullptr);
  j["entries_verified"] = r.entries_verified;
  json corr = json::array();
  for (const auto& n : r.corrected) {
    corr.push_back({{"irreducible", n.irr},
                    {"class", n.cls},
                    {"printed", n.appendix},
                    {"derived", n.derived}});
  }
  j["corrected"] = corr;
  j["failures"] = r.failures;
  j["ok"] = r.ok();
  return j;
}

struct Table {
  std::string title;
  std::vector<std::size_t> columns;  // indices into the irreducible list
};

std::vector<Table> appendix_tables(const std::vector<IrrSO4>& irrs) {
  std::vector<Table> t = {{"cases 1-3", {}}, {"cases 4-6", {}},
                          {"cases 7-9", {}}};
  for (std::size_t i = 0; i < irrs.size(); ++i) {
    const int k = std::clamp((irrs[i].appendix_case - 1) / 3, 0, 2);
    t[k].columns.push_back(i);
  }
  return t;
}

int cmd_chartab(const Options& o, const ChartabArgs& a, std::ostream& out,
                std::ostream& err) {
  auto so4 = so4_classes(o.q);
  const auto irrs = list_irreducibles(o.q);
  const auto& labels = so4->labels;

  // cell[i][c] as shown: printed entry by default, derived when corrected.
  std::vector<std::vector<std::string>> cell(irrs.size());
  std::vector<std::vector<json>> jcell(irrs.size());
  for (std::size_t i = 0; i < irrs.size(); ++i) {
    check_budget("chartab");
    for (const auto& l : labels) {
      std::optional<Cyc> v;
      if (a.oracle_correct) {
        v = eval(irrs[i], l);
      } else {
        v = appendix_entry(irrs[i], l);
      }
      cell[i].push_back(v ? v->to_string() : "undefined");
      jcell[i].push_back(v ? value(*v) : json("undefined"));
    }
  }
  const auto tables = appendix_tables(irrs);

  std::optional<TableReport> rep;
  if (a.verify || a.oracle) {
    rep = verify_table(o.q, a.oracle, o.seed);
  }
  const bool ok = !rep || rep->ok();

  if (o.format == "csv") {
    bool first = true;
    for (const auto& t : tables) {
      if (!first) out << "\n";
      first = false;
      std::vector<std::string> head = {t.title};
      for (auto i : t.columns) head.push_back(irrs[i].name);
      csv_row(out, head);
      for (std::size_t c = 0; c < labels.size(); ++c) {
        std::vector<std::string> row = {labels[c].name};
        for (auto i : t.columns) row.push_back(cell[i][c]);
        csv_row(out, row);
      }
    }
    if (rep && !ok) err << table_report_json(*rep).dump() << "\n";
    return ok ? kOk : kFailed;
  }

  json j = header("chartab", o);
  j["entries"] = a.oracle_correct ? "oracle_corrected" : "printed";
  json cls = json::array();
  for (std::size_t c = 0; c < labels.size(); ++c) {
    cls.push_back({{"label", labels[c].name},
                   {"size", so4->classes->class_size(c)}});
  }
  j["classes"] = cls;
  json jt = json::array();
  for (const auto& t : tables) {
    json tj;
    tj["title"] = t.title;
    json names = json::array();
    for (auto i : t.columns) names.push_back(irrs[i].name);
    tj["irreducibles"] = names;
    json rows = json::array();
    for (std::size_t c = 0; c < labels.size(); ++c) {
      json vals = json::array();
      for (auto i : t.columns) vals.push_back(jcell[i][c]);
      rows.push_back({{"class", labels[c].name}, {"values", vals}});
    }
    tj["rows"] = rows;
    jt.push_back(tj);
  }
  j["tables"] = jt;
  if (rep) j["verify"] = table_report_json(*rep);
  emit(j, o, out);
  return ok ? kOk : kFailed;
}

// ---- decompose -------------------------------------------------------------

struct DecomposeArgs {
  std::string rep;
  std::string against = "appendix";
};

std::optional<TorusType> torus_from_name(const std::string& s) {
  for (auto w : torus_types()) {
    if (to_string(w) == s) return w;
  }
  return std::nullopt;
}

// Named representations of the parahoric module, irreducible names, and
// R_<torus> / R_<torus>_sgn for the Deligne-Lusztig characters.
ClassFunction resolve_rep(std::uint32_t q, const std::string& name) {
  try {
    return named_rep(q, name).character;
  } catch (const PreconditionError&) {
  }
  for (const auto& r : list_irreducibles(q)) {
    if (r.name == name) return character(r);
  }
  if (name.rfind("R_", 0) == 0) {
    std::string rest = name.substr(2);
    bool sgn = false;
    if (rest.size() > 4 && rest.substr(rest.size() - 4) == "_sgn") {
      sgn = true;
      rest.resize(rest.size() - 4);
    }
    if (auto w = torus_from_name(rest)) {
      const TorusChar t =
          sgn ? sign_torus_char(q, *w) : trivial_torus_char(*w);
      return dl_char(q, *w, t).character();
    }
  }
  throw PreconditionError("unknown representation: " + name);
}

int cmd_decompose(const Options& o, const DecomposeArgs& a, std::ostream& out,
                  std::ostream&) {
  require_json_or_text(o, "decompose");
  const ClassFunction chi = resolve_rep(o.q, a.rep);
  const auto irrs = list_irreducibles(o.q);
  std::vector<ClassFunction> basis;
  std::vector<std::string> names;
  std::uint64_t attempts = 0;
  if (a.against == "appendix") {
    for (const auto& r : irrs) {
      basis.push_back(character(r));
      names.push_back(r.name);
    }
  } else {
    OracleTable t = brute_force_irreducibles(chi.classes_ptr(), o.seed);
    attempts = t.attempts;
    for (std::size_t k = 0; k < t.chars.size(); ++k) {
      std::string nm = "oracle#" + std::to_string(k);
      for (const auto& r : irrs) {
        if (character(r) == t.chars[k]) {
          nm = r.name;
          break;
        }
      }
      basis.push_back(t.chars[k]);
      names.push_back(nm);
    }
  }
  const std::vector<Cyc> m = decompose(chi, basis);
  ClassFunction rebuilt =
      ClassFunction::constant(chi.classes_ptr(), Cyc());
  bool integral = true;
  json mult = json::object();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].is_zero()) continue;
    rebuilt += basis[i] * m[i];
    if (!m[i].is_rational() || m[i].rational().get_den() != 1) {
      integral = false;
    }
    mult[names[i]] = value(m[i]);
  }
  json j = header("decompose", o);
  j["rep"] = a.rep;
  j["against"] = a.against;
  if (a.against == "oracle") j["seed"] = o.seed;
  j["degree"] = value(chi.degree());
  j["multiplicities"] = mult;
  j["integral"] = integral;
  j["reconstructs"] = rebuilt == chi;
  j["self_inner_product"] = value(inner_product(chi, chi));
  (void)attempts;
  emit(j, o, out);
  return integral && rebuilt == chi ? kOk : kFailed;
}

// ---- green -----------------------------------------------------------------

json profile_json(const UnipotentProfile& p) {
  json j = json::object();
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    j[p.classes[i].name] = value(p.values[i]);
  }
  return j;
}

json identity_json(const IdentityReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"ok", c.ok},
                      {"classes_checked", c.classes_checked},
                      {"witnesses", c.witnesses}});
  }
  return {{"checks", checks}, {"ok", r.ok()}};
}

IdentitySet identity_set(const std::string& s) {
  if (s == "steinberg") return IdentitySet::kSteinberg;
  if (s == "omega") return IdentitySet::kOmega;
  if (s == "faces") return IdentitySet::kFaces;
  return IdentitySet::kAll;
}

int cmd_green(const Options& o, const std::string& identity,
              std::ostream& out, std::ostream&) {
  require_json_or_text(o, "green");
  json j = header("green", o);
  j["q_star"] = q_star(o.q);
  json greens = json::object();
  for (auto w : torus_types()) {
    greens[to_string(w)] = profile_json(green(o.q, w));
  }
  j["green"] = greens;
  j["g_sgn"] = profile_json(g_sgn(o.q));
  const IdentityReport r = verify_identities(o.q, identity_set(identity));
  j["identity"] = identity;
  j["identities"] = identity_json(r);
  emit(j, o, out);
  return r.ok() ? kOk : kFailed;
}

// ---- stability -------------------------------------------------------------

std::vector<Locus> loci_from(const std::string& s) {
  if (s == "unip") return {Locus::kUnipotent};
  if (s == "su") return {Locus::kSUnipotent};
  return {Locus::kUnipotent, Locus::kSUnipotent};
}

std::string pair_name(const PacketCandidate& c) {
  return "(" + sign_str(c.s_princ) + "," + sign_str(c.s_cusp) + ")";
}

// The pairs whose G_sgn contributions cancel on the locus.
bool expected_stable(Locus l, const PacketCandidate& c) {
  return l == Locus::kUnipotent ? c.s_princ != c.s_cusp
                                : c.s_princ == c.s_cusp;
}

json locus_scan(std::uint32_t q, Locus l, bool* ok) {
  const PacketScan scan = packet_scan_2x2(q, l);
  const FusionPartition part = fuse(q, l);
  json j;
  j["locus"] = to_string(l);
  json orbits = json::array();
  for (const auto& orb : part.orbits) {
    json names = json::array();
    for (const auto& c : orb) names.push_back(c.name);
    orbits.push_back(names);
  }
  j["fusion_orbits"] = orbits;
  json cands = json::array();
  json stable = json::array();
  bool as_expected = true;
  for (const auto& r : scan.results) {
    json c;
    c["candidate"] = pair_name(r.candidate);
    c["s_princ"] = r.candidate.s_princ;
    c["s_cusp"] = r.candidate.s_cusp;
    c["stable"] = r.result.stable;
    if (l == Locus::kUnipotent) {
      c["g_sgn_coefficient"] = value(r.candidate.g_sgn_coefficient());
      c["profile_formula_ok"] = r.profile_formula_ok;
      if (!r.profile_formula_ok) as_expected = false;
    }
    if (!r.result.stable) c["witness"] = witness(r.result);
    cands.push_back(c);
    if (r.result.stable) stable.push_back(pair_name(r.candidate));
    if (r.result.stable != expected_stable(l, r.candidate)) {
      as_expected = false;
    }
  }
  j["candidates"] = cands;
  j["stable_pairs"] = stable;
  j["num_stable"] = scan.num_stable();
  j["ok"] = as_expected && scan.num_stable() == 2;
  *ok = *ok && j["ok"].get<bool>();
  return j;
}

json lemma_checks(std::uint32_t q, bool* ok) {
  const FusionPartition part = fuse(q, Locus::kUnipotent);
  json j;
  const StabilityResult gs = is_stable(locus_profile(g_sgn(q)), part);
  j["g_sgn"] = {{"stable", gs.stable}, {"witness", witness(gs)}};
  json greens = json::object();
  bool all_green = true;
  for (auto w : torus_types()) {
    const StabilityResult r = is_stable(locus_profile(green(q, w)), part);
    greens[to_string(w)] = r.stable;
    all_green = all_green && r.stable;
  }
  j["green_stable"] = greens;
  json counts = json::object();
  const std::map<TorusType, std::uint64_t> want = {
      {TorusType::kSplit, 3},
      {TorusType::kA1, 1},
      {TorusType::kA1Tilde, 1},
      {TorusType::kA1xA1Tilde, 3}};
  bool counts_ok = true;
  for (auto w : torus_types()) {
    const std::uint64_t n = count_order2(q, w);
    counts[to_string(w)] = n;
    counts_ok = counts_ok && n == want.at(w);
  }
  j["count_order2"] = counts;
  j["ok"] = !gs.stable && all_green && counts_ok;
  *ok = *ok && j["ok"].get<bool>();
  return j;
}

int cmd_stability(const Options& o, const std::string& packet,
                  const std::string& locus, std::ostream& out,
                  std::ostream&) {
  require_json_or_text(o, "stability");
  if (packet != "2x2") {
    throw PreconditionError("unsupported packet: " + packet);
  }
  bool ok = true;
  json j = header("stability", o);
  j["packet"] = packet;
  json loci = json::array();
  for (auto l : loci_from(locus)) loci.push_back(locus_scan(o.q, l, &ok));
  j["loci"] = loci;
  j["lemma"] = lemma_checks(o.q, &ok);
  j["ok"] = ok;
  emit(j, o, out);
  return ok ? kOk : kFailed;
}

// ---- sl3 -------------------------------------------------------------------

struct Sl3Args {
  bool triple_scan = false;
  bool fusion = false;
  bool labels = false;
};

json triple_scan_json(std::uint32_t q, bool* ok) {
  const TripleScan s = triple_scan(q);
  json j;
  json rows = json::array();
  json passing = json::array();
  bool perms_only = true;
  for (const auto& r : s.results) {
    json vals = json::array();
    for (const auto& v : r.values) vals.push_back(value(v));
    rows.push_back({{"j", {r.j1, r.j2, r.j3}},
                    {"effective", r.effective},
                    {"values", vals},
                    {"constant", r.constant}});
    if (r.constant) {
      passing.push_back(json::array({r.j1, r.j2, r.j3}));
      std::array<std::uint32_t, 3> e = r.effective;
      std::sort(e.begin(), e.end());
      if (e != std::array<std::uint32_t, 3>{0, 1, 2}) perms_only = false;
    }
  }
  j["triples"] = rows;
  j["passing"] = passing;
  j["num_passing"] = s.num_passing();

  // Sum of the three St' constituents against the Frobenius formula for
  // Ind_B(zeta^-1 x 1 x zeta) at each regular unipotent class.
  const auto f = field(q);
  const MultChar zeta{CharDomain::kFq, (q - 1) / 3};
  const MultChar zinv = f->inverse_char(zeta);
  const MultChar one{CharDomain::kFq, 0};
  json frob = json::array();
  bool frob_ok = true;
  for (std::uint32_t l = 0; l < 3; ++l) {
    Cyc sum;
    for (std::uint32_t jj = 0; jj < 3; ++jj) {
      sum += eval_reg(q, {PacketChar::Family::kStPrime, jj}, l);
    }
    const Cyc ind =
        induced_borel_value(*f, zinv, one, zeta, reg_unip_rep(*f, l));
    frob.push_back({{"label", l},
                    {"sum", value(sum)},
                    {"induced", value(ind)},
                    {"ok", sum == ind}});
    frob_ok = frob_ok && sum == ind;
  }
  j["frobenius_check"] = frob;
  j["ok"] = s.num_passing() == 6 && perms_only && frob_ok;
  *ok = *ok && j["ok"].get<bool>();
  return j;
}

json fusion_json(std::uint32_t q, bool* ok) {
  const FusionReport r = pgl3_fusion(q);
  json j;
  j["orbit_size"] = r.orbit_size;
  j["expected_orbit_size"] = r.expected_orbit_size;
  j["distinct"] = r.distinct;
  j["label_constant"] = r.label_constant;
  j["twist_cyclic"] = r.twist_cyclic;
  j["cube_fixes"] = r.cube_fixes;
  j["gl3_fused"] = r.gl3_fused;
  j["samples"] = r.samples;
  j["ok"] = r.ok();
  *ok = *ok && r.ok();
  return j;
}

json labels_json(std::uint32_t q, bool* ok) {
  const auto f = field(q);
  json rows = json::array();
  bool good = true;
  for (std::uint32_t l = 0; l < 3; ++l) {
    const Mat3 u = reg_unip_rep(*f, l);
    const std::uint32_t got = reg_unip_label(*f, u);
    good = good && got == l;
    json twists = json::array();
    for (std::uint32_t c = 1; c < q; ++c) {
      twists.push_back(label_twist(*f, l, c));
    }
    rows.push_back({{"label", l},
                    {"representative", mat3_format(u)},
                    {"label_of_representative", got},
                    {"label_of_inverse", label_of_inverse(*f, l)},
                    {"twist_by_c", twists}});
  }
  json j;
  j["classes"] = rows;
  json vals = json::array();
  for (auto fam : {PacketChar::Family::kStPrime,
                   PacketChar::Family::kR2sPrime}) {
    for (std::uint32_t jj = 0; jj < 3; ++jj) {
      const PacketChar pc{fam, jj};
      json v = json::array();
      for (std::uint32_t l = 0; l < 3; ++l) {
        v.push_back(value(eval_reg(q, pc, l)));
      }
      vals.push_back({{"character", to_string(pc)},
                      {"degree", degree(q, pc)},
                      {"values", v}});
    }
  }
  j["eval_reg"] = vals;
  j["ok"] = good;
  *ok = *ok && good;
  return j;
}

int cmd_sl3(const Options& o, Sl3Args a, std::ostream& out, std::ostream&) {
  require_json_or_text(o, "sl3");
  require_cubic(o.q);
  if (!a.triple_scan && !a.fusion && !a.labels) {
    throw PreconditionError("sl3 needs --triple-scan, --fusion or --labels");
  }
  bool ok = true;
  json j = header("sl3", o);
  if (a.labels) j["labels"] = labels_json(o.q, &ok);
  if (a.triple_scan) j["triple_scan"] = triple_scan_json(o.q, &ok);
  if (a.fusion) j["fusion"] = fusion_json(o.q, &ok);
  j["ok"] = ok;
  emit(j, o, out);
  return ok ? kOk : kFailed;
}

// ---- parahoric -------------------------------------------------------------

json n_invariants_json(std::uint32_t q, const NInvariants& n) {
  json chars = json::array();
  for (const auto& [c, m] : n.chars) {
    chars.push_back({{"character", to_string(q, c)}, {"multiplicity", m}});
  }
  json expected = json::array();
  for (const auto& c : n.expected) expected.push_back(to_string(q, c));
  return {{"characters", chars},
          {"dimension", n.dimension},
          {"stated", expected},
          {"matches_stated", n.matches_expected}};
}

json mackey_json(const MackeyReport& m, bool* ok) {
  json j;
  j["degree"] = m.degree;
  j["decomposition"] = m.decomposition.to_string();
  j["eps_st_multiplicity"] = m.eps_st_multiplicity;
  j["omega_princ_in_summand"] = {m.omega_in_summand.first,
                                 m.omega_in_summand.second};
  j["omega_princ_in_total"] = {m.omega_in_total.first,
                               m.omega_in_total.second};
  j["contains_pi_plus"] = m.contains_pi_plus;
  j["contains_pi_minus"] = m.contains_pi_minus;
  const bool good = m.eps_st_multiplicity == 1 && m.contains_pi_plus &&
                    m.contains_pi_minus;
  j["ok"] = good;
  *ok = *ok && good;
  return j;
}

json pin_json(const PinReport& p, bool* ok) {
  json j;
  j["trace_plus"] = p.trace_plus;
  j["twist_swaps"] = p.twist_swaps;
  j["twist_plus"] = p.twist_plus;
  j["agree"] = p.agree;
  j["candidates"] = p.candidates;
  j["pinned"] = p.pinned;
  const bool good = p.agree && p.twist_swaps;
  j["ok"] = good;
  *ok = *ok && good;
  return j;
}

struct ParahoricArgs {
  std::string rep;
  bool n_invariants = false;
  bool pin = false;
};

int cmd_parahoric(const Options& o, const ParahoricArgs& a,
                  std::ostream& out, std::ostream&) {
  require_json_or_text(o, "parahoric");
  bool ok = true;
  json j = header("parahoric", o);
  if (!a.rep.empty()) {
    const NamedRep r = named_rep(o.q, a.rep);
    j["rep"] = r.name;
    j["degree"] = value(r.character.degree());
    j["self_inner_product"] = value(inner_product(r.character, r.character));
    if (a.n_invariants) {
      const NInvariants n = n_invariants_report(r);
      j["n_invariants"] = n_invariants_json(o.q, n);
      ok = ok && n.matches_expected;
    }
    if (r.kind == NamedRep::Kind::kMackeySumBeta) {
      j["mackey"] = mackey_json(mackey_sum_beta(o.q), &ok);
    }
  } else if (!a.pin) {
    throw PreconditionError("parahoric needs --rep or --pin");
  }
  if (a.pin) j["pin"] = pin_json(component_pin(o.q), &ok);
  j["ok"] = ok;
  emit(j, o, out);
  return ok ? kOk : kFailed;
}

// ---- verify-all ------------------------------------------------------------

json verify_all(const Options& o, bool* ok) {
  const std::uint32_t q = o.q;
  json j = header("verify-all", o);
  j["seed"] = o.seed;

  {
    bool good = true;
    json c = classes_report(o, {true}, &good);
    json s = c["reconcile"];
    s["num_classes"] = c["num_classes"];
    j["classes"] = s;
    *ok = *ok && good;
  }
  {
    const TableReport r = verify_table(q, q <= 5, o.seed);
    j["chartab"] = table_report_json(r);
    *ok = *ok && r.ok();
  }
  {
    const IdentityReport r = verify_identities(q, IdentitySet::kAll);
    j["green"] = identity_json(r);
    *ok = *ok && r.ok();
  }
  {
    json s;
    json loci = json::array();
    bool good = true;
    for (auto l : {Locus::kUnipotent, Locus::kSUnipotent}) {
      loci.push_back(locus_scan(q, l, &good));
    }
    s["loci"] = loci;
    s["lemma"] = lemma_checks(q, &good);
    s["ok"] = good;
    j["stability"] = s;
    *ok = *ok && good;
  }
  {
    json s;
    bool good = true;
    std::vector<std::string> reps = {"pi_eta2_beta+", "pi_eta2_beta-",
                                     "ind_P_eps_St"};
    if (q % 3 == 1) {
      const std::uint32_t z = (q - 1) / 3;
      reps.push_back("ind_P_zeta_St");
      reps.push_back("ind_borel:" + std::to_string(z) + ",0," +
                     std::to_string(z) + ",0");
    }
    json nj = json::array();
    for (const auto& name : reps) {
      const NamedRep r = named_rep(q, name);
      const NInvariants n = n_invariants_report(r);
      json e = n_invariants_json(q, n);
      e["rep"] = name;
      nj.push_back(e);
      good = good && n.matches_expected;
    }
    s["n_invariants"] = nj;
    if (q % 3 == 1) {
      const NamedRep r = ind_p_zeta_st(q);
      const Cyc ip = inner_product(r.character, r.character);
      s["ind_P_zeta_St_self_inner_product"] = value(ip);
      good = good && ip == Cyc(1);
    }
    s["mackey"] = mackey_json(mackey_sum_beta(q), &good);
    s["pin"] = pin_json(component_pin(q), &good);
    const NamedRep shadow = omega_princ_eps_shadow(q);
    const bool shadow_ok =
        shadow.character == character(find_irreducible(q, "St_SO4.zeta"));
    s["omega_princ_eps_shadow_is_St_zeta"] = shadow_ok;
    good = good && shadow_ok;
    s["ok"] = good;
    j["parahoric"] = s;
    *ok = *ok && good;
  }
  if (q % 3 == 1) {
    json s;
    bool good = true;
    s["labels"] = labels_json(q, &good);
    s["triple_scan"] = triple_scan_json(q, &good);
    if (q <= 7) s["fusion"] = fusion_json(q, &good);
    s["ok"] = good;
    j["sl3"] = s;
    *ok = *ok && good;
  } else {
    j["sl3"] = {{"skipped", "q is not 1 mod 3"}};
  }
  j["ok"] = *ok;
  return j;
}

int cmd_verify_all(const Options& o, std::ostream& out, std::ostream&) {
  require_json_or_text(o, "verify-all");
  bool ok = true;
  const json j = verify_all(o, &ok);
  emit(j, o, out);
  return ok ? kOk : kFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Character tables and stability checks for SO4(F_q)",
               "redchar"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--q", o.q, "odd prime q")->capture_default_str();
  app.add_option("--seed", o.seed, "seed for randomized steps")
      ->capture_default_str();
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--budget", o.budget,
                 "time cap in seconds (default REDCHAR_BUDGET_SECS)");

  ClassesArgs classes_args;
  auto* classes = app.add_subcommand("classes", "conjugacy classes of SO4");
  classes->add_flag("--oracle", classes_args.oracle,
                    "reconcile against brute-force orbits");

  ChartabArgs chartab_args;
  auto* chartab = app.add_subcommand("chartab", "character table of SO4");
  chartab->add_flag("--verify", chartab_args.verify,
                    "check counts, degrees and orthogonality");
  chartab->add_flag("--oracle-correct", chartab_args.oracle_correct,
                    "print derived values instead of printed entries");
  chartab->add_flag("--oracle", chartab_args.oracle,
                    "also compare with the class-algebra oracle");

  DecomposeArgs decompose_args;
  auto* decompose_cmd =
      app.add_subcommand("decompose", "multiplicities of a named rep");
  decompose_cmd->add_option("--rep", decompose_args.rep,
                            "irreducible, parahoric rep or R_<torus>[_sgn]")->required();
  decompose_cmd->add_option("--against", decompose_args.against,
                            "basis to decompose over")
      ->check(CLI::IsMember({"appendix", "oracle"}))
      ->capture_default_str();

  std::string identity = "all";
  auto* green_cmd = app.add_subcommand("green", "Green function identities");
  green_cmd->add_option("--identity", identity, "identity to check")
      ->check(CLI::IsMember({"steinberg", "omega", "faces", "all"}))
      ->capture_default_str();

  std::string packet;
  std::string locus = "unip";
  auto* stability = app.add_subcommand("stability", "packet stability scan");
  stability->add_option("--packet", packet, "packet shape")->required();
  stability->add_option("--locus", locus, "u, s*u or both")
      ->check(CLI::IsMember({"unip", "su", "both"}))
      ->capture_default_str();

  Sl3Args sl3_args;
  auto* sl3 = app.add_subcommand("sl3", "SL3 regular unipotent checks");
  sl3->add_flag("--triple-scan", sl3_args.triple_scan,
               "label triples passing the identity");
  sl3->add_flag("--fusion", sl3_args.fusion, "PGL3 fusion orbit");
  sl3->add_flag("--labels", sl3_args.labels, "class labels and duality");

  ParahoricArgs parahoric_args;
  auto* parahoric =
      app.add_subcommand("parahoric", "parahoric restrictions");
  parahoric->add_option("--rep", parahoric_args.rep, "named parahoric rep");
  parahoric->add_flag("--n-invariants", parahoric_args.n_invariants,
                     "N-invariants as torus characters");
  parahoric->add_flag("--pin", parahoric_args.pin, "pin the + half");

  auto* verify = app.add_subcommand("verify-all", "run every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  // The budget is process-wide; restore it so run() can be called again.
  struct BudgetScope {
    double saved = budget_seconds();
    ~BudgetScope() { set_budget_seconds(saved); }
  } scope;
  try {
    if (o.budget > 0) set_budget_seconds(o.budget);
    if (!is_odd_prime(o.q)) {
      throw PreconditionError("q must be an odd prime, got " +
                              std::to_string(o.q));
    }
    if (classes->parsed()) return cmd_classes(o, classes_args, out, err);
    if (chartab->parsed()) return cmd_chartab(o, chartab_args, out, err);
    if (decompose_cmd->parsed()) {
      return cmd_decompose(o, decompose_args, out, err);
    }
    if (green_cmd->parsed()) return cmd_green(o, identity, out, err);
    if (stability->parsed()) {
      return cmd_stability(o, packet, locus, out, err);
    }
    if (sl3->parsed()) return cmd_sl3(o, sl3_args, out, err);
    if (parahoric->parsed()) {
      return cmd_parahoric(o, parahoric_args, out, err);
    }
    if (verify->parsed()) return cmd_verify_all(o, out, err);
  } catch (const PreconditionError& e) {
    err << json{{"version", kSchemaVersion},
                {"error", "precondition"},
                {"message", e.what()}}
               .dump()
        << "\n";
    return kUsage;
  } catch (const BudgetError& e) {
    err << json{{"version", kSchemaVersion},
                {"error", "budget"},
                {"message", e.what()}}
               .dump()
        << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace redchar::cli
