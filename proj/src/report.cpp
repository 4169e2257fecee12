#include "atlas/report.hpp"

#include <sstream>

namespace atlas {

namespace {

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string params_string(const std::vector<int>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

nlohmann::json golden_json(const GoldenValues& g) {
  return {{"dimM", g.dim_m},       {"dimOrbit", g.dim_orbit}, {"orbit", g.orbit},
          {"phiOrbit", g.phi_orbit}, {"tildeO", g.tilde_o},   {"dimTildeO", g.dim_tilde_o},
          {"degPhi", g.deg_phi},   {"heightTildeO", g.height_tilde_o}};
}

}  // namespace

nlohmann::json report_json(const VerificationReport& r) {
  nlohmann::json j;
  j["caseId"] = r.case_id;
  j["description"] = r.description;
  j["orbit"] = r.orbit.to_string();
  j["route"] = to_string(r.route);
  j["negativeControl"] = r.negative_control;
  j["dimM"] = r.dim_m;
  j["dimOrbit"] = r.dim_orbit;
  if (r.witness)
    j["p2Certificate"] = {{"sample", r.witness->sample}, {"achievedOrbitDim", r.witness->achieved_dim}};
  else
    j["p2Certificate"] = nullptr;
  j["projections"] = {{"phiOrbit", r.phi_orbit}, {"ambientOrbitOfB", r.b_orbit ? r.b_orbit->to_string() : ""}};
  j["tildeO"] = r.tilde_o;
  j["dimTildeO"] = r.dim_tilde_o ? nlohmann::json(*r.dim_tilde_o) : nlohmann::json(nullptr);
  j["degPhi"] = r.deg_phi ? nlohmann::json(*r.deg_phi) : nlohmann::json(nullptr);
  j["heights"] = {{"phi", r.height_phi ? nlohmann::json(*r.height_phi) : nlohmann::json(nullptr)},
                  {"tildeO", r.height_tilde_o ? nlohmann::json(*r.height_tilde_o) : nlohmann::json(nullptr)}};
  if (r.plane) {
    nlohmann::json census = nlohmann::json::array();
    for (const auto& [c1, c2, o] : r.plane->census) census.push_back({{"c", {c1, c2}}, {"orbit", o}});
    j["plane"] = {{"distinct", r.plane->distinct}, {"census", census}};
  }
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : r.checks) {
    nlohmann::json cj = {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
    if (c.informational) cj["informational"] = true;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  if (r.golden) {
    nlohmann::json echo = golden_json(*r.golden);
    echo["row"] = r.golden_id;
    echo["params"] = r.golden_params;
    j[r.golden_id.rfind("T2", 0) == 0 ? "table2Row" : "table1Row"] = echo;
  }
  j["passed"] = r.passed();
  return j;
}

std::string report_markdown(const VerificationReport& r) {
  std::ostringstream os;
  os << "## " << r.case_id << ": " << r.description << "\n\n";
  os << "- orbit: " << r.orbit.to_string() << " (dim " << r.dim_orbit << ")\n";
  os << "- route: " << to_string(r.route) << "\n";
  os << "- dim m: " << r.dim_m << "\n";
  if (r.witness)
    os << "- P2 certificate: sample " << r.witness->sample << ", dim [h, e] = " << r.witness->achieved_dim << "\n";
  else if (!r.phi_orbit.empty())
    os << "- P2 certificate: not applicable (data tier)\n";
  else
    os << "- P2 certificate: none (largest dim [h, x] = " << r.best_dim << ")\n";
  if (!r.phi_orbit.empty()) {
    os << "- phi(Omega): " << r.phi_orbit << "\n";
    os << "- tilde O: " << r.tilde_o << " (dim " << opt(r.dim_tilde_o) << ")\n";
    os << "- deg phi: " << opt(r.deg_phi) << "\n";
    os << "- heights: " << opt(r.height_phi) << " in h, " << opt(r.height_tilde_o) << " in g\n";
  }
  if (r.b_orbit) os << "- G.b: " << r.b_orbit->to_string() << "\n";
  os << "\n| check | result | detail |\n|---|---|---|\n";
  for (const Check& c : r.checks)
    os << "| " << c.name << " | " << (c.informational ? "info" : (c.pass ? "pass" : "FAIL")) << " | " << c.detail
       << " |\n";
  os << "\n" << (r.passed() ? "all checks pass" : "some checks FAILED");
  if (r.negative_control) os << " [negative control: failure expected]";
  os << "\n";
  return os.str();
}

std::string report_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "case,check,result,detail\n";
  for (const Check& c : r.checks)
    os << csv_field(r.case_id) << "," << csv_field(c.name) << ","
       << (c.informational ? "info" : (c.pass ? "pass" : "fail")) << "," << csv_field(c.detail) << "\n";
  return os.str();
}

std::vector<TableEntry> regenerate_tables(const RunOptions& opts) {
  RunOptions quiet = opts;
  quiet.census = false;
  std::vector<TableEntry> out;
  for (const auto& [name, params] : default_instances()) {
    const EmbeddingCase c = make_case(name, params);
    const GoldenRow& row = golden_row(c.golden_id);
    TableEntry e;
    e.table = c.golden_id.rfind("T2", 0) == 0 ? "2" : "1";
    e.case_id = c.id;
    e.pair = row.pair;
    e.report = run_case(c, quiet);
    e.golden = row.evaluate(c.params);
    const VerificationReport& r = e.report;
    auto cell = [&](const std::string& name, bool same) {
      if (!same) e.diffs.push_back(name);
    };
    cell("dim m", r.dim_m == e.golden.dim_m);
    cell("dim O", r.dim_orbit == e.golden.dim_orbit);
    cell("phi(Omega)", same_orbit_string(r.phi_orbit, e.golden.phi_orbit));
    cell("tilde O", same_orbit_string(r.tilde_o, e.golden.tilde_o));
    cell("dim tilde O", r.dim_tilde_o == e.golden.dim_tilde_o);
    cell("deg phi", r.deg_phi == e.golden.deg_phi);
    cell("checks", r.passed());
    out.push_back(std::move(e));
  }
  return out;
}

std::string tables_markdown(const std::vector<TableEntry>& entries) {
  std::ostringstream os;
  for (const std::string table : {"1", "2"}) {
    os << "# Table " << table << "\n\n";
    os << "| case | pair | dim m | dim O | phi(Omega) | tilde O | dim tilde O | deg phi | route | checks |\n";
    os << "|---|---|---|---|---|---|---|---|---|---|\n";
    for (const TableEntry& e : entries) {
      if (e.table != table) continue;
      const VerificationReport& r = e.report;
      os << "| " << e.case_id << " | " << e.pair << " | " << r.dim_m << " | " << r.dim_orbit << " | " << r.phi_orbit
         << " | " << r.tilde_o << " | " << opt(r.dim_tilde_o) << " | " << opt(r.deg_phi) << " | "
         << to_string(r.route) << " | " << (r.passed() ? "pass" : "FAIL") << " |\n";
    }
    os << "\n";
  }
  os << "# DIFF\n\n";
  bool any = false;
  for (const TableEntry& e : entries)
    for (const std::string& d : e.diffs) {
      any = true;
      os << "- " << e.case_id << ": " << d << "\n";
    }
  if (!any) os << "(empty)\n";
  return os.str();
}

std::string tables_csv(const std::vector<TableEntry>& entries) {
  std::ostringstream os;
  os << "table,case,pair,dim_m,dim_orbit,phi_orbit,tilde_o,dim_tilde_o,deg_phi,route,checks,diff\n";
  for (const TableEntry& e : entries) {
    const VerificationReport& r = e.report;
    std::string diff;
    for (const std::string& d : e.diffs) diff += (diff.empty() ? "" : ";") + d;
    os << e.table << "," << csv_field(e.case_id) << "," << csv_field(e.pair) << "," << r.dim_m << "," << r.dim_orbit
       << "," << csv_field(r.phi_orbit) << "," << csv_field(r.tilde_o) << "," << opt(r.dim_tilde_o) << ","
       << opt(r.deg_phi) << "," << to_string(r.route) << "," << (r.passed() ? "pass" : "fail") << ","
       << csv_field(diff) << "\n";
  }
  return os.str();
}

nlohmann::json tables_json(const std::vector<TableEntry>& entries) {
  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json diff = nlohmann::json::array();
  for (const TableEntry& e : entries) {
    nlohmann::json j = report_json(e.report);
    j["table"] = e.table;
    rows.push_back(j);
    for (const std::string& d : e.diffs) diff.push_back({{"case", e.case_id}, {"cell", d}});
  }
  return {{"rows", rows}, {"diff", diff}};
}

std::string golden_source_csv() {
  std::ostringstream os;
  os << "row,pair,params,dim_m,dim_orbit,orbit,phi_orbit,tilde_o,dim_tilde_o,deg_phi,height_tilde_o,provenance\n";
  for (const auto& [name, params] : default_instances()) {
    const EmbeddingCase c = make_case(name, params);
    const GoldenRow& row = golden_row(c.golden_id);
    const GoldenValues g = row.evaluate(c.params);
    os << row.id << "," << csv_field(row.pair) << "," << csv_field(params_string(c.params)) << "," << g.dim_m << ","
       << g.dim_orbit << "," << csv_field(g.orbit) << "," << csv_field(g.phi_orbit) << "," << csv_field(g.tilde_o)
       << "," << g.dim_tilde_o << "," << g.deg_phi << "," << g.height_tilde_o << "," << row.provenance << "\n";
  }
  return os.str();
}

}  // namespace atlas
