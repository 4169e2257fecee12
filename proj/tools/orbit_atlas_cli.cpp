#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "atlas/error.hpp"
#include "atlas/report.hpp"

using namespace atlas;

namespace {

struct Config {
  std::uint64_t seed = 1729;
  int samples = 32;
  int rank_bound = kDefaultRankBound;
  std::string format;
};

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int cmd_orbits(const std::string& family, int rank, const Config& cfg) {
  const LieType t = parse_lie_type(family, rank);
  if (t.rank > cfg.rank_bound) throw Error(ErrorKind::RankBound, t.name() + " exceeds the rank bound");
  const std::vector<Partition> orbits = enumerate_orbits(t, cfg.rank_bound);
  const std::string fmt = cfg.format.empty() ? "md" : cfg.format;
  auto height = [&](const Partition& p) { return p.parts.front() == 1 ? 0 : orbit_height(t, p); };
  auto pi1 = [&](const Partition& p) { return fundamental_group_order(t, p, GroupForm::SimplyConnected); };
  if (fmt == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const Partition& p : orbits)
      rows.push_back({{"partition", p.to_string()},
                      {"dim", orbit_dimension(t, p)},
                      {"height", height(p)},
                      {"wdd", weighted_dynkin(t, p)},
                      {"pi1", pi1(p)}});
    std::cout << nlohmann::json{{"type", t.name()}, {"orbits", rows}}.dump(2) << "\n";
  } else if (fmt == "csv") {
    std::cout << "partition,dim,height,wdd,pi1\n";
    for (const Partition& p : orbits)
      std::cout << "\"" << p.to_string() << "\"," << orbit_dimension(t, p) << "," << height(p) << ",\""
                << join_ints(weighted_dynkin(t, p)) << "\"," << pi1(p) << "\n";
  } else if (fmt == "md") {
    std::cout << "| partition | dim | height | wDd | pi_1 |\n|---|---|---|---|---|\n";
    for (const Partition& p : orbits)
      std::cout << "| (" << p.to_string() << ") | " << orbit_dimension(t, p) << " | " << height(p) << " | "
                << join_ints(weighted_dynkin(t, p)) << " | " << pi1(p) << " |\n";
  } else {
    throw Error(ErrorKind::Usage, "orbits supports csv, md and json");
  }
  return 0;
}

int cmd_hasse(const std::string& family, int rank, const Config& cfg) {
  if (!cfg.format.empty() && cfg.format != "dot") throw Error(ErrorKind::Usage, "hasse emits dot only");
  std::cout << hasse_dot(parse_lie_type(family, rank), cfg.rank_bound);
  return 0;
}

int cmd_pair(const std::string& id, const std::vector<int>& params, const std::string& orbit, const Config& cfg) {
  const EmbeddingCase c = make_case(id, params);
  for (const LieType& t : c.sub_types)
    if (t.rank > cfg.rank_bound) throw Error(ErrorKind::RankBound, c.id + " exceeds the rank bound");
  if (c.ambient_type.rank > cfg.rank_bound) throw Error(ErrorKind::RankBound, c.id + " exceeds the rank bound");
  std::optional<OrbitId> o;
  if (!orbit.empty()) {
    if (c.ambient_type.classical()) {
      Partition p = parse_partition(orbit);
      if (!validate_partition(c.ambient_type, p))
        throw Error(ErrorKind::InvalidPartition, orbit + " is not an orbit of " + c.ambient_type.name());
      o = OrbitId::classical(c.ambient_type, p);
    } else {
      o = OrbitId::exceptional(c.ambient_type, lookup_exceptional(c.ambient_type, orbit).label);
    }
  }
  RunOptions opts;
  opts.seed = cfg.seed;
  opts.samples = cfg.samples;
  const VerificationReport r = run_case(c, opts, o);
  const std::string fmt = cfg.format.empty() ? "md" : cfg.format;
  if (fmt == "json") std::cout << report_json(r).dump(2) << "\n";
  else if (fmt == "csv") std::cout << report_csv(r);
  else if (fmt == "md") std::cout << report_markdown(r);
  else throw Error(ErrorKind::Usage, "pair supports csv, md and json");
  if (r.passed()) return 0;
  if (r.negative_control && !r.witness)
    std::cerr << "NEGATIVE CONTROL: no P2 certificate for " << r.orbit.to_string() << ", as expected\n";
  for (const Check& ch : r.checks)
    if (!ch.informational && !ch.pass) std::cerr << "failed: " << ch.name << " (" << ch.detail << ")\n";
  return 1;
}

int cmd_tables(bool source, const Config& cfg) {
  const std::string fmt = cfg.format.empty() ? (source ? "csv" : "md") : cfg.format;
  if (source) {
    if (fmt != "csv") throw Error(ErrorKind::Usage, "tables --source emits csv only");
    std::cout << golden_source_csv();
    return 0;
  }
  RunOptions opts;
  opts.seed = cfg.seed;
  opts.samples = cfg.samples;
  const std::vector<TableEntry> entries = regenerate_tables(opts);
  if (fmt == "md") std::cout << tables_markdown(entries);
  else if (fmt == "csv") std::cout << tables_csv(entries);
  else if (fmt == "json") std::cout << tables_json(entries).dump(2) << "\n";
  else throw Error(ErrorKind::Usage, "tables supports csv, md and json");
  for (const TableEntry& e : entries)
    if (!e.diffs.empty()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  if (const char* env = std::getenv("ATLAS_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ATLAS_SEED is not an integer\n";
      return 2;
    }
  }

  CLI::App app{"Nilpotent orbits and good pairs of subalgebras"};
  app.require_subcommand(1);
  app.add_option("--seed", cfg.seed, "Random seed for P2 certificates (env ATLAS_SEED)");
  app.add_option("--samples", cfg.samples, "Conjugation samples per certificate")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "md", "json", "dot"}));
  app.add_option("--rank-bound", cfg.rank_bound, "Largest rank accepted")->check(CLI::Range(1, 64));

  std::string family;
  int rank = 0;
  auto* orbits = app.add_subcommand("orbits", "List nilpotent orbits of a classical algebra");
  orbits->add_option("family", family, "A, B, C or D")->required();
  orbits->add_option("rank", rank, "Rank")->required()->check(CLI::PositiveNumber);

  auto* hasse = app.add_subcommand("hasse", "Closure order as a DOT graph");
  hasse->add_option("family", family, "A, B, C or D")->required();
  hasse->add_option("rank", rank, "Rank")->required()->check(CLI::PositiveNumber);

  std::string case_id, orbit;
  int n = 0, k = 0, m = -1;
  std::vector<int> parts;
  auto* pair = app.add_subcommand("pair", "Verify a registered pair");
  pair->add_option("case", case_id, "Case id, e.g. T1.row6 or T1.row3(4)")->required();
  pair->add_option("--n", n, "Rank parameter n");
  pair->add_option("--k", k, "Parameter k of T2.i");
  pair->add_option("--m", m, "Parameter m of T2.i");
  pair->add_option("--parts", parts, "Block sizes n_1,...,n_k of T1.row11")->delimiter(',');
  pair->add_option("--orbit", orbit, "Ambient orbit, e.g. 3,1^4 or G2(a1)");

  bool source = false;
  auto* tables = app.add_subcommand("tables", "Regenerate both tables and diff them");
  tables->add_flag("--source", source, "Print the transcribed rows instead");

  for (auto* sub : {orbits, hasse, pair, tables}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*orbits) return cmd_orbits(family, rank, cfg);
    if (*hasse) return cmd_hasse(family, rank, cfg);
    if (*pair) {
      std::vector<int> params;
      if (!parts.empty()) params = parts;
      else if (k > 0 || m >= 0) params = {k, m < 0 ? 0 : m};
      else if (n > 0) params = {n};
      return cmd_pair(case_id, params, orbit, cfg);
    }
    if (*tables) return cmd_tables(source, cfg);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Usage:
      case ErrorKind::UnknownCase:
      case ErrorKind::InvalidPartition:
      case ErrorKind::UnknownLabel:
      case ErrorKind::RankBound:
      case ErrorKind::ExceptionalType:
        return 2;
      default:
        return 1;
    }
  }
  return 2;
}
