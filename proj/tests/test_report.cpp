#include "doctest.h"

#include "atlas/report.hpp"

using namespace atlas;

TEST_CASE("json report schema") {
  RunOptions o;
  o.census = false;
  const auto r = run_case(make_case("T1.row6"), o);
  const nlohmann::json j = report_json(r);
  CHECK(j["caseId"] == "T1.row6");
  CHECK(j["orbit"] == "(2^2,1^3)");
  CHECK(j["route"] == "P2-certificate");
  CHECK(j["checks"].is_array());
  CHECK(j["checks"].size() == r.checks.size());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("pass"));
    CHECK(c.contains("detail"));
  }
  CHECK(j.contains("table1Row"));
  CHECK(j["table1Row"]["degPhi"] == 1);
  CHECK(report_json(run_case(make_case("T2.ii"), o)).contains("table2Row"));
  CHECK(report_json(run_case(make_case("T1.row1"), o))["route"] == "data-only");
}

TEST_CASE("markdown and csv renderings") {
  RunOptions o;
  o.census = false;
  const auto r = run_case(make_case("NEG.so7-in-so9-standard"), o);
  const std::string md = report_markdown(r);
  CHECK(md.find("negative control") != std::string::npos);
  CHECK(md.find("FAIL") != std::string::npos);
  const std::string csv = report_csv(r);
  CHECK(csv.rfind("case,check,result,detail\n", 0) == 0);
}

TEST_CASE("golden source csv") {
  const std::string csv = golden_source_csv();
  CHECK(csv.find("provenance") != std::string::npos);
  CHECK(csv.find("T2.ii") != std::string::npos);
}
