#include <doctest.h>

#include "convex_count/cli.hpp"
#include "convex_count/oracle.hpp"

#include <stdexcept>

using namespace convex_count;
using namespace convex_count::cli;
using production::GraphClassSpec;

TEST_CASE("formats") {
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("bfile") == Format::Bfile);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("output records round trip through JSON") {
  OutputRecord rec;
  rec.command = "counts";
  rec.cls = "geometric";
  rec.parameters["n_max"] = 30;
  rec.payload = counts_payload(production::count_sequence(GraphClassSpec::geometric(), 30));
  const auto text = to_json(rec).dump();
  const auto back = record_from_json(nlohmann::ordered_json::parse(text));
  CHECK(back == rec);
  CHECK(to_json(back).dump() == text);
  // Large totals stay exact decimal strings.
  const auto last = back.payload["levels"].back()["total"].get<std::string>();
  CHECK(last == to_decimal(production::count_sequence(GraphClassSpec::geometric(), 30).back().total));
  CHECK(last.find('e') == std::string::npos);
  CHECK(big_array_from(big_array({1, -2, pow2(100)})) == std::vector<BigInt>{1, -2, pow2(100)});
}

TEST_CASE("matrix rendering") {
  OutputRecord rec{kFormatVersion, "matrix", "partition", {}, matrix_payload(production::build_partition_matrix(4))};
  CHECK(render_matrix(rec, Format::Csv) == "0,1,2,4\n1,0,1,2\n0,1,0,1\n0,0,1,0\n");
  OutputRecord k3{kFormatVersion, "matrix", "kangulation", {}, matrix_payload(production::build_k_angulation_matrix(3, 2))};
  CHECK(render_matrix(k3, Format::Table) == "1  1\n1  1\n");
  const auto j = nlohmann::ordered_json::parse(
      render_matrix({kFormatVersion, "matrix", "geometric", {}, matrix_payload(production::build_geometric_matrix(3))},
                    Format::Json));
  CHECK(j["payload"]["rows"][0] == nlohmann::ordered_json::array({"2", "4", "8"}));
  CHECK_THROWS_AS(render_matrix(rec, Format::Bfile), std::invalid_argument);
}

TEST_CASE("counts rendering") {
  OutputRecord rec{kFormatVersion, "counts", "geometric", {},
                   counts_payload(production::count_sequence(GraphClassSpec::geometric(), 5))};
  CHECK(render_counts(rec, Format::Bfile) == "2 2\n3 8\n4 48\n5 352\n");
  const auto table = render_counts(rec, Format::Table);
  CHECK(table.find("352  (176, 112, 48, 16, 0, 0, 0)") != std::string::npos);
  CHECK(render_counts(rec, Format::Csv).rfind("level,total,vector\n2,2,\"2 0 0 0 0 0 0\"\n", 0) == 0);
  // Identical inputs render byte-identically.
  CHECK(render_counts(rec, Format::Json) == render_counts(rec, Format::Json));
}

TEST_CASE("charpoly rendering") {
  OutputRecord rec{kFormatVersion, "charpoly", "partition", {}, polynomial_payload(IntPolynomial({0, -1}))};
  CHECK(render_charpoly(rec, Format::Csv) == "power,coefficient\n0,0\n1,-1\n");
  CHECK(render_charpoly(rec, Format::Table) == "-λ\ncoefficients (low to high): 0 -1\n");
  OutputRecord zero{kFormatVersion, "charpoly", "geometric", {}, polynomial_payload(IntPolynomial{})};
  CHECK(zero.payload["coefficients"] == nlohmann::ordered_json::array({"0"}));
}

TEST_CASE("relation sequences") {
  CHECK(relation_sequence("connected", 5, false) == std::vector<BigInt>{1, 4, 23, 156});
  CHECK(relation_sequence("trees", 5, false) == std::vector<BigInt>{1, 3, 12, 55});
  CHECK(relation_sequence("paths", 5, false) == std::vector<BigInt>{1, 3, 8, 20});
  CHECK(relation_sequence("trees", 1, false).empty());
  CHECK_THROWS_AS(relation_sequence("trees", 9, false), oracle::GuardExceeded);
  CHECK_THROWS_AS(relation_sequence("cycles", 5, false), std::invalid_argument);
  CHECK(parse_sequence_list("1, 4,23") == std::vector<BigInt>{1, 4, 23});
  CHECK_THROWS(parse_sequence_list("1,,2"));
  CHECK_THROWS(parse_sequence_list(""));
}

TEST_CASE("verify suites pass at small sizes") {
  VerifyLimits lim;
  lim.n_max = 5;
  lim.max = 6;
  for (const char* suite : {"vectors", "charpoly", "eigen", "oracle", "lemma1", "relation"}) {
    const auto report = run_verify(suite, lim);
    CHECK_MESSAGE(report.all_passed(), render_report(report, Format::Table));
    CHECK_FALSE(report.checks.empty());
  }
  CHECK_THROWS_AS(run_verify("everything", lim), std::invalid_argument);
  lim.n_max = 1;
  CHECK_THROWS_AS(run_verify("vectors", lim), std::invalid_argument);
}

TEST_CASE("report rendering") {
  VerifyReport rep{"demo", {{"a", true, "fine"}, {"b", false, "n=3: 1 vs 2"}}};
  CHECK_FALSE(rep.all_passed());
  const auto text = render_report(rep, Format::Table);
  CHECK(text.find("PASS  a  fine") != std::string::npos);
  CHECK(text.find("FAIL  b  n=3: 1 vs 2") != std::string::npos);
  const auto j = nlohmann::ordered_json::parse(render_report(rep, Format::Json));
  CHECK(j["passed"] == false);
  CHECK(j["checks"].size() == 2);
}
