#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "grundy/families.hpp"
#include "grundy/graph.hpp"
#include "grundy/verify.hpp"

#include "json.hpp"

using namespace grundy;

namespace {

// All rows of a given status, by graph6 string.
std::vector<std::string> rows_with_status(const VerificationReport& r,
                                          const std::string& status) {
  std::vector<std::string> out;
  for (const auto& row : r.rows)
    if (row.status == status) out.push_back(row.graph6);
  return out;
}

// Names of the extremal rows resolved through the catalog match field.
std::multiset<std::string> extremal_names(const VerificationReport& r) {
  std::multiset<std::string> out;
  for (const auto& row : r.rows)
    if (row.extremal) out.insert(row.catalog_match);
  return out;
}

const ReportRow& row_for(const VerificationReport& r, const std::string& g6) {
  for (const auto& row : r.rows)
    if (row.graph6 == g6) return row;
  throw std::runtime_error("row not found: " + g6);
}

}  // namespace

TEST_CASE("cubic enumeration matches the published census") {
  CHECK(enumerate_cubic(4).size() == 1);
  CHECK(enumerate_cubic(6).size() == 2);
  CHECK(enumerate_cubic(8).size() == 5);
  CHECK(enumerate_cubic(10).size() == 19);
  CHECK(isomorphic(enumerate_cubic(4)[0], make_complete(4)));

  const auto order6 = enumerate_cubic(6);
  const bool first_is_k33 = isomorphic(order6[0], make_complete_bipartite(3, 3));
  const Graph& k33 = first_is_k33 ? order6[0] : order6[1];
  const Graph& prism = first_is_k33 ? order6[1] : order6[0];
  CHECK(isomorphic(k33, make_complete_bipartite(3, 3)));
  CHECK(isomorphic(prism, catalog_entry("prism")->graph));

  CHECK_THROWS_AS(enumerate_cubic(7), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_cubic(12), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_cubic(2), std::invalid_argument);

  // without dedup the labeled list covers every class, with repeats
  const auto labeled = enumerate_cubic(6, false);
  CHECK(labeled.size() > 2);
  for (const Graph& g : labeled)
    CHECK((isomorphic(g, k33) || isomorphic(g, prism)));
}

TEST_CASE("graph6 line reader skips blanks and comments and counts lines") {
  std::istringstream in("# header\n\nC~\n  \nEFz_\n");
  const auto graphs = read_graph6_lines(in);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[0].order() == 4);
  CHECK(graphs[1].order() == 6);

  std::istringstream bad("C~\nnot-a-graph\n");
  try {
    read_graph6_lines(bad);
    FAIL("expected a parse failure");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("the half-order bound check on all order-8 cubic graphs") {
  const VerificationReport report = check_bounds(enumerate_cubic(8), BoundCheck::thm34);
  CHECK(report.check == "thm34");
  CHECK(report.rows.size() == 5);
  CHECK(report.failures() == 0);
  CHECK(report.count("ok") == 5);
  CHECK(report.passed());
  const auto names = extremal_names(report);
  CHECK(names == std::multiset<std::string>{"nyy", "q3", "tk", "tq3"});
  CHECK(report.summary() == "thm34: 5 graphs, 5 ok, 0 failures, 4 extremal, "
                            "0 excluded, 0 skipped");
}

TEST_CASE("hypothesis exclusions are matched by isomorphism") {
  const VerificationReport k4 = check_bounds({make_complete(4)}, BoundCheck::thm34);
  REQUIRE(k4.rows.size() == 1);
  CHECK(k4.rows[0].status == "excluded");
  CHECK(k4.rows[0].note == "complete graph excluded by hypothesis");
  CHECK(k4.rows[0].catalog_match == "k4");
  CHECK(k4.passed());

  const VerificationReport k33 =
      check_bounds({make_complete_bipartite(3, 3)}, BoundCheck::thm34);
  CHECK(k33.rows[0].status == "excluded");
  CHECK(k33.rows[0].note == "K_{3,3} excluded by hypothesis");

  const VerificationReport co =
      check_bounds({make_co2c4()}, BoundCheck::thm21);
  CHECK(co.rows[0].status == "excluded");
  CHECK(co.rows[0].note == "complement of two 4-cycles excluded by hypothesis");
  CHECK(co.rows[0].catalog_match == "co2c4");
  // the excluded graph genuinely violates the bound: slack is negative
  CHECK(co.rows[0].bound == "9/4");
  CHECK(co.rows[0].slack == "-1/4");
  CHECK(!co.rows[0].extremal);

  // K_{3,3} is not excluded from the forcing upper bound and attains it
  const VerificationReport zf =
      check_bounds({make_complete_bipartite(3, 3)}, BoundCheck::cor32);
  CHECK(zf.rows[0].status == "ok");
  CHECK(zf.rows[0].bound == "4");
  CHECK(zf.rows[0].slack == "0");
  CHECK(zf.rows[0].extremal);
  CHECK(zf.rows[0].catalog_match == "k33");
}

TEST_CASE("bound checks skip what the hypotheses do not cover") {
  const VerificationReport report = check_bounds(
      {make_cycle(5), graph6_decode("EwCW"), graph6_decode("Ch"), make_petersen()},
      BoundCheck::thm21);
  CHECK(report.rows[0].status == "skipped");  // 2-regular
  CHECK(report.rows[1].status == "skipped");  // disconnected
  CHECK(report.rows[2].status == "skipped");  // irregular
  CHECK(report.rows[3].status == "ok");
  CHECK(report.count("skipped") == 3);
  // the cubic-only bound skips regular graphs of other degrees
  const VerificationReport not_cubic =
      check_bounds({make_complete_bipartite(4, 4)}, BoundCheck::thm34);
  CHECK(not_cubic.rows[0].status == "skipped");
}

TEST_CASE("all four bounds hold across every small cubic graph") {
  for (int n = 4; n <= 10; n += 2) {
    const auto stream = enumerate_cubic(n);
    for (BoundCheck which : {BoundCheck::thm21, BoundCheck::thm31,
                             BoundCheck::cor32, BoundCheck::thm34}) {
      const VerificationReport report = check_bounds(stream, which);
      CAPTURE(n);
      CAPTURE(report.check);
      CHECK(report.failures() == 0);
    }
  }
}

TEST_CASE("duality holds on every small cubic graph") {
  for (int n = 4; n <= 10; n += 2) {
    const VerificationReport report = check_duality(enumerate_cubic(n));
    CAPTURE(n);
    CHECK(report.failures() == 0);
    CHECK(report.count("ok") == static_cast<int>(report.rows.size()));
  }
  // isolated vertices are skipped with a reason
  const VerificationReport lonely = check_duality({Graph(3, {{0, 1}})});
  CHECK(lonely.rows[0].status == "skipped");
  CHECK(lonely.rows[0].note == "isolated vertex");
}

TEST_CASE("the Z-sequence characterization is exact up to order 8") {
  const std::map<int, std::multiset<std::string>> expected = {
      {4, {}}, {6, {"prism"}}, {8, {"nyy", "q3", "tk", "tq3"}}};
  for (const auto& [n, names] : expected) {
    const VerificationReport report =
        check_characterization(enumerate_cubic(n), CharacterizationCheck::thm44);
    CAPTURE(n);
    CHECK(report.failures() == 0);
    CHECK(extremal_names(report) == names);
  }
}

TEST_CASE("order 10 exposes one graph outside the characterization list") {
  const VerificationReport report =
      check_characterization(enumerate_cubic(10), CharacterizationCheck::thm44);
  CHECK(report.failures() == 1);
  CHECK(report.count("ok") == 18);
  const auto failing = rows_with_status(report, "fail");
  REQUIRE(failing.size() == 1);
  const ReportRow& row = row_for(report, failing[0]);
  CHECK(isomorphic(graph6_decode(row.graph6), catalog_entry("ntt")->graph));
  CHECK(row.catalog_match == "ntt");
  CHECK(row.note == "extremal but not in the characterization list (ntt)");
  CHECK(row.gamma_gr_z == 5);
  CHECK(row.extremal);
  // the four genuinely extremal graphs: three listed ones plus the gap graph
  CHECK(extremal_names(report) ==
        std::multiset<std::string>{"ntt", "nxy", "petersen", "y2"});
}

TEST_CASE("the forcing characterization mirrors the Z-sequence one") {
  const VerificationReport report =
      check_characterization(enumerate_cubic(8), CharacterizationCheck::cor45);
  CHECK(report.failures() == 0);
  CHECK(extremal_names(report) == std::multiset<std::string>{"nyy", "q3", "tk", "tq3"});
}

TEST_CASE("the closed-variant characterization uses the eight-graph list") {
  const VerificationReport order6 =
      check_characterization(enumerate_cubic(6), CharacterizationCheck::cor46);
  CHECK(order6.failures() == 0);
  CHECK(extremal_names(order6) == std::multiset<std::string>{"k33", "prism"});

  const VerificationReport order10 =
      check_characterization(enumerate_cubic(10), CharacterizationCheck::cor46);
  CHECK(order10.failures() == 0);
  CHECK(extremal_names(order10) == std::multiset<std::string>{"petersen", "y2"});
}

TEST_CASE("the family characterization checks members only") {
  const VerificationReport report =
      check_characterization(enumerate_cubic(10), CharacterizationCheck::prop42);
  CHECK(report.failures() == 0);
  CHECK(report.count("ok") == 1);
  CHECK(report.count("skipped") == 18);
  const auto names = extremal_names(report);
  REQUIRE(names.size() == 1);
  CHECK(*names.begin() == "y2");

  // a member outside the extremal subfamily, small enough to solve exactly
  const Graph big = make_family_M(
      6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}},
      {UnitKind::Y, UnitKind::Y, UnitKind::Y, UnitKind::Y});
  const VerificationReport member = check_characterization({big}, CharacterizationCheck::prop42);
  CHECK(member.rows[0].status == "ok");
  CHECK(!member.rows[0].extremal);

  // and one above the exact-solver range, settled by the witness construction
  const Graph very_big = make_family_M(
      8, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {2, 7}},
      {UnitKind::Y, UnitKind::Y, UnitKind::Y, UnitKind::Y, UnitKind::Y});
  REQUIRE(very_big.order() == 28);
  const VerificationReport witness =
      check_characterization({very_big}, CharacterizationCheck::prop42);
  CHECK(witness.rows[0].status == "ok");
  CHECK(witness.rows[0].note == "witness Z-sequence of length 15 exceeds n/2");
}

TEST_CASE("reports serialize to CSV and JSON") {
  const VerificationReport report = check_bounds({make_complete(4)}, BoundCheck::thm34);
  const std::string csv = report.to_csv();
  CHECK(csv.find("graph6,n,k,connected,has_triangle,gamma_gr,gamma_gr_z,"
                 "zero_forcing,bound,slack,extremal,catalog_match,status,note") == 0);
  CHECK(csv.find("C~,4,3,true,true,,1,,2,-1,false,k4,excluded,"
                 "complete graph excluded by hypothesis") != std::string::npos);

  const auto j = nlohmann::json::parse(report.to_json());
  CHECK(j.at("check") == "thm34");
  CHECK(j.at("summary").at("total") == 1);
  CHECK(j.at("summary").at("excluded") == 1);
  REQUIRE(j.at("rows").size() == 1);
  CHECK(j.at("rows")[0].at("graph6") == "C~");
  CHECK(j.at("rows")[0].at("gamma_gr").is_null());
  CHECK(j.at("rows")[0].at("gamma_gr_z") == 1);
}

TEST_CASE("parallel verification produces byte-identical reports") {
  const auto stream = enumerate_cubic(8);
  const VerificationReport serial = check_bounds(stream, BoundCheck::thm34, 1);
  const VerificationReport parallel = check_bounds(stream, BoundCheck::thm34, 4);
  CHECK(serial.to_csv() == parallel.to_csv());
  const VerificationReport dual_serial = check_duality(stream, 1);
  const VerificationReport dual_parallel = check_duality(stream, 4);
  CHECK(dual_serial.to_csv() == dual_parallel.to_csv());
}

TEST_CASE("the bundled census files validate and check clean") {
  const std::string root = GRUNDY_SOURCE_DIR;
  const auto cubic12 = load_cubic_graph6_file(root + "/data/cubic12.g6", 12);
  CHECK(cubic12.size() == 85);
  const auto cubic14 = load_cubic_graph6_file(root + "/data/cubic14.g6", 14);
  CHECK(cubic14.size() == 509);

  const VerificationReport r12 =
      check_characterization(cubic12, CharacterizationCheck::thm44, 4);
  CHECK(r12.failures() == 0);
  CHECK(extremal_names(r12) == std::multiset<std::string>{"nxx", "xy"});

  const VerificationReport r14 =
      check_characterization(cubic14, CharacterizationCheck::thm44, 4);
  CHECK(r14.failures() == 0);
  CHECK(extremal_names(r14) == std::multiset<std::string>{"x2"});

  CHECK_THROWS_AS(load_cubic_graph6_file(root + "/data/cubic12.g6", 14),
                  std::runtime_error);
  CHECK_THROWS_AS(load_cubic_graph6_file(root + "/data/no-such-file.g6", 12),
                  std::runtime_error);
}

TEST_CASE("census files hold pairwise non-isomorphic graphs") {
  const std::string root = GRUNDY_SOURCE_DIR;
  const auto graphs = load_cubic_graph6_file(root + "/data/cubic12.g6", 12);
  std::map<std::string, std::vector<const Graph*>> buckets;
  for (const Graph& g : graphs) buckets[isomorphism_fingerprint(g)].push_back(&g);
  for (const auto& [fp, bucket] : buckets)
    for (std::size_t i = 0; i < bucket.size(); ++i)
      for (std::size_t j = i + 1; j < bucket.size(); ++j)
        CHECK(!isomorphic(*bucket[i], *bucket[j]));
}

TEST_CASE("the quartic extremal scan rejects low degree and finds no small hits") {
  CHECK_THROWS_AS(extremal_scan({make_complete(5)}, 3), std::invalid_argument);
  // K_{4,4} exceeds the bound strictly, and K_5 is excluded as complete
  const auto hits = extremal_scan({make_complete_bipartite(4, 4), make_complete(5)}, 4);
  CHECK(hits.empty());
}
