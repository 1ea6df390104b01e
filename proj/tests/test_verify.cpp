#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "supereuler/verify.hpp"

using namespace supereuler;

namespace {

CheckParams range(int lo, int hi, std::vector<int> ks = {}, int workers = 1) {
  CheckParams p;
  p.n_min = lo;
  p.n_max = hi;
  p.k_values = std::move(ks);
  p.workers = workers;
  return p;
}

long long count_of(const VerificationReport& r, const std::string& outcome) {
  auto it = r.outcome_counts.find(outcome);
  return it == r.outcome_counts.end() ? 0 : it->second;
}

std::string render(const VerificationReport& r, const std::string& format) {
  std::ostringstream out;
  emit_report(r, format, out);
  return out.str();
}

}  // namespace

TEST_CASE("theorem names round-trip through the parser") {
  for (TheoremId id : {TheoremId::T1, TheoremId::T2, TheoremId::T5,
                       TheoremId::T6, TheoremId::T7, TheoremId::T9,
                       TheoremId::L1, TheoremId::L2, TheoremId::C8}) {
    CHECK(parse_theorem(theorem_name(id)) == id);
  }
  CHECK_FALSE(parse_theorem("T3").has_value());
  CHECK_FALSE(parse_theorem("").has_value());
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(check_theorem(TheoremId::T1, range(0, 6)),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_theorem(TheoremId::T1, range(4, 11)),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_theorem(TheoremId::T1, range(6, 4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_theorem(TheoremId::T1, range(4, 5, {}, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_theorem(TheoremId::T7, range(4, 5, {0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_theorem(TheoremId::L1, range(4, 5, {-1})),
                  std::invalid_argument);
  // k = 0 is meaningful for the k-hamiltonicity statement (plain
  // hamiltonicity of the line graph).
  VerificationReport r = check_theorem(TheoremId::C8, range(4, 4, {0}));
  CHECK(r.pass);
  CHECK_THROWS_AS(check_theorem(TheoremId::T1,
                                [] {
                                  CheckParams p;
                                  p.input_file = "no_such_file.g6";
                                  return p;
                                }()),
                  std::runtime_error);
}

TEST_CASE("spanning trail classification holds on 4 to 6 vertices") {
  VerificationReport r = check_theorem(TheoremId::T1, range(4, 6));
  CHECK(r.pass);
  CHECK(r.counterexamples == 0);
  CHECK(r.graphs_checked == 56);
  CHECK(count_of(r, "classified") == 56);
}

TEST_CASE("collapsibility trichotomy holds on 4 to 6 vertices") {
  VerificationReport r = check_theorem(TheoremId::T2, range(4, 6));
  CHECK(r.pass);
  CHECK(r.graphs_checked == 56);
  CHECK(count_of(r, "collapsible") == 41);
  CHECK(count_of(r, "bipartite_exception") == 3);
  CHECK(count_of(r, "star_exception") == 3);
  CHECK(count_of(r, "star_reduction") == 9);
}

TEST_CASE("line graph hamiltonicity bound holds on 6 vertices") {
  VerificationReport r = check_theorem(TheoremId::T5, range(6, 6));
  CHECK(r.pass);
  CHECK(r.graphs_checked == 67);
  CHECK(count_of(r, "line_hamiltonian") == 67);
}

TEST_CASE("prescribed-edge trail statement holds with its one exception family") {
  VerificationReport r = check_theorem(TheoremId::T7, range(4, 6, {1, 2, 3}));
  CHECK(r.pass);
  CHECK(r.counterexamples == 0);
  CHECK(r.graphs_checked == 20);
  CHECK(r.records.size() == 32);
  CHECK(count_of(r, "all_trails") == 30);
  CHECK(count_of(r, "exception") == 2);

  std::vector<const GraphRecord*> exceptions;
  for (const GraphRecord& rec : r.records)
    if (rec.outcome == "exception") exceptions.push_back(&rec);
  REQUIRE(exceptions.size() == 2);
  CHECK(exceptions[0]->graph6 == "C^");
  CHECK(exceptions[0]->k == 1);
  CHECK(exceptions[1]->graph6 == "E?~w");
  CHECK(exceptions[1]->k == 1);
  for (const GraphRecord* rec : exceptions) {
    CHECK_FALSE(rec->counterexample);
    REQUIRE(rec->detail.contains("failing_sets"));
    REQUIRE(rec->detail["failing_sets"].size() == 1);
    REQUIRE(rec->detail["failing_sets"][0].size() == 1);
  }
  // The only unusable edge set is the hub-hub edge in each case.
  CHECK(exceptions[0]->detail["failing_sets"][0][0] == "2-3");
  CHECK(exceptions[1]->detail["failing_sets"][0][0] == "4-5");
}

TEST_CASE("reduced-graph structure statement holds on 1 to 6 vertices") {
  VerificationReport r = check_theorem(TheoremId::T9, range(1, 6));
  CHECK(r.pass);
  CHECK(r.graphs_checked == 143);
  CHECK(count_of(r, "reduced_ok") == 76);
  CHECK(count_of(r, "reduction_trivial") == 67);
  CHECK(count_of(r, "structure_violation") == 0);
}

TEST_CASE("edge-deletion degree bound holds on 1 to 6 vertices") {
  VerificationReport r = check_theorem(TheoremId::L1, range(1, 6, {1, 2}));
  CHECK(r.pass);
  CHECK(r.graphs_checked == 21);
  CHECK(r.records.size() == 30);
  CHECK(count_of(r, "degree_bound_holds") == 30);
}

TEST_CASE("reduction degree bound holds on 1 to 6 vertices") {
  VerificationReport r = check_theorem(TheoremId::L2, range(1, 6));
  CHECK(r.pass);
  CHECK(r.graphs_checked == 59);
  CHECK(count_of(r, "reduction_bound_holds") == 17);
  CHECK(count_of(r, "reduction_edgeless") == 42);
}

TEST_CASE("line graph k-hamiltonicity holds on 4 to 6 vertices") {
  VerificationReport r = check_theorem(TheoremId::C8, range(4, 6, {1, 2, 3}));
  CHECK(r.pass);
  CHECK(r.graphs_checked == 20);
  CHECK(r.records.size() == 32);
  CHECK(count_of(r, "k_hamiltonian") == 32);
  CHECK(count_of(r, "route_disagreement") == 0);
}

TEST_CASE("the collapsibility classification has genuine counterexamples") {
  // Two 5-vertex trees meet the degree bound yet fit no clause of the
  // statement; the checker reports them honestly instead of passing.
  VerificationReport r = check_theorem(TheoremId::T6, range(4, 6));
  CHECK_FALSE(r.pass);
  CHECK(r.counterexamples == 2);
  std::vector<std::string> offenders;
  for (const GraphRecord& rec : r.records) {
    if (!rec.counterexample) continue;
    offenders.push_back(rec.graph6);
    CHECK(rec.n == 5);
    CHECK(rec.outcome == "unclassified");
    CHECK(rec.reason == "graph fits no clause of the trichotomy");
  }
  CHECK(offenders == std::vector<std::string>{"DC[", "DKK"});

  VerificationReport tight = check_theorem(TheoremId::T6, range(4, 4));
  CHECK(tight.pass);
  CHECK(tight.counterexamples == 0);

  VerificationReport seven = check_theorem(TheoremId::T6, range(7, 7));
  CHECK_FALSE(seven.pass);
  CHECK(count_of(seven, "discovered_exception") == 2);
  CHECK(count_of(seven, "unclassified") == 6);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
  VerificationReport a = check_theorem(TheoremId::T7, range(4, 5, {1}, 1));
  VerificationReport b = check_theorem(TheoremId::T7, range(4, 5, {1}, 1));
  VerificationReport c = check_theorem(TheoremId::T7, range(4, 5, {1}, 4));
  for (const std::string& format : {std::string("records"), std::string("summary")}) {
    CHECK(render(a, format) == render(b, format));
    CHECK(render(a, format) == render(c, format));
  }

  VerificationReport t6a = check_theorem(TheoremId::T6, range(5, 5, {}, 1));
  VerificationReport t6b = check_theorem(TheoremId::T6, range(5, 5, {}, 3));
  CHECK(render(t6a, "records") == render(t6b, "records"));
  CHECK(render(t6a, "summary") == render(t6b, "summary"));
}

TEST_CASE("an input file restricts the checked graphs") {
  std::string path = "tmp_verify_input.g6";
  {
    std::ofstream out(path);
    out << "# hand-picked graphs, one outside the range\n";
    out << "C^\n";       // n = 4: the diamond-with-hubs exception
    out << "DLo\n";      // n = 5: the five-cycle (xi too small for T7 k=1)
    out << "B?\n";       // n = 3: outside [4, 5], skipped
  }
  VerificationReport r = check_theorem(TheoremId::T7, [&] {
    CheckParams p = range(4, 5, {1});
    p.input_file = path;
    return p;
  }());
  std::remove(path.c_str());
  CHECK(r.pass);
  // The five-cycle misses the edge-degree hypothesis, so only the
  // four-vertex exception graph produces a record.
  CHECK(r.graphs_checked == 1);
  CHECK(count_of(r, "exception") == 1);

  // Feeding the known offender to the trichotomy check fails it.
  std::string bad = "tmp_verify_bad.g6";
  {
    std::ofstream out(bad);
    out << "DKK\n";
  }
  VerificationReport offender = check_theorem(TheoremId::T6, [&] {
    CheckParams p = range(4, 6);
    p.input_file = bad;
    return p;
  }());
  std::remove(bad.c_str());
  CHECK_FALSE(offender.pass);
  CHECK(offender.counterexamples == 1);
  std::string summary = render(offender, "summary");
  CHECK(summary.find("status: FAIL") != std::string::npos);
}

TEST_CASE("record lines are keyed json with reasons only on counterexamples") {
  VerificationReport r = check_theorem(TheoremId::T6, range(5, 5));
  std::istringstream lines(render(r, "records"));
  std::string line;
  int parsed = 0;
  int with_reason = 0;
  while (std::getline(lines, line)) {
    nlohmann::json row = nlohmann::json::parse(line);
    REQUIRE(row.contains("graph6"));
    REQUIRE(row.contains("outcome"));
    if (row.contains("reason")) ++with_reason;
    ++parsed;
  }
  CHECK(parsed == static_cast<int>(r.records.size()));
  CHECK(with_reason == 2);

  std::string summary = render(r, "summary");
  CHECK(summary.find("status: FAIL") != std::string::npos);
  CHECK(summary.find("counterexamples: 2") != std::string::npos);

  CHECK_THROWS_AS(render(r, "xml"), std::invalid_argument);
}
