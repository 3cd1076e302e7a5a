#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <diagcat/errors.hpp>
#include <diagcat/relations.hpp>

using diagcat::Kind;
using diagcat::Relation;
using diagcat::SuiteReport;
using diagcat::relation_suite;
using diagcat::suite_kind;
using diagcat::suite_names;
using diagcat::verify_suite;

TEST_CASE("suite registry") {
  const auto& names = suite_names();
  REQUIRE(names.size() == 7);
  CHECK(names[0] == "T1");
  CHECK(suite_kind("T1") == Kind::TL);
  for (std::size_t i = 1; i < names.size(); ++i) {
    CHECK(suite_kind(names[i]) == Kind::FC);
  }
  CHECK_THROWS_AS(suite_kind("nope"), diagcat::ParseError);
  CHECK_THROWS_AS(relation_suite("nope"), diagcat::ParseError);
}

TEST_CASE("every suite holds exactly") {
  for (const std::string& name : suite_names()) {
    CAPTURE(name);
    const SuiteReport report = verify_suite(name);
    CHECK(report.all_hold);
    CHECK(!report.results.empty());
    for (const auto& r : report.results) {
      CAPTURE(r.id);
      CHECK(r.holds);
      CHECK(r.detail.empty());
    }
  }
}

TEST_CASE("BJ suite grows with the tower index") {
  const auto small = relation_suite("BJ", 4);
  const auto large = relation_suite("BJ", 6);
  CHECK(large.size() > small.size());
  const SuiteReport report = verify_suite("BJ", 6);
  CHECK(report.all_hold);
}

TEST_CASE("relations have at least two words each") {
  for (const std::string& name : suite_names()) {
    for (const Relation& rel : relation_suite(name)) {
      CAPTURE(rel.id);
      CHECK(rel.words.size() >= 2);
    }
  }
}

TEST_CASE("a perturbed relation is detected") {
  // Sanity check that the checker can fail: claim m m* = id.
  diagcat::SuiteReport fake;
  const auto gens = diagcat::GeneratorSet::build(Kind::FC, 4);
  const auto lhs = diagcat::evaluate_word("m . m*", gens);
  const auto rhs = diagcat::evaluate_word("id_1", gens);
  CHECK_FALSE(diagcat::equal_padded(lhs, rhs));
}
