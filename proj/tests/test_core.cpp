#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "normex/graph.hpp"
#include "normex/parser.hpp"
#include "normex/theory.hpp"
#include "support/fixtures.hpp"

using namespace normex;

TEST_CASE("complement flips polarity and is an involution") {
  CHECK(complement(pos("p")) == neg("p"));
  CHECK(complement(neg("p")) == pos("p"));
  CHECK(complement(complement(pos("banned"))) == pos("banned"));
  for (const char* atom : {"a", "Zz9", "credit_license", "x_1"}) {
    Literal l{atom, false};
    CHECK(complement(complement(l)) == l);
    CHECK(complement(l).atom == l.atom);
    CHECK(complement(l).positive != l.positive);
  }
}

TEST_CASE("literal ordering puts the positive polarity first") {
  CHECK(pos("a") < neg("a"));
  CHECK(neg("a") < pos("b"));
}

TEST_CASE("credit theory validates as an argumentation theory") {
  auto res = ArgumentationTheory::validate(fixtures::credit_theory());
  REQUIRE(res.ok());
  CHECK(res.theory->facts().size() == 2);
  CHECK(res.theory->rules().size() == 5);
}

TEST_CASE("inconsistent facts are rejected") {
  DefeasibleTheory t;
  t.facts = {pos("p"), neg("p")};
  auto res = ArgumentationTheory::validate(t);
  REQUIRE_FALSE(res.ok());
  REQUIRE(res.violations.size() == 1);
  CHECK(res.violations[0].kind == ViolationKind::inconsistent_facts);
}

TEST_CASE("a fact concluded by a rule is rejected") {
  DefeasibleTheory t;
  t.facts = {pos("p")};
  t.rules = {make_rule("r", RuleKind::defeasible, {pos("q")}, pos("p"))};
  auto res = ArgumentationTheory::validate(t);
  REQUIRE_FALSE(res.ok());
  CHECK(res.violations[0].kind == ViolationKind::fact_concluded_by_rule);

  SUBCASE("also when the rule concludes the complement") {
    t.rules = {make_rule("r", RuleKind::defeasible, {pos("q")}, neg("p"))};
    auto res2 = ArgumentationTheory::validate(t);
    REQUIRE_FALSE(res2.ok());
    CHECK(res2.violations[0].kind == ViolationKind::fact_concluded_by_rule);
  }
}

TEST_CASE("strict rules and defeaters are rejected") {
  DefeasibleTheory t;
  t.rules = {make_rule("r", RuleKind::strict, {pos("a")}, pos("b"))};
  auto res = ArgumentationTheory::validate(t);
  REQUIRE_FALSE(res.ok());
  CHECK(res.violations[0].kind == ViolationKind::non_defeasible_rule);
}

TEST_CASE("dangling superiority is reported") {
  DefeasibleTheory t;
  t.rules = {make_rule("r1", RuleKind::defeasible, {pos("a")}, pos("b"))};
  t.superiority = {{"r1", "ghost"}};
  auto res = ArgumentationTheory::validate(t);
  REQUIRE_FALSE(res.ok());
  CHECK(res.violations[0].kind == ViolationKind::dangling_superiority);
}

TEST_CASE("duplicate rule labels are reported") {
  DefeasibleTheory t;
  t.rules = {make_rule("r", RuleKind::defeasible, {pos("a")}, pos("b")),
             make_rule("r", RuleKind::defeasible, {pos("a")}, pos("c"))};
  auto res = ArgumentationTheory::validate(t);
  REQUIRE_FALSE(res.ok());
  CHECK(res.violations[0].kind == ViolationKind::duplicate_rule_label);
}

TEST_CASE("dependency graph of the credit theory") {
  DependencyGraph g = dependency_graph(fixtures::credit_theory());
  std::set<std::string> expected_vertices{
      "creditActivity", "creditLicense",         "actsOnBehalfPrincipal",
      "principalCreditLicense", "banned", "insolvent"};
  CHECK(g.vertices == expected_vertices);
  std::set<std::pair<std::string, std::string>> expected_edges{
      {"banned", "creditActivity"}};
  CHECK(g.edges == expected_edges);
  CHECK(g.is_acyclic());
}

TEST_CASE("dependency graph of the empty theory is empty") {
  DependencyGraph g = dependency_graph(DefeasibleTheory{});
  CHECK(g.vertices.empty());
  CHECK(g.edges.empty());
  CHECK(g.is_acyclic());
}

TEST_CASE("mutual rules produce a cyclic dependency graph") {
  DefeasibleTheory t;
  t.rules = {make_rule("r1", RuleKind::defeasible, {pos("a")}, pos("b")),
             make_rule("r2", RuleKind::defeasible, {pos("b")}, pos("a"))};
  DependencyGraph g = dependency_graph(t);
  std::set<std::pair<std::string, std::string>> expected{{"a", "b"}, {"b", "a"}};
  CHECK(g.edges == expected);
  CHECK_FALSE(g.is_acyclic());
  CHECK_FALSE(is_acyclic_setup(t));
}

TEST_CASE("acyclic setup checks both conditions") {
  CHECK(is_acyclic_setup(fixtures::credit_theory()));

  DefeasibleTheory t;
  t.rules = {make_rule("r1", RuleKind::defeasible, {pos("a")}, pos("b")),
             make_rule("r2", RuleKind::defeasible, {pos("a")}, neg("b"))};
  t.superiority = {{"r1", "r2"}, {"r2", "r1"}};
  CHECK_FALSE(is_acyclic_setup(t));

  t.superiority = {{"r1", "r2"}};
  CHECK(is_acyclic_setup(t));

  SUBCASE("self superiority is cyclic") {
    t.superiority = {{"r1", "r1"}};
    CHECK_FALSE(superiority_acyclic(t));
  }
}

TEST_CASE("occurring literals cover every syntactic position") {
  DefeasibleTheory t = fixtures::credit_theory();
  auto occ = t.occurring_literals();
  for (const auto& f : t.facts) CHECK(occ.count(f));
  for (const auto& r : t.rules) {
    CHECK(occ.count(r.consequent));
    for (const auto& a : r.antecedents) CHECK(occ.count(a));
  }
  CHECK(occ.size() == 7);  // nothing beyond the syntax
}

TEST_CASE("validation verdict survives a serialize round trip") {
  DefeasibleTheory t = fixtures::credit_theory();
  auto first = ArgumentationTheory::validate(t);
  auto rt = parse_theory(serialize_theory(t));
  REQUIRE(rt.ok());
  auto second = ArgumentationTheory::validate(rt.theory);
  CHECK(first.ok() == second.ok());

  DefeasibleTheory bad;
  bad.facts = {pos("p"), neg("p")};
  auto b1 = ArgumentationTheory::validate(bad);
  auto brt = parse_theory(serialize_theory(bad));
  REQUIRE(brt.ok());
  auto b2 = ArgumentationTheory::validate(brt.theory);
  CHECK(b1.ok() == b2.ok());
  CHECK(b1.violations.size() == b2.violations.size());
}

TEST_CASE("structurally equal theories yield equal dependency graphs") {
  DefeasibleTheory a = fixtures::credit_theory();
  auto rt = parse_theory(serialize_theory(a));  // reordered canonical form
  REQUIRE(rt.ok());
  CHECK(structurally_equal(a, rt.theory));
  CHECK(dependency_graph(a) == dependency_graph(rt.theory));
}
