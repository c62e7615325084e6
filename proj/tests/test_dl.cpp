#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "normex/extension.hpp"
#include "normex/generator.hpp"
#include "normex/graph.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace normex;

namespace {

bool matches_oracle(const DefeasibleTheory& t) {
  Extension e = compute_extension(t);
  oracles::NaiveExtension n = oracles::naive_extension(t);
  return e.plus_delta == n.pd && e.minus_delta == n.md &&
         e.plus_partial == n.pp && e.minus_partial == n.mp;
}

}  // namespace

TEST_CASE("definite conclusions of the credit theory are its facts") {
  auto [plus, minus] = compute_definite(fixtures::credit_theory());
  CHECK(plus == std::set<Literal>{pos("insolvent"), pos("creditLicense")});
  // everything else occurring is strictly refuted (no strict rules at all)
  CHECK(minus.count(pos("banned")));
  CHECK(minus.count(pos("creditActivity")));
  CHECK(minus.count(neg("creditActivity")));
}

TEST_CASE("strict chaining reaches derived literals") {
  DefeasibleTheory t;
  t.facts = {pos("p")};
  t.rules = {make_rule("r", RuleKind::strict, {pos("p")}, pos("q"))};
  auto [plus, minus] = compute_definite(t);
  CHECK(plus.count(pos("p")));
  CHECK(plus.count(pos("q")));
  CHECK_FALSE(minus.count(pos("q")));
}

TEST_CASE("empty theory has an empty definite extension") {
  auto [plus, minus] = compute_definite(DefeasibleTheory{});
  CHECK(plus.empty());
  CHECK(minus.empty());
}

TEST_CASE("credit theory defeasible conclusions") {
  Extension e = compute_extension(fixtures::credit_theory());
  std::set<Literal> expected_plus{pos("insolvent"), pos("creditLicense"),
                                  pos("banned"), neg("creditActivity")};
  CHECK(e.plus_partial == expected_plus);
  CHECK(e.minus_partial.count(pos("creditActivity")));
  CHECK(e.minus_partial.count(pos("actsOnBehalfPrincipal")));
  CHECK(e.minus_partial.count(pos("principalCreditLicense")));
}

TEST_CASE("an unopposed applicable rule fires") {
  DefeasibleTheory t;
  t.facts = {pos("p")};
  t.rules = {make_rule("r", RuleKind::defeasible, {pos("p")}, pos("q"))};
  Extension e = compute_extension(t);
  CHECK(e.plus_partial.count(pos("q")));
}

TEST_CASE("an unresolved conflict refutes both sides") {
  DefeasibleTheory t;
  t.facts = {pos("a"), pos("b")};
  t.rules = {make_rule("r1", RuleKind::defeasible, {pos("a")}, pos("c")),
             make_rule("r2", RuleKind::defeasible, {pos("b")}, neg("c"))};
  Extension e = compute_extension(t);
  CHECK(e.minus_partial.count(pos("c")));
  CHECK(e.minus_partial.count(neg("c")));
  CHECK_FALSE(e.plus_partial.count(pos("c")));
  CHECK_FALSE(e.plus_partial.count(neg("c")));
}

TEST_CASE("defeaters block but never support") {
  DefeasibleTheory t;
  t.facts = {pos("a")};
  t.rules = {make_rule("r1", RuleKind::defeater, {pos("a")}, pos("q"))};
  Extension e = compute_extension(t);
  CHECK_FALSE(e.plus_partial.count(pos("q")));  // no supporting rule

  t.rules.push_back(make_rule("r2", RuleKind::defeasible, {pos("a")}, neg("q")));
  e = compute_extension(t);
  CHECK(e.minus_partial.count(neg("q")));  // defeater blocks the opponent
  CHECK_FALSE(e.plus_partial.count(neg("q")));
}

TEST_CASE("team defense fires through distinct defenders") {
  DefeasibleTheory t;
  t.facts = {pos("f1"), pos("f2"), pos("g1"), pos("g2")};
  t.rules = {make_rule("t1", RuleKind::defeasible, {pos("f1")}, pos("q")),
             make_rule("t2", RuleKind::defeasible, {pos("f2")}, pos("q")),
             make_rule("s1", RuleKind::defeasible, {pos("g1")}, neg("q")),
             make_rule("s2", RuleKind::defeasible, {pos("g2")}, neg("q"))};
  t.superiority = {{"t1", "s1"}, {"t2", "s2"}};
  Extension e = compute_extension(t);
  CHECK(e.plus_partial.count(pos("q")));
  CHECK(e.minus_partial.count(neg("q")));
}

TEST_CASE("d-extension of the credit theory") {
  DExtensionSet d = d_extension(fixtures::credit_argumentation());
  std::set<Literal> expected{pos("insolvent"),
                             pos("creditLicense"),
                             pos("banned"),
                             neg("creditActivity"),
                             neg("actsOnBehalfPrincipal"),
                             neg("principalCreditLicense")};
  CHECK(d.literals == expected);
  CHECK(d.consistent());
}

TEST_CASE("d-extension edge cases") {
  CHECK(d_extension({}, {}, {}).literals.empty());

  std::vector<Rule> rules{make_rule("r", RuleKind::defeasible, {pos("p")}, pos("q"))};
  DExtensionSet d = d_extension(rules, {}, {pos("p")});
  CHECK(d.literals == std::set<Literal>{pos("p"), pos("q")});
}

TEST_CASE("d-extension rejects invalid argumentation theories") {
  std::vector<Rule> rules{make_rule("r", RuleKind::strict, {pos("p")}, pos("q"))};
  CHECK_THROWS_AS(d_extension(rules, {}, {pos("p")}), InvalidTheory);
}

TEST_CASE("worklist engine matches the naive oracle on an exhaustive family") {
  // candidate pool over atoms a, b, c: all antecedent shapes that matter for
  // the proof conditions, including strict rules, defeaters and a cycle
  std::vector<Rule> pool{
      make_rule("p1", RuleKind::defeasible, {}, pos("b")),
      make_rule("p2", RuleKind::defeasible, {}, neg("b")),
      make_rule("p3", RuleKind::defeasible, {pos("a")}, pos("b")),
      make_rule("p4", RuleKind::defeasible, {pos("a")}, neg("b")),
      make_rule("p5", RuleKind::defeasible, {pos("b")}, pos("c")),
      make_rule("p6", RuleKind::defeasible, {pos("b")}, neg("c")),
      make_rule("p7", RuleKind::defeasible, {neg("b")}, pos("c")),
      make_rule("p8", RuleKind::defeasible, {pos("c")}, pos("b")),  // cycle
      make_rule("p9", RuleKind::strict, {pos("a")}, pos("b")),
      make_rule("p10", RuleKind::defeater, {pos("a")}, neg("b")),
  };
  std::vector<std::set<Literal>> fact_choices{
      {}, {pos("a")}, {pos("a"), neg("c")}};

  int checked = 0;
  int n = static_cast<int>(pool.size());
  for (int i = -1; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        std::set<int> picks;
        if (i >= 0) picks.insert(i);
        if (j >= 0) picks.insert(j);
        if (k >= 0) picks.insert(k);
        std::vector<Rule> rules;
        for (int x : picks) rules.push_back(pool[x]);

        // all orientations of every conflicting pair
        std::vector<std::pair<std::string, std::string>> conflicts;
        for (const auto& r : rules)
          for (const auto& s : rules)
            if (r.consequent == complement(s.consequent))
              conflicts.push_back({r.label, s.label});
        int m = static_cast<int>(conflicts.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
          for (const auto& facts : fact_choices) {
            DefeasibleTheory t;
            t.facts.assign(facts.begin(), facts.end());
            t.rules = rules;
            for (int bit = 0; bit < m; ++bit)
              if (mask & (1 << bit)) t.superiority.push_back(conflicts[bit]);
            REQUIRE(matches_oracle(t));
            ++checked;
          }
        }
      }
  CHECK(checked > 1000);
}

TEST_CASE("worklist engine matches the naive oracle on random corpora") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GenParams p;
    p.seed = seed;
    p.atoms = 3 + static_cast<int>(seed % 4);
    p.rules = 2 + static_cast<int>(seed % 9);
    p.fact_atoms = 1 + static_cast<int>(seed % 3);
    p.free_fact_atoms = static_cast<int>(seed % 3);
    p.max_body = 1 + static_cast<int>(seed % 3);
    DefeasibleTheory t = generate_theory(p);
    REQUIRE(matches_oracle(t));
  }
}

TEST_CASE("coherence and monotone tagging on random theories") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenParams p;
    p.seed = seed + 1000;
    p.atoms = 4 + static_cast<int>(seed % 3);
    p.rules = 3 + static_cast<int>(seed % 8);
    p.fact_atoms = 1 + static_cast<int>(seed % 3);
    DefeasibleTheory t = generate_theory(p);
    Extension e = compute_extension(t);
    for (const auto& l : e.plus_partial) CHECK_FALSE(e.minus_partial.count(l));
    for (const auto& l : e.plus_delta) {
      CHECK_FALSE(e.minus_delta.count(l));
      CHECK(e.plus_partial.count(l));  // +Delta subseteq +partial
    }
  }
}

TEST_CASE("d-extensions of acyclic decided theories are consistent") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenParams p;
    p.seed = seed + 5000;
    p.atoms = 3 + static_cast<int>(seed % 4);
    p.rules = 1 + static_cast<int>(seed % 10);
    p.fact_atoms = 1 + static_cast<int>(seed % 3);
    DefeasibleTheory t = generate_theory(p);
    REQUIRE(is_acyclic_setup(t));
    auto res = ArgumentationTheory::validate(t);
    REQUIRE(res.ok());
    CHECK(d_extension(*res.theory).consistent());
  }
}

TEST_CASE("long rule chains are fully derived") {
  const int n = 200;
  DefeasibleTheory t;
  t.facts = {pos("q0")};
  for (int i = 0; i < n; ++i)
    t.rules.push_back(make_rule("c" + std::to_string(i), RuleKind::defeasible,
                                {pos("q" + std::to_string(i))},
                                pos("q" + std::to_string(i + 1))));
  Extension e = compute_extension(t);
  CHECK(e.plus_partial.count(pos("q" + std::to_string(n))));
  CHECK(e.plus_partial.size() == static_cast<std::size_t>(n + 1));
}
