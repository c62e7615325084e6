#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "normex/argumentation.hpp"
#include "normex/dot.hpp"
#include "normex/generator.hpp"
#include "normex/graph.hpp"
#include "normex/parser.hpp"
#include "support/fixtures.hpp"

using namespace normex;

TEST_CASE("credit source parses to the expected structure") {
  auto pr = parse_theory(fixtures::kCreditSource);
  REQUIRE(pr.ok());
  const DefeasibleTheory& t = pr.theory;
  REQUIRE(t.facts.size() == 2);
  CHECK(t.facts[0] == pos("insolvent"));  // declaration order kept
  CHECK(t.facts[1] == pos("creditLicense"));
  REQUIRE(t.rules.size() == 5);
  CHECK(t.rules[0].label == "s1");
  CHECK(t.rules[0].antecedents.empty());
  CHECK(t.rules[0].consequent == neg("creditActivity"));
  CHECK(t.rules[4].label == "s5");
  CHECK(t.rules[4].antecedents == std::vector<Literal>{pos("insolvent")});
  CHECK(t.superiority.size() == 4);
  CHECK(t.is_superior("s4", "s2"));
  CHECK_FALSE(t.is_superior("s2", "s4"));
}

TEST_CASE("empty input parses to the empty theory") {
  auto pr = parse_theory("");
  REQUIRE(pr.ok());
  CHECK(pr.theory.facts.empty());
  CHECK(pr.theory.rules.empty());
  CHECK(serialize_theory(pr.theory).empty());
}

TEST_CASE("missing trailing period yields one spanned error") {
  auto pr = parse_theory("s1: => q");
  REQUIRE_FALSE(pr.ok());
  REQUIRE(pr.errors.size() == 1);
  CHECK(pr.errors[0].span.line == 1);
  CHECK(pr.errors[0].span.column == 9);  // just past the statement
  CHECK_FALSE(pr.errors[0].expected.empty());
}

TEST_CASE("all arrow kinds are recognized") {
  auto pr = parse_theory("r1: a -> b.\nr2: a => b.\nr3: a ~> -b.\n");
  REQUIRE(pr.ok());
  CHECK(pr.theory.rules[0].kind == RuleKind::strict);
  CHECK(pr.theory.rules[1].kind == RuleKind::defeasible);
  CHECK(pr.theory.rules[2].kind == RuleKind::defeater);
  CHECK(pr.theory.rules[2].consequent == neg("b"));
}

TEST_CASE("unlabeled rules get fresh auto labels in file order") {
  auto pr = parse_theory("=> q.\na => b.\nr1: b => c.\n");
  REQUIRE(pr.ok());
  REQUIRE(pr.theory.rules.size() == 3);
  CHECK(pr.theory.rules[0].label == "r2");  // r1 is taken
  CHECK(pr.theory.rules[1].label == "r3");
  CHECK(pr.theory.rules[2].label == "r1");
  CHECK(serialize_theory(pr.theory).find("r2:") != std::string::npos);
}

TEST_CASE("duplicate labels and unknown superiority labels are errors") {
  auto dup = parse_theory("r1: a => b.\nr1: a => c.\n");
  REQUIRE_FALSE(dup.ok());
  CHECK(dup.errors[0].message.find("duplicate") != std::string::npos);

  auto dangling = parse_theory("r1: a => b.\nr1 > r9.\n");
  REQUIRE_FALSE(dangling.ok());
  CHECK(dangling.errors[0].message.find("unknown rule") != std::string::npos);
}

TEST_CASE("errors recover at statement boundaries") {
  auto pr = parse_theory("r1: a => .\nr2: a => b.\nfacts p.\n");
  REQUIRE_FALSE(pr.ok());
  CHECK(pr.errors.size() >= 2);  // bad head and bad facts statement
  for (const auto& e : pr.errors) {
    CHECK(e.span.line >= 1);
    CHECK(e.span.column >= 1);
    CHECK(e.span.length >= 1);
  }
}

TEST_CASE("parser is total on hostile inputs") {
  const char* cases[] = {
      ">>>", "....", "facts:", "facts: -.", "r1:", "r1: >", "-", "# only a comment",
      "a > ", "r1: a => b", "\xff\xfe", "facts: p,.", "p q r."};
  for (const char* s : cases) {
    auto pr = parse_theory(s);
    if (!pr.ok())
      for (const auto& e : pr.errors) CHECK(e.span.length >= 1);
  }
  // truncations of a real source never crash
  std::string src = fixtures::kCreditSource;
  for (std::size_t cut = 0; cut < src.size(); cut += 7)
    (void)parse_theory(src.substr(0, cut));
}

TEST_CASE("credit theory round trips through the canonical form") {
  DefeasibleTheory t = fixtures::credit_theory();
  auto rt = parse_theory(serialize_theory(t));
  REQUIRE(rt.ok());
  CHECK(structurally_equal(t, rt.theory));
}

TEST_CASE("random theories survive parse-serialize-parse") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenParams p;
    p.seed = seed;
    p.atoms = 3 + static_cast<int>(seed % 5);
    p.rules = 2 + static_cast<int>(seed % 9);
    p.fact_atoms = 1 + static_cast<int>(seed % 3);
    p.free_fact_atoms = static_cast<int>(seed % 2);
    DefeasibleTheory t = generate_theory(p);
    auto rt = parse_theory(serialize_theory(t));
    REQUIRE(rt.ok());
    CHECK(structurally_equal(t, rt.theory));
    // serialization is canonical: a second round trip is byte-identical
    CHECK(serialize_theory(rt.theory) == serialize_theory(t));
  }
}

TEST_CASE("framework DOT export lists five nodes and one attack") {
  Framework fw = Framework::build(fixtures::credit_argumentation());
  std::string dot = export_dot(fw);
  CHECK(dot.find("digraph framework") != std::string::npos);
  for (const char* node : {"A1", "A2", "A3", "A4", "A5"})
    CHECK(dot.find(std::string(node) + " [label=") != std::string::npos);
  CHECK(dot.find("A4 -> A5;") != std::string::npos);
  CHECK(dot.find("A5 -> A4") == std::string::npos);
}

TEST_CASE("empty framework DOT export is header only") {
  DefeasibleTheory empty;
  auto at = ArgumentationTheory::validate(empty);
  REQUIRE(at.ok());
  std::string dot = export_dot(Framework::build(*at.theory));
  CHECK(dot == "digraph framework {\n}\n");
}

TEST_CASE("dependency graph DOT export carries the banned edge") {
  std::string dot = export_dot(dependency_graph(fixtures::credit_theory()));
  CHECK(dot.find("\"banned\" -> \"creditActivity\";") != std::string::npos);
}
