#pragma once

#include <string>

#include "normex/parser.hpp"
#include "normex/theory.hpp"

namespace fixtures {

// Credit-license scenario used across the suites: two facts, five rules,
// four superiority pairs.
inline const char* kCreditSource = R"(# credit activities
facts: insolvent, creditLicense.
s1: => -creditActivity.
s2: creditLicense => creditActivity.
s3: actsOnBehalfPrincipal, principalCreditLicense => creditActivity.
s4: banned => -creditActivity.
s5: insolvent => banned.
s2 > s1.
s3 > s1.
s4 > s3.
s4 > s2.
)";

inline normex::DefeasibleTheory credit_theory() {
  auto pr = normex::parse_theory(kCreditSource);
  if (!pr.ok()) throw std::runtime_error("fixture failed to parse");
  return pr.theory;
}

inline normex::ArgumentationTheory credit_argumentation() {
  auto res = normex::ArgumentationTheory::validate(credit_theory());
  if (!res.ok()) throw std::runtime_error("fixture failed validation");
  return *res.theory;
}

}  // namespace fixtures
