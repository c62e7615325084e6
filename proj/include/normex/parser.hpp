#pragma once

#include <string>
#include <vector>

#include "normex/theory.hpp"

namespace normex {

struct SourceSpan {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  int length = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

struct ParseError {
  SourceSpan span;
  std::string message;                // names the offending lexeme
  std::vector<std::string> expected;  // token kinds that would have been accepted
};

struct ParseResult {
  DefeasibleTheory theory;
  std::vector<ParseError> errors;

  bool ok() const { return errors.empty(); }
};

// Total: never throws, reports every error with a span and recovers at the
// next statement terminator. Unlabeled rules get auto labels r1, r2, ... in
// file order.
ParseResult parse_theory(const std::string& text);

// "-"? ATOM, nothing else.
std::optional<Literal> parse_literal_text(const std::string& text);

// Canonical form: facts first, rules in label order, superiority last.
// parse(serialize(t)) is structurally equal to t.
std::string serialize_theory(const DefeasibleTheory& t);

}  // namespace normex
