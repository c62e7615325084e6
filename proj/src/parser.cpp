#include "normex/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace normex {

namespace {

enum class Tok {
  ident,
  colon,
  comma,
  period,
  arrow_strict,      // ->
  arrow_defeasible,  // =>
  arrow_defeater,    // ~>
  greater,
  minus,
  bad,
  eof,
};

std::string tok_name(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::colon: return "':'";
    case Tok::comma: return "','";
    case Tok::period: return "'.'";
    case Tok::arrow_strict: return "'->'";
    case Tok::arrow_defeasible: return "'=>'";
    case Tok::arrow_defeater: return "'~>'";
    case Tok::greater: return "'>'";
    case Tok::minus: return "'-'";
    case Tok::bad: return "invalid character";
    case Tok::eof: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i + j < text.size() && text[i + j] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += k;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {  // comment to end of line
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    SourceSpan span{line, col, 1};
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                 text[j] == '_'))
        ++j;
      span.length = static_cast<int>(j - i);
      out.push_back({Tok::ident, text.substr(i, j - i), span});
      advance(j - i);
      continue;
    }
    auto two = text.substr(i, 2);
    if (two == "->" || two == "=>" || two == "~>") {
      span.length = 2;
      Tok k = two == "->"   ? Tok::arrow_strict
              : two == "=>" ? Tok::arrow_defeasible
                            : Tok::arrow_defeater;
      out.push_back({k, two, span});
      advance(2);
      continue;
    }
    Tok k = Tok::bad;
    switch (c) {
      case ':': k = Tok::colon; break;
      case ',': k = Tok::comma; break;
      case '.': k = Tok::period; break;
      case '>': k = Tok::greater; break;
      case '-': k = Tok::minus; break;
      default: break;
    }
    out.push_back({k, std::string(1, c), span});
    advance(1);
  }
  SourceSpan end{line, col, 1};
  out.push_back({Tok::eof, "", end});
  return out;
}

struct Parser {
  std::vector<Token> toks;
  std::size_t pos = 0;
  std::vector<ParseError> errors;

  // rules carry an optional explicit label; auto labels assigned afterwards
  struct RawRule {
    std::string label;  // empty when unlabeled
    RuleKind kind;
    std::vector<Literal> ants;
    Literal head;
    SourceSpan label_span;
  };
  std::vector<Literal> facts;
  std::vector<RawRule> rules;
  std::vector<std::pair<std::string, std::string>> sup;
  std::vector<SourceSpan> sup_spans;

  const Token& peek(int k = 0) const {
    return toks[std::min(pos + k, toks.size() - 1)];
  }
  Token take() { return toks[std::min(pos++, toks.size() - 1)]; }

  void error_at(const Token& t, std::vector<std::string> expected) {
    std::string lexeme = t.kind == Tok::eof ? "end of input" : "'" + t.text + "'";
    errors.push_back({t.span, "unexpected " + lexeme, std::move(expected)});
  }

  // skip to just past the next '.', or stop at eof
  void recover() {
    while (peek().kind != Tok::eof) {
      if (take().kind == Tok::period) return;
    }
  }

  bool expect(Tok k) {
    if (peek().kind == k) {
      take();
      return true;
    }
    error_at(peek(), {tok_name(k)});
    recover();
    return false;
  }

  std::optional<Literal> parse_literal() {
    bool positive = true;
    if (peek().kind == Tok::minus) {
      take();
      positive = false;
    }
    if (peek().kind != Tok::ident) {
      error_at(peek(), {"identifier"});
      recover();
      return std::nullopt;
    }
    return Literal{take().text, positive};
  }

  // comma-separated literals; stops before the first non-comma separator
  std::optional<std::vector<Literal>> parse_literal_list() {
    std::vector<Literal> lits;
    while (true) {
      auto l = parse_literal();
      if (!l) return std::nullopt;
      lits.push_back(*l);
      if (peek().kind == Tok::comma) {
        take();
        continue;
      }
      return lits;
    }
  }

  static bool is_arrow(Tok k) {
    return k == Tok::arrow_strict || k == Tok::arrow_defeasible ||
           k == Tok::arrow_defeater;
  }

  static RuleKind arrow_kind(Tok k) {
    if (k == Tok::arrow_strict) return RuleKind::strict;
    if (k == Tok::arrow_defeater) return RuleKind::defeater;
    return RuleKind::defeasible;
  }

  void parse_facts() {
    take();  // "facts"
    expect_inline(Tok::colon);
    if (peek().kind == Tok::period) {  // empty facts list tolerated
      take();
      return;
    }
    auto lits = parse_literal_list();
    if (!lits) return;
    for (const auto& l : *lits)
      if (std::find(facts.begin(), facts.end(), l) == facts.end()) facts.push_back(l);
    expect(Tok::period);
  }

  bool expect_inline(Tok k) {
    if (peek().kind == k) {
      take();
      return true;
    }
    error_at(peek(), {tok_name(k)});
    recover();
    return false;
  }

  void parse_rule(std::string label, SourceSpan label_span) {
    // body (possibly empty) ARROW head '.'
    std::vector<Literal> ants;
    if (!is_arrow(peek().kind)) {
      auto lits = parse_literal_list();
      if (!lits) return;
      ants = *lits;
    }
    if (!is_arrow(peek().kind)) {
      error_at(peek(), {tok_name(Tok::arrow_strict), tok_name(Tok::arrow_defeasible),
                        tok_name(Tok::arrow_defeater)});
      recover();
      return;
    }
    RuleKind kind = arrow_kind(take().kind);
    auto head = parse_literal();
    if (!head) return;
    if (!expect(Tok::period)) return;
    rules.push_back({std::move(label), kind, std::move(ants), *head, label_span});
  }

  void parse_superiority(std::string a, SourceSpan span_a) {
    take();  // '>'
    if (peek().kind != Tok::ident) {
      error_at(peek(), {"identifier"});
      recover();
      return;
    }
    Token b = take();
    if (!expect(Tok::period)) return;
    sup.emplace_back(std::move(a), b.text);
    sup_spans.push_back(span_a);
  }

  void parse_statement() {
    const Token& t = peek();
    if (t.kind == Tok::ident) {
      if (t.text == "facts" && peek(1).kind == Tok::colon) {
        parse_facts();
        return;
      }
      if (peek(1).kind == Tok::colon) {
        Token label = take();
        take();  // ':'
        parse_rule(label.text, label.span);
        return;
      }
      if (peek(1).kind == Tok::greater) {
        Token label = take();
        parse_superiority(label.text, label.span);
        return;
      }
      parse_rule("", t.span);  // unlabeled rule
      return;
    }
    if (t.kind == Tok::minus || is_arrow(t.kind)) {
      parse_rule("", t.span);
      return;
    }
    error_at(t, {"identifier", "'facts:'"});
    recover();
  }

  ParseResult finish() {
    ParseResult res;
    res.theory.facts = std::move(facts);

    std::set<std::string> labels;
    for (const auto& r : rules)
      if (!r.label.empty() && !labels.insert(r.label).second)
        errors.push_back({r.label_span, "duplicate rule label '" + r.label + "'", {}});

    int counter = 0;
    for (auto& r : rules) {
      std::string label = r.label;
      if (label.empty()) {
        do {
          label = "r" + std::to_string(++counter);
        } while (labels.count(label));
        labels.insert(label);
      }
      res.theory.rules.push_back(
          make_rule(label, r.kind, std::move(r.ants), std::move(r.head)));
    }

    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t i = 0; i < sup.size(); ++i) {
      const auto& [a, b] = sup[i];
      if (!labels.count(a))
        errors.push_back({sup_spans[i], "superiority over unknown rule '" + a + "'", {}});
      else if (!labels.count(b))
        errors.push_back({sup_spans[i], "superiority over unknown rule '" + b + "'", {}});
      else if (seen.insert({a, b}).second)
        res.theory.superiority.emplace_back(a, b);
    }

    res.errors = std::move(errors);
    if (!res.errors.empty()) res.theory = DefeasibleTheory{};
    return res;
  }
};

std::string arrow_for(RuleKind k) {
  switch (k) {
    case RuleKind::strict: return "->";
    case RuleKind::defeasible: return "=>";
    case RuleKind::defeater: return "~>";
  }
  return "=>";
}

}  // namespace

ParseResult parse_theory(const std::string& text) {
  Parser p;
  p.toks = tokenize(text);
  while (p.peek().kind != Tok::eof) p.parse_statement();
  return p.finish();
}

std::optional<Literal> parse_literal_text(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::string body = text;
  bool positive = true;
  if (body[0] == '-') {
    positive = false;
    body = body.substr(1);
  }
  if (body.empty() || !std::isalpha(static_cast<unsigned char>(body[0])))
    return std::nullopt;
  for (char c : body)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      return std::nullopt;
  return Literal{body, positive};
}

std::string serialize_theory(const DefeasibleTheory& t) {
  std::ostringstream out;
  if (!t.facts.empty()) {
    std::set<Literal> facts(t.facts.begin(), t.facts.end());
    out << "facts: ";
    bool first = true;
    for (const auto& f : facts) {
      if (!first) out << ", ";
      out << to_string(f);
      first = false;
    }
    out << ".\n";
  }
  std::vector<const Rule*> rules;
  for (const auto& r : t.rules) rules.push_back(&r);
  std::sort(rules.begin(), rules.end(),
            [](const Rule* a, const Rule* b) { return a->label < b->label; });
  for (const Rule* r : rules) {
    out << r->label << ": ";
    for (std::size_t i = 0; i < r->antecedents.size(); ++i) {
      if (i) out << ", ";
      out << to_string(r->antecedents[i]);
    }
    if (!r->antecedents.empty()) out << " ";
    out << arrow_for(r->kind) << " " << to_string(r->consequent) << ".\n";
  }
  std::set<std::pair<std::string, std::string>> sup(t.superiority.begin(),
                                                    t.superiority.end());
  for (const auto& [a, b] : sup) out << a << " > " << b << ".\n";
  return out.str();
}

}  // namespace normex
