#pragma once

#include <compare>
#include <set>
#include <string>

namespace normex {

// A signed atom. Classical negation is the polarity flag, never a string prefix.
struct Literal {
  std::string atom;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;

  // Order by atom, positive polarity first. This order is load-bearing:
  // serialized output, superset enumeration and counterexample reporting
  // all derive their determinism from it.
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.atom <=> b.atom; c != 0) return c;
    if (a.positive == b.positive) return std::strong_ordering::equal;
    return a.positive ? std::strong_ordering::less : std::strong_ordering::greater;
  }
};

inline Literal pos(std::string atom) { return Literal{std::move(atom), true}; }
inline Literal neg(std::string atom) { return Literal{std::move(atom), false}; }

inline Literal complement(const Literal& l) { return Literal{l.atom, !l.positive}; }

inline std::string to_string(const Literal& l) {
  return l.positive ? l.atom : "-" + l.atom;
}

inline bool consistent(const std::set<Literal>& lits) {
  for (const auto& l : lits)
    if (!l.positive && lits.count(complement(l))) return false;
  return true;
}

}  // namespace normex
