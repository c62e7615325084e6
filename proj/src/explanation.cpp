#include "normex/explanation.hpp"

#include <algorithm>
#include <deque>

#include "normex/errors.hpp"

namespace normex {

std::string to_string(ExplanationMode m) {
  return m == ExplanationMode::literal ? "literal" : "closed";
}

std::optional<ExplanationMode> explanation_mode_from_string(const std::string& s) {
  if (s == "literal") return ExplanationMode::literal;
  if (s == "closed" || s == "support-closed") return ExplanationMode::support_closed;
  return std::nullopt;
}

FactUniverse literal_universe(const std::vector<Rule>& rules) {
  FactUniverse u;
  auto concluded = [&](const Literal& l) {
    for (const auto& r : rules)
      if (r.consequent == l || r.consequent == complement(l)) return true;
    return false;
  };
  for (const auto& r : rules)
    for (const auto& a : r.antecedents)
      if (!concluded(a)) {
        u.literals.insert(a);
        u.literals.insert(complement(a));
      }
  return u;
}

namespace {

// Option for meeting one undercut obligation: the proper subarguments of an
// argument C that attacks a proper subargument of the obligated attacker.
std::vector<std::set<int>> undercut_options(const FrameworkView& v, int attacker,
                                            const std::set<int>& justified) {
  std::vector<std::set<int>> options;
  const auto& subs = v.fw->proper_subarguments(attacker);
  for (int c = 0; c < static_cast<int>(v.fw->arguments().size()); ++c) {
    if (!v.present[c]) continue;
    bool hits = false;
    for (int s : subs)
      if (v.fw->attacks_pair(c, s)) { hits = true; break; }
    if (!hits) continue;
    std::set<int> needed;
    bool ok = true;
    for (int s : v.fw->proper_subarguments(c)) {
      if (!justified.count(s)) { ok = false; break; }
      needed.insert(s);
    }
    if (ok) options.push_back(std::move(needed));
  }
  std::sort(options.begin(), options.end());
  options.erase(std::unique(options.begin(), options.end()), options.end());
  return options;
}

// First obligation not yet met by `members`: an attacker of a scoped member
// that `members` does not undercut.
std::optional<int> first_unmet(const FrameworkView& v, const std::set<int>& members,
                               int top, ExplanationMode mode) {
  std::vector<int> scope;
  if (mode == ExplanationMode::support_closed)
    scope.assign(members.begin(), members.end());
  else
    scope.push_back(top);
  for (int m : scope)
    for (const auto& [x, y] : v.fw->attacks()) {
      if (y != m || !v.present[x]) continue;
      if (!undercut(v, members, x)) return x;
    }
  return std::nullopt;
}

}  // namespace

std::vector<std::set<int>> find_explanation_sets(const FrameworkView& v,
                                                 const Literal& target,
                                                 ExplanationMode mode) {
  JustificationResult jr = compute_justification(v);

  std::vector<int> tops;
  for (int a : jr.justified)
    if (v.fw->arguments()[a].conclusion == target) tops.push_back(a);
  if (tops.empty()) return {};

  std::set<std::set<int>> terminal;
  for (int top : tops) {
    std::set<int> seed{top};
    if (mode == ExplanationMode::support_closed) {
      const auto& subs = v.fw->proper_subarguments(top);
      seed.insert(subs.begin(), subs.end());
    }
    std::deque<std::set<int>> work{seed};
    std::set<std::set<int>> seen{seed};
    while (!work.empty()) {
      std::set<int> state = std::move(work.front());
      work.pop_front();
      auto unmet = first_unmet(v, state, top, mode);
      if (!unmet) {
        terminal.insert(state);
        continue;
      }
      for (const auto& option : undercut_options(v, *unmet, jr.justified)) {
        std::set<int> next = state;
        next.insert(option.begin(), option.end());
        if (next == state) continue;  // option present yet obligation unmet: dead end
        if (seen.insert(next).second) work.push_back(std::move(next));
      }
    }
  }

  std::vector<std::set<int>> minimal;
  for (const auto& s : terminal) {
    bool is_min = true;
    for (const auto& o : terminal)
      if (o != s && std::includes(s.begin(), s.end(), o.begin(), o.end())) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(s);
  }
  std::sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return minimal;
}

std::vector<Explanation> find_explanations(const ArgumentationTheory& t,
                                           const Literal& target,
                                           ExplanationMode mode, AttackMode attack) {
  Framework fw = Framework::build(t, attack);
  FrameworkView v = full_view(fw);
  std::vector<Explanation> out;
  for (const auto& s : find_explanation_sets(v, target, mode)) {
    Explanation e;
    e.target = target;
    e.mode = mode;
    for (int a : s) e.argument_ids.insert(fw.arguments()[a].canonical);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::set<Literal>> enumerate_fact_supersets(const std::set<Literal>& facts,
                                                        const FactUniverse& universe) {
  std::set<std::string> atoms;
  for (const auto& l : universe.literals) atoms.insert(l.atom);

  std::vector<std::set<Literal>> out{facts};
  for (const auto& atom : atoms) {
    Literal p = pos(atom), n = neg(atom);
    if (facts.count(p) || facts.count(n)) continue;  // pinned by F
    std::vector<std::set<Literal>> grown;
    for (const auto& base : out) {
      grown.push_back(base);
      if (universe.literals.count(p)) {
        auto with_p = base;
        with_p.insert(p);
        grown.push_back(std::move(with_p));
      }
      if (universe.literals.count(n)) {
        auto with_n = base;
        with_n.insert(n);
        grown.push_back(std::move(with_n));
      }
    }
    out = std::move(grown);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

StabilityReport is_stable(const ArgumentationTheory& t, const Explanation& e) {
  std::set<std::string> ids;
  {
    auto base = find_explanations(t, e.target, e.mode);
    bool found = false;
    for (const auto& cand : base)
      if (cand.argument_ids == e.argument_ids) { found = true; break; }
    if (!found)
      throw NotAnExplanation("argument set is not an explanation for " +
                             to_string(e.target) + " in AF(t)");
    ids = e.argument_ids;
  }

  FactUniverse universe = literal_universe(t.theory().rules);
  std::set<Literal> base_facts(t.facts().begin(), t.facts().end());

  // Shared argument universe over F ∪ Lit(R); per superset we keep the
  // arguments whose leaves survive.
  DefeasibleTheory master = t.theory();
  for (const auto& l : universe.literals)
    if (!master.has_fact(l)) master.facts.push_back(l);
  Framework fw = Framework::build_raw(master, AttackMode::defeat);

  StabilityReport report;
  for (const auto& fset : enumerate_fact_supersets(base_facts, universe)) {
    ++report.checked_supersets;
    FrameworkView v = view_with_facts(fw, fset);
    bool present = false;
    for (const auto& sets = find_explanation_sets(v, e.target, e.mode);
         const auto& s : sets) {
      std::set<std::string> cand;
      for (int a : s) cand.insert(fw.arguments()[a].canonical);
      if (cand == ids) { present = true; break; }
    }
    if (!present) {
      report.stable = false;
      report.counterexample = fset;
      return report;
    }
  }
  report.stable = true;
  return report;
}

}  // namespace normex
