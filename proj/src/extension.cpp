#include "normex/extension.hpp"

#include <cassert>
#include <deque>
#include <map>

#include "normex/errors.hpp"

namespace normex {

namespace {

constexpr char kUnknown = 0;
constexpr char kPlus = 1;
constexpr char kMinus = 2;

struct Engine {
  const DefeasibleTheory& t;

  std::vector<Literal> lits;  // Lit(D) closed under complement, sorted
  std::map<Literal, int> index;
  std::vector<int> comp;

  std::vector<std::vector<int>> rules_all;  // R[l]
  std::vector<std::vector<int>> rules_sd;   // R_sd[l]
  std::vector<std::vector<int>> occurs;     // rules with l in the antecedent

  std::vector<std::vector<int>> rant;  // rule antecedent literal ids
  std::vector<int> rhead;
  std::set<std::pair<int, int>> sup;  // (stronger, weaker) rule indices

  std::vector<char> fact;
  std::vector<char> delta, partial;

  // strict layer counters
  std::vector<int> d_unsat;       // antecedents not yet +Delta, strict rules
  std::vector<char> d_blocked;    // some antecedent -Delta
  std::vector<int> ds_active;     // per literal: strict rules not yet blocked

  // defeasible layer counters
  std::vector<int> unsat;    // antecedents not yet +partial
  std::vector<char> blocked; // some antecedent -partial

  explicit Engine(const DefeasibleTheory& theory) : t(theory) {
    std::set<Literal> universe = t.occurring_literals();
    std::set<Literal> closed;
    for (const auto& l : universe) {
      closed.insert(l);
      closed.insert(complement(l));
    }
    lits.assign(closed.begin(), closed.end());
    for (int i = 0; i < static_cast<int>(lits.size()); ++i) index[lits[i]] = i;
    comp.resize(lits.size());
    for (int i = 0; i < static_cast<int>(lits.size()); ++i)
      comp[i] = index.at(complement(lits[i]));

    int n = static_cast<int>(lits.size());
    int m = static_cast<int>(t.rules.size());
    rules_all.resize(n);
    rules_sd.resize(n);
    occurs.resize(n);
    rant.resize(m);
    rhead.resize(m);
    for (int r = 0; r < m; ++r) {
      const Rule& rule = t.rules[r];
      rhead[r] = index.at(rule.consequent);
      rules_all[rhead[r]].push_back(r);
      if (rule.kind != RuleKind::defeater) rules_sd[rhead[r]].push_back(r);
      for (const auto& a : rule.antecedents) {
        int ai = index.at(a);
        rant[r].push_back(ai);
        occurs[ai].push_back(r);
      }
    }
    std::map<std::string, int> by_label;
    for (int r = 0; r < m; ++r) by_label[t.rules[r].label] = r;
    for (const auto& [a, b] : t.superiority) {
      auto ia = by_label.find(a);
      auto ib = by_label.find(b);
      if (ia != by_label.end() && ib != by_label.end())
        sup.insert({ia->second, ib->second});
    }

    fact.assign(n, 0);
    for (const auto& f : t.facts)
      fact[index.at(f)] = 1;
    delta.assign(n, kUnknown);
    partial.assign(n, kUnknown);
  }

  bool superior(int a, int b) const { return sup.count({a, b}) != 0; }
  bool strict(int r) const { return t.rules[r].kind == RuleKind::strict; }

  void run_definite() {
    int n = static_cast<int>(lits.size());
    int m = static_cast<int>(t.rules.size());
    d_unsat.assign(m, 0);
    d_blocked.assign(m, 0);
    ds_active.assign(n, 0);
    for (int r = 0; r < m; ++r) {
      if (!strict(r)) continue;
      d_unsat[r] = static_cast<int>(rant[r].size());
      ++ds_active[rhead[r]];
    }

    // +Delta
    std::deque<int> queue;
    auto set_plus_delta = [&](int l) {
      if (delta[l] != kUnknown) return;
      delta[l] = kPlus;
      queue.push_back(l);
    };
    for (int l = 0; l < n; ++l)
      if (fact[l]) set_plus_delta(l);
    for (int r = 0; r < m; ++r)
      if (strict(r) && d_unsat[r] == 0) set_plus_delta(rhead[r]);
    while (!queue.empty()) {
      int l = queue.front();
      queue.pop_front();
      for (int r : occurs[l]) {
        if (!strict(r)) continue;
        if (--d_unsat[r] == 0) set_plus_delta(rhead[r]);
      }
    }

    // -Delta: constructive dual, literals whose every strict rule is blocked
    std::deque<int> mqueue;
    auto set_minus_delta = [&](int l) {
      if (delta[l] != kUnknown) return;
      delta[l] = kMinus;
      mqueue.push_back(l);
    };
    for (int l = 0; l < n; ++l)
      if (!fact[l] && ds_active[l] == 0) set_minus_delta(l);
    while (!mqueue.empty()) {
      int l = mqueue.front();
      mqueue.pop_front();
      for (int r : occurs[l]) {
        if (!strict(r) || d_blocked[r]) continue;
        d_blocked[r] = 1;
        int h = rhead[r];
        if (--ds_active[h] == 0 && !fact[h]) set_minus_delta(h);
      }
    }
  }

  bool plus_condition(int l) const {
    if (delta[l] == kPlus) return true;
    if (delta[comp[l]] != kMinus) return false;
    bool applicable_support = false;
    for (int r : rules_sd[l])
      if (unsat[r] == 0) { applicable_support = true; break; }
    if (!applicable_support) return false;
    for (int s : rules_all[comp[l]]) {
      if (blocked[s]) continue;
      bool beaten = false;
      for (int u : rules_all[l])
        if (unsat[u] == 0 && superior(u, s)) { beaten = true; break; }
      if (!beaten) return false;
    }
    return true;
  }

  bool minus_condition(int l) const {
    if (delta[l] != kMinus) return false;
    if (delta[comp[l]] == kPlus) return true;
    bool all_discarded = true;
    for (int r : rules_sd[l])
      if (!blocked[r]) { all_discarded = false; break; }
    if (all_discarded) return true;
    for (int s : rules_all[comp[l]]) {
      if (unsat[s] != 0) continue;
      bool counters = true;
      for (int u : rules_all[l]) {
        if (!blocked[u] && superior(u, s)) { counters = false; break; }
      }
      if (counters) return true;
    }
    return false;
  }

  void run_partial() {
    int n = static_cast<int>(lits.size());
    int m = static_cast<int>(t.rules.size());
    unsat.assign(m, 0);
    blocked.assign(m, 0);
    for (int r = 0; r < m; ++r) unsat[r] = static_cast<int>(rant[r].size());

    std::deque<int> queue;
    std::vector<char> queued(n, 0);
    auto enqueue = [&](int l) {
      if (!queued[l] && partial[l] == kUnknown) {
        queued[l] = 1;
        queue.push_back(l);
      }
    };
    auto on_rule_event = [&](int r) {
      enqueue(rhead[r]);
      enqueue(comp[rhead[r]]);
    };
    auto set_partial = [&](int l, char tag) {
      assert(partial[l] == kUnknown);
      partial[l] = tag;
      if (tag == kPlus) {
        for (int r : occurs[l])
          if (--unsat[r] == 0) on_rule_event(r);
      } else {
        for (int r : occurs[l])
          if (!blocked[r]) {
            blocked[r] = 1;
            on_rule_event(r);
          }
      }
    };

    for (int l = 0; l < n; ++l) enqueue(l);
    while (!queue.empty()) {
      int l = queue.front();
      queue.pop_front();
      queued[l] = 0;
      if (partial[l] != kUnknown) continue;
      bool plus = plus_condition(l);
      bool minus = minus_condition(l);
      assert(!(plus && minus));
      if (plus)
        set_partial(l, kPlus);
      else if (minus)
        set_partial(l, kMinus);
    }
  }

  Extension collect() const {
    Extension e;
    std::set<Literal> occurring = t.occurring_literals();
    for (int l = 0; l < static_cast<int>(lits.size()); ++l) {
      if (!occurring.count(lits[l])) continue;
      if (delta[l] == kPlus) e.plus_delta.insert(lits[l]);
      if (delta[l] == kMinus) e.minus_delta.insert(lits[l]);
      if (partial[l] == kPlus) e.plus_partial.insert(lits[l]);
      if (partial[l] == kMinus) e.minus_partial.insert(lits[l]);
    }
    return e;
  }
};

}  // namespace

std::pair<std::set<Literal>, std::set<Literal>> compute_definite(
    const DefeasibleTheory& t) {
  Engine e(t);
  e.run_definite();
  Extension ext = e.collect();
  return {ext.plus_delta, ext.minus_delta};
}

Extension compute_extension(const DefeasibleTheory& t) {
  Engine e(t);
  e.run_definite();
  e.run_partial();
  return e.collect();
}

DExtensionSet d_extension(const ArgumentationTheory& at) {
  const DefeasibleTheory& t = at.theory();
  Extension e = compute_extension(t);
  DExtensionSet out;
  for (const auto& phi : t.occurring_literals()) {
    if (e.plus_partial.count(phi))
      out.literals.insert(phi);
    else
      out.literals.insert(complement(phi));
  }
  return out;
}

DExtensionSet d_extension(std::vector<Rule> rules,
                          std::vector<std::pair<std::string, std::string>> superiority,
                          const std::set<Literal>& L) {
  DefeasibleTheory t;
  t.facts.assign(L.begin(), L.end());
  t.rules = std::move(rules);
  t.superiority = std::move(superiority);
  auto res = ArgumentationTheory::validate(std::move(t));
  if (!res.ok()) {
    std::string msg = "invalid argumentation theory:";
    for (const auto& v : res.violations)
      msg += " " + to_string(v.kind) + "(" + v.detail + ")";
    throw InvalidTheory(msg);
  }
  return d_extension(*res.theory);
}

}  // namespace normex
