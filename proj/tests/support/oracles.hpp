#pragma once

// Independent oracles written straight from the definitions. These
// deliberately share no code with the library's worklist engine, model
// builder or stability path.

#include <set>
#include <vector>

#include "normex/explanation.hpp"
#include "normex/extension.hpp"
#include "normex/theory.hpp"

namespace oracles {

struct NaiveExtension {
  std::set<normex::Literal> pd, md, pp, mp;
};

// Re-evaluates the proof conditions over all literals until nothing changes.
inline NaiveExtension naive_extension(const normex::DefeasibleTheory& t) {
  using normex::Literal;
  using normex::Rule;
  using normex::RuleKind;

  std::set<Literal> uni;
  for (const auto& l : t.occurring_literals()) {
    uni.insert(l);
    uni.insert(normex::complement(l));
  }
  std::set<Literal> facts(t.facts.begin(), t.facts.end());

  auto rules_for = [&](const Literal& l, bool sd_only) {
    std::vector<const Rule*> v;
    for (const auto& r : t.rules)
      if (r.consequent == l && (!sd_only || r.kind != RuleKind::defeater))
        v.push_back(&r);
    return v;
  };
  auto strict_for = [&](const Literal& l) {
    std::vector<const Rule*> v;
    for (const auto& r : t.rules)
      if (r.consequent == l && r.kind == RuleKind::strict) v.push_back(&r);
    return v;
  };

  std::set<Literal> pd, md, pp, mp;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& l : uni) {
      if (!pd.count(l)) {
        bool plus = facts.count(l) != 0;
        if (!plus)
          for (const Rule* r : strict_for(l)) {
            bool all = true;
            for (const auto& a : r->antecedents)
              if (!pd.count(a)) { all = false; break; }
            if (all) { plus = true; break; }
          }
        if (plus) { pd.insert(l); changed = true; }
      }
      if (!md.count(l)) {
        bool minus = !facts.count(l);
        if (minus)
          for (const Rule* r : strict_for(l)) {
            bool blocked = false;
            for (const auto& a : r->antecedents)
              if (md.count(a)) { blocked = true; break; }
            if (!blocked) { minus = false; break; }
          }
        if (minus) { md.insert(l); changed = true; }
      }
    }
  }

  auto applicable = [&](const Rule* r) {
    for (const auto& a : r->antecedents)
      if (!pp.count(a)) return false;
    return true;
  };
  auto discarded = [&](const Rule* r) {
    for (const auto& a : r->antecedents)
      if (mp.count(a)) return true;
    return false;
  };

  changed = true;
  while (changed) {
    changed = false;
    for (const auto& l : uni) {
      if (pp.count(l) || mp.count(l)) continue;
      Literal nl = normex::complement(l);

      bool plus = pd.count(l) != 0;
      if (!plus && md.count(nl)) {
        bool support = false;
        for (const Rule* r : rules_for(l, true))
          if (applicable(r)) { support = true; break; }
        if (support) {
          bool all_handled = true;
          for (const Rule* s : rules_for(nl, false)) {
            if (discarded(s)) continue;
            bool beaten = false;
            for (const Rule* u : rules_for(l, false))
              if (applicable(u) && t.is_superior(u->label, s->label)) {
                beaten = true;
                break;
              }
            if (!beaten) { all_handled = false; break; }
          }
          plus = all_handled;
        }
      }
      if (plus) {
        pp.insert(l);
        changed = true;
        continue;
      }

      bool minus = false;
      if (md.count(l)) {
        if (pd.count(nl)) {
          minus = true;
        } else {
          bool all_disc = true;
          for (const Rule* r : rules_for(l, true))
            if (!discarded(r)) { all_disc = false; break; }
          if (all_disc) {
            minus = true;
          } else {
            for (const Rule* s : rules_for(nl, false)) {
              if (!applicable(s)) continue;
              bool counter = false;
              for (const Rule* u : rules_for(l, false))
                if (!discarded(u) && t.is_superior(u->label, s->label)) {
                  counter = true;
                  break;
                }
              if (!counter) { minus = true; break; }
            }
          }
        }
      }
      if (minus) {
        mp.insert(l);
        changed = true;
      }
    }
  }

  NaiveExtension out;
  for (const auto& l : t.occurring_literals()) {
    if (pd.count(l)) out.pd.insert(l);
    if (md.count(l)) out.md.insert(l);
    if (pp.count(l)) out.pp.insert(l);
    if (mp.count(l)) out.mp.insert(l);
  }
  return out;
}

// Direct reading of the neighborhood D-frame definition: S relations per
// rule from all (world, world) pairs, unioned into conclusion classes.
struct BruteModel {
  std::vector<std::set<normex::Literal>> worlds;  // sorted
  std::vector<std::set<std::set<int>>> families;  // per world
};

inline BruteModel brute_model(const normex::ArgumentationTheory& at,
                              const std::set<normex::Literal>& extension) {
  using normex::Literal;
  using normex::Rule;
  const normex::DefeasibleTheory& t = at.theory();

  BruteModel m;
  std::vector<Literal> ext(extension.begin(), extension.end());
  int n = static_cast<int>(ext.size());
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::set<Literal> w;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) w.insert(ext[i]);
    m.worlds.push_back(std::move(w));
  }
  std::sort(m.worlds.begin(), m.worlds.end());

  auto subset = [](const std::vector<Literal>& lits, const std::set<Literal>& w) {
    for (const auto& l : lits)
      if (!w.count(l)) return false;
    return true;
  };

  for (const auto& x : m.worlds) {
    std::set<std::set<int>> family;
    for (const Rule& rj : t.rules) {
      // S_j(x) unioned over rules sharing rj's conclusion
      std::set<int> s_class;
      for (const Rule& rk : t.rules) {
        if (rk.consequent != rj.consequent) continue;
        bool x_ok = subset(rk.antecedents, x);
        if (x_ok) {
          for (const Rule& s : t.rules) {
            if (s.consequent != normex::complement(rk.consequent)) continue;
            bool inapplicable = !subset(s.antecedents, x);
            bool beaten = false;
            for (const Rule& u : t.rules)
              if (u.consequent == rk.consequent &&
                  t.is_superior(u.label, s.label) && subset(u.antecedents, x)) {
                beaten = true;
                break;
              }
            if (!inapplicable && !beaten) { x_ok = false; break; }
          }
        }
        if (!x_ok) continue;
        for (int yi = 0; yi < static_cast<int>(m.worlds.size()); ++yi)
          if (m.worlds[yi].count(rk.consequent)) s_class.insert(yi);
      }
      family.insert(std::move(s_class));
    }
    m.families.push_back(std::move(family));
  }
  return m;
}

// Full recomputation per superset: fresh validation, fresh framework,
// fresh minimal-set search.
inline normex::StabilityReport naive_is_stable(const normex::ArgumentationTheory& t,
                                               const normex::Explanation& e) {
  using normex::Literal;
  normex::FactUniverse u = normex::literal_universe(t.theory().rules);
  std::set<Literal> base(t.facts().begin(), t.facts().end());

  normex::StabilityReport rep;
  for (const auto& fset : normex::enumerate_fact_supersets(base, u)) {
    ++rep.checked_supersets;
    normex::DefeasibleTheory dt = t.theory();
    dt.facts.assign(fset.begin(), fset.end());
    auto res = normex::ArgumentationTheory::validate(std::move(dt));
    if (!res.ok()) throw std::runtime_error("oracle: superset failed validation");
    bool present = false;
    for (const auto& cand :
         normex::find_explanations(*res.theory, e.target, e.mode))
      if (cand.argument_ids == e.argument_ids) { present = true; break; }
    if (!present) {
      rep.stable = false;
      rep.counterexample = fset;
      return rep;
    }
  }
  rep.stable = true;
  return rep;
}

}  // namespace oracles
