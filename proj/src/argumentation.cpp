#include "normex/argumentation.hpp"

#include <algorithm>

#include "normex/errors.hpp"
#include "normex/graph.hpp"

namespace normex {

std::string to_string(AttackMode m) {
  switch (m) {
    case AttackMode::defeat: return "defeat";
    case AttackMode::superior_only: return "superior-only";
    case AttackMode::ignore_superiority: return "ignore";
  }
  return "?";
}

std::optional<AttackMode> attack_mode_from_string(const std::string& s) {
  if (s == "defeat") return AttackMode::defeat;
  if (s == "superior-only") return AttackMode::superior_only;
  if (s == "ignore" || s == "ignore-superiority") return AttackMode::ignore_superiority;
  return std::nullopt;
}

namespace {

constexpr std::size_t kArgumentCap = 1u << 20;

std::string plain_canonical(const std::string& label,
                            const std::vector<std::string>& children) {
  std::string out = label + "(";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i) out += ",";
    out += children[i];
  }
  out += ")";
  return out;
}

}  // namespace

bool attack_holds(const Argument& a, const Argument& b, const DefeasibleTheory& t,
                  AttackMode mode) {
  if (!a.rule || !b.rule) return false;  // only plain arguments conflict
  if (a.conclusion != complement(b.conclusion)) return false;
  const std::string& top_a = t.rules[*a.rule].label;
  const std::string& top_b = t.rules[*b.rule].label;
  switch (mode) {
    case AttackMode::defeat: return !t.is_superior(top_b, top_a);
    case AttackMode::superior_only: return t.is_superior(top_a, top_b);
    case AttackMode::ignore_superiority: return true;
  }
  return false;
}

Framework Framework::build(const ArgumentationTheory& at, AttackMode mode) {
  return build_raw(at.theory(), mode);
}

Framework Framework::build_raw(DefeasibleTheory theory, AttackMode mode) {
  if (!dependency_graph(theory).is_acyclic())
    throw CyclicDependencies("dependency graph is cyclic; argument universe may be infinite");

  Framework fw;
  fw.theory_ = std::move(theory);
  const DefeasibleTheory& t = fw.theory_;
  fw.mode_ = mode;

  std::vector<Argument> args;
  std::map<std::string, int> canon;
  std::map<Literal, std::vector<int>> by_conclusion;

  auto add = [&](Argument a) -> bool {
    if (canon.count(a.canonical)) return false;
    if (args.size() >= kArgumentCap)
      throw Error("argument universe exceeds cap");
    int idx = static_cast<int>(args.size());
    canon[a.canonical] = idx;
    by_conclusion[a.conclusion].push_back(idx);
    args.push_back(std::move(a));
    return true;
  };

  for (int fi = 0; fi < static_cast<int>(t.facts.size()); ++fi) {
    Argument a;
    a.conclusion = t.facts[fi];
    a.canonical = to_string(t.facts[fi]);
    a.height = 1;
    a.leaves = {fi};
    add(std::move(a));
  }

  // Close under rule application. Rules with empty antecedents yield no
  // arguments: Def. 4's plain form requires at least one subargument.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int ri = 0; ri < static_cast<int>(t.rules.size()); ++ri) {
      const Rule& r = t.rules[ri];
      if (r.antecedents.empty()) continue;
      std::vector<const std::vector<int>*> pools;
      bool feasible = true;
      for (const auto& ant : r.antecedents) {
        auto it = by_conclusion.find(ant);
        if (it == by_conclusion.end() || it->second.empty()) {
          feasible = false;
          break;
        }
        pools.push_back(&it->second);
      }
      if (!feasible) continue;
      std::vector<std::size_t> odo(pools.size(), 0);
      while (true) {
        Argument a;
        a.rule = ri;
        a.conclusion = r.consequent;
        a.height = 1;
        std::vector<std::string> child_ids;
        std::set<int> leaves;
        for (std::size_t k = 0; k < pools.size(); ++k) {
          int child = (*pools[k])[odo[k]];
          a.children.push_back(child);
          child_ids.push_back(args[child].canonical);
          a.height = std::max(a.height, args[child].height + 1);
          leaves.insert(args[child].leaves.begin(), args[child].leaves.end());
        }
        a.leaves.assign(leaves.begin(), leaves.end());
        a.canonical = plain_canonical(r.label, child_ids);
        if (add(std::move(a))) changed = true;
        // odometer over the pools as they were at loop entry
        std::size_t k = 0;
        for (; k < pools.size(); ++k) {
          if (++odo[k] < pools[k]->size()) break;
          odo[k] = 0;
        }
        if (k == pools.size()) break;
      }
    }
  }

  // Display order: factual arguments in fact order, then plain arguments by
  // (leaf fact indices, height, top rule label, canonical). This reproduces
  // the A1..A5 numbering used in the documentation examples.
  std::vector<int> order;
  for (int i = 0; i < static_cast<int>(args.size()); ++i)
    if (!args[i].rule) order.push_back(i);
  std::vector<int> plain;
  for (int i = 0; i < static_cast<int>(args.size()); ++i)
    if (args[i].rule) plain.push_back(i);
  std::sort(plain.begin(), plain.end(), [&](int x, int y) {
    const Argument& ax = args[x];
    const Argument& ay = args[y];
    if (ax.leaves != ay.leaves) return ax.leaves < ay.leaves;
    if (ax.height != ay.height) return ax.height < ay.height;
    const std::string& lx = t.rules[*ax.rule].label;
    const std::string& ly = t.rules[*ay.rule].label;
    if (lx != ly) return lx < ly;
    return ax.canonical < ay.canonical;
  });
  order.insert(order.end(), plain.begin(), plain.end());

  std::vector<int> remap(args.size());
  for (int newi = 0; newi < static_cast<int>(order.size()); ++newi)
    remap[order[newi]] = newi;
  fw.args_.resize(args.size());
  for (int old = 0; old < static_cast<int>(args.size()); ++old) {
    Argument a = std::move(args[old]);
    for (auto& c : a.children) c = remap[c];
    fw.args_[remap[old]] = std::move(a);
  }
  for (const auto& [id, idx] : canon) fw.canon_[id] = remap[idx];

  fw.proper_subs_.resize(fw.args_.size());
  for (int i = 0; i < static_cast<int>(fw.args_.size()); ++i) {
    std::set<int> subs;
    std::vector<int> stack(fw.args_[i].children.begin(), fw.args_[i].children.end());
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      if (subs.insert(c).second)
        stack.insert(stack.end(), fw.args_[c].children.begin(),
                     fw.args_[c].children.end());
    }
    fw.proper_subs_[i].assign(subs.begin(), subs.end());
  }

  for (int a = 0; a < static_cast<int>(fw.args_.size()); ++a)
    for (int b = 0; b < static_cast<int>(fw.args_.size()); ++b)
      if (a != b && attack_holds(fw.args_[a], fw.args_[b], t, mode))
        fw.attacks_.insert({a, b});

  return fw;
}

std::vector<int> Framework::attackers_of(int a) const {
  std::vector<int> out;
  for (const auto& [x, y] : attacks_)
    if (y == a) out.push_back(x);
  return out;
}

std::optional<int> Framework::by_canonical(const std::string& id) const {
  auto it = canon_.find(id);
  if (it == canon_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Framework::by_display_name(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(args_.size()); ++i)
    if (display_name(i) == name) return i;
  return std::nullopt;
}

const std::vector<int>& Framework::proper_subarguments(int a) const {
  return proper_subs_[a];
}

FrameworkView full_view(const Framework& fw) {
  FrameworkView v;
  v.fw = &fw;
  v.present.assign(fw.arguments().size(), 1);
  return v;
}

FrameworkView view_with_facts(const Framework& fw, const std::set<Literal>& facts) {
  FrameworkView v;
  v.fw = &fw;
  const auto& args = fw.arguments();
  v.present.assign(args.size(), 0);
  const auto& all_facts = fw.theory().facts;
  for (std::size_t a = 0; a < args.size(); ++a) {
    bool ok = true;
    for (int leaf : args[a].leaves)
      if (!facts.count(all_facts[leaf])) { ok = false; break; }
    v.present[a] = ok;
  }
  return v;
}

bool supports(const FrameworkView& v, const std::set<int>& args, int a) {
  for (int s : v.fw->proper_subarguments(a))
    if (!args.count(s)) return false;
  return true;
}

bool undercut(const FrameworkView& v, const std::set<int>& args, int a) {
  const auto& subs = v.fw->proper_subarguments(a);
  if (subs.empty()) return false;
  for (int b = 0; b < static_cast<int>(v.fw->arguments().size()); ++b) {
    if (!v.present[b]) continue;
    bool attacks_sub = false;
    for (int s : subs)
      if (v.fw->attacks_pair(b, s)) { attacks_sub = true; break; }
    if (attacks_sub && supports(v, args, b)) return true;
  }
  return false;
}

bool acceptable(const FrameworkView& v, int a, const std::set<int>& args) {
  for (const auto& [x, y] : v.fw->attacks())
    if (y == a && v.present[x] && !undercut(v, args, x)) return false;
  return true;
}

JustificationResult compute_justification(const FrameworkView& v) {
  const int n = static_cast<int>(v.fw->arguments().size());
  JustificationResult res;

  std::set<int> j;
  while (true) {
    std::set<int> next = j;
    for (int a = 0; a < n; ++a) {
      if (!v.present[a] || j.count(a)) continue;
      if (!supports(v, j, a)) continue;  // subargument closure
      if (acceptable(v, a, j)) next.insert(a);
    }
    if (next == j) break;
    j = std::move(next);
  }
  res.justified = j;

  std::set<int> r;
  while (true) {
    std::set<int> next = r;
    for (int a = 0; a < n; ++a) {
      if (!v.present[a] || r.count(a)) continue;
      bool rejected = false;
      for (int s : v.fw->proper_subarguments(a))
        if (r.count(s)) { rejected = true; break; }
      if (!rejected) {
        for (int ja : j)
          if (v.fw->attacks_pair(ja, a)) { rejected = true; break; }
      }
      if (rejected) next.insert(a);
    }
    if (next == r) break;
    r = std::move(next);
  }
  res.rejected = r;

  for (int a : res.justified)
    res.justified_conclusions.insert(v.fw->arguments()[a].conclusion);
  return res;
}

bool supports(const Framework& fw, const std::set<int>& args, int a) {
  return supports(full_view(fw), args, a);
}

bool undercut(const Framework& fw, const std::set<int>& args, int a) {
  return undercut(full_view(fw), args, a);
}

bool acceptable(const Framework& fw, int a, const std::set<int>& args) {
  return acceptable(full_view(fw), a, args);
}

JustificationResult compute_justification(const Framework& fw) {
  return compute_justification(full_view(fw));
}

bool theorem2_check(const ArgumentationTheory& at) {
  Framework fw = Framework::build(at, AttackMode::defeat);
  JustificationResult jr = compute_justification(fw);
  Extension ext = compute_extension(at.theory());

  std::set<Literal> constructible;
  for (const auto& a : fw.arguments()) constructible.insert(a.conclusion);

  std::set<Literal> plus_restricted;
  for (const auto& l : constructible)
    if (ext.plus_partial.count(l)) plus_restricted.insert(l);
  if (jr.justified_conclusions != plus_restricted) return false;

  std::set<Literal> fully_rejected;
  for (const auto& l : constructible) {
    bool all = true;
    for (int a = 0; a < static_cast<int>(fw.arguments().size()); ++a)
      if (fw.arguments()[a].conclusion == l && !jr.rejected.count(a)) {
        all = false;
        break;
      }
    if (all) fully_rejected.insert(l);
  }
  std::set<Literal> minus_restricted;
  for (const auto& l : constructible)
    if (ext.minus_partial.count(l)) minus_restricted.insert(l);
  return fully_rejected == minus_restricted;
}

}  // namespace normex
