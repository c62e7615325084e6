#include "normex/semantics.hpp"

#include <algorithm>
#include <sstream>

#include "normex/errors.hpp"
#include "normex/graph.hpp"

namespace normex {

Formula Formula::make_literal(Literal l) {
  Formula f;
  f.kind = Kind::literal;
  f.lit = std::move(l);
  return f;
}

Formula Formula::make_negation(Formula inner) {
  Formula f;
  f.kind = Kind::negation;
  f.inner = std::make_shared<Formula>(std::move(inner));
  return f;
}

Formula Formula::make_obligation(Literal l) {
  Formula f;
  f.kind = Kind::obligation;
  f.lit = std::move(l);
  return f;
}

Formula Formula::make_permission(Literal l) {
  Formula f;
  f.kind = Kind::permission;
  f.lit = std::move(l);
  return f;
}

namespace {

std::optional<Literal> parse_literal_token(const std::string& tok) {
  if (tok.empty()) return std::nullopt;
  std::string body = tok;
  bool positive = true;
  if (body[0] == '-') {
    positive = false;
    body = body.substr(1);
  }
  if (body.empty() || !(std::isalpha(static_cast<unsigned char>(body[0]))))
    return std::nullopt;
  for (char c : body)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return std::nullopt;
  return Literal{body, positive};
}

}  // namespace

std::optional<Formula> parse_formula(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  if (tokens.size() == 2 && (tokens[0] == "OBL" || tokens[0] == "PERM")) {
    auto l = parse_literal_token(tokens[1]);
    if (!l) return std::nullopt;
    return tokens[0] == "OBL" ? Formula::make_obligation(*l)
                              : Formula::make_permission(*l);
  }
  if (tokens.size() == 1) {
    auto l = parse_literal_token(tokens[0]);
    if (!l) return std::nullopt;
    return Formula::make_literal(*l);
  }
  return std::nullopt;
}

std::string to_string(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::literal: return to_string(f.lit);
    case Formula::Kind::negation: return "not(" + to_string(*f.inner) + ")";
    case Formula::Kind::obligation: return "OBL " + to_string(f.lit);
    case Formula::Kind::permission: return "PERM " + to_string(f.lit);
  }
  return "?";
}

DeonticModel DeonticModel::build(const ArgumentationTheory& at, int world_cap) {
  const DefeasibleTheory& t = at.theory();
  if (!superiority_acyclic(t))
    throw CyclicSetup("transitive closure of the superiority relation is cyclic");
  if (!dependency_graph(t).is_acyclic())
    throw CyclicSetup("dependency graph is cyclic");

  DExtensionSet e = d_extension(at);
  if (!e.consistent())
    throw InconsistentExtension("D-extension contains a literal and its complement");

  DeonticModel m(at);
  m.ext_.assign(e.literals.begin(), e.literals.end());
  int n = static_cast<int>(m.ext_.size());
  if (n > world_cap)
    throw WorldCapExceeded("|E(D)| = " + std::to_string(n) + " exceeds world cap " +
                           std::to_string(world_cap));
  if (n > 30) throw WorldCapExceeded("|E(D)| beyond representable world masks");

  std::set<Literal> class_set;
  for (const auto& r : t.rules) class_set.insert(r.consequent);
  m.classes_.assign(class_set.begin(), class_set.end());
  if (m.classes_.size() > 64) throw Error("too many conclusion classes");

  std::map<Literal, int> bit;
  for (int i = 0; i < n; ++i) bit[m.ext_[i]] = i;
  std::map<Literal, int> class_of;
  for (int c = 0; c < static_cast<int>(m.classes_.size()); ++c)
    class_of[m.classes_[c]] = c;

  struct RuleInfo {
    WorldMask ants = 0;
    bool feasible = true;  // every antecedent labels a bit
    int cls = -1;
  };
  std::vector<RuleInfo> info(t.rules.size());
  for (std::size_t r = 0; r < t.rules.size(); ++r) {
    info[r].cls = class_of.at(t.rules[r].consequent);
    for (const auto& a : t.rules[r].antecedents) {
      auto it = bit.find(a);
      if (it == bit.end()) {
        info[r].feasible = false;
        break;
      }
      info[r].ants |= (WorldMask{1} << it->second);
    }
  }
  // same-class and opposing rule indices per class
  std::vector<std::vector<int>> class_rules(m.classes_.size());
  std::vector<std::vector<int>> opposing(m.classes_.size());
  for (std::size_t r = 0; r < t.rules.size(); ++r)
    class_rules[info[r].cls].push_back(static_cast<int>(r));
  for (int c = 0; c < static_cast<int>(m.classes_.size()); ++c) {
    Literal opp = complement(m.classes_[c]);
    for (std::size_t r = 0; r < t.rules.size(); ++r)
      if (t.rules[r].consequent == opp) opposing[c].push_back(static_cast<int>(r));
  }
  std::set<std::pair<int, int>> stronger;  // rule-index superiority
  {
    std::map<std::string, int> by_label;
    for (std::size_t r = 0; r < t.rules.size(); ++r) by_label[t.rules[r].label] = static_cast<int>(r);
    for (const auto& [a, b] : t.superiority) {
      auto ia = by_label.find(a), ib = by_label.find(b);
      if (ia != by_label.end() && ib != by_label.end())
        stronger.insert({ia->second, ib->second});
    }
  }

  std::uint64_t world_total = (1ull << n) - 1;
  m.fired_.assign(world_total, 0);
  for (std::uint64_t wi = 1; wi <= world_total; ++wi) {
    WorldMask w = static_cast<WorldMask>(wi);
    std::uint64_t mask = 0;
    for (int c = 0; c < static_cast<int>(m.classes_.size()); ++c) {
      bool applicable = false;
      for (int r : class_rules[c])
        if (info[r].feasible && (info[r].ants & w) == info[r].ants) {
          applicable = true;
          break;
        }
      if (!applicable) continue;
      bool handled = true;
      for (int s : opposing[c]) {
        if (!info[s].feasible || (info[s].ants & w) != info[s].ants)
          continue;  // some antecedent of s fails at w
        bool beaten = false;
        for (int u : class_rules[c])
          if (info[u].feasible && (info[u].ants & w) == info[u].ants &&
              stronger.count({u, s})) {
            beaten = true;
            break;
          }
        if (!beaten) {
          handled = false;
          break;
        }
      }
      if (handled) mask |= (std::uint64_t{1} << c);
    }
    m.fired_[wi - 1] = mask;
  }
  return m;
}

std::vector<Literal> DeonticModel::world_literals(WorldMask w) const {
  std::vector<Literal> out;
  for (int i = 0; i < bits(); ++i)
    if (w & (WorldMask{1} << i)) out.push_back(ext_[i]);
  return out;
}

std::optional<int> DeonticModel::literal_bit(const Literal& l) const {
  auto it = std::lower_bound(ext_.begin(), ext_.end(), l);
  if (it == ext_.end() || *it != l) return std::nullopt;
  return static_cast<int>(it - ext_.begin());
}

bool DeonticModel::class_fired(WorldMask w, int class_idx) const {
  return (fired_[w - 1] >> class_idx) & 1;
}

bool DeonticModel::neighborhood_has_empty(WorldMask w) const {
  // The empty set belongs to N(w) when some class has no firing rule at w or
  // concludes a literal outside E(D).
  for (int c = 0; c < static_cast<int>(classes_.size()); ++c)
    if (!class_fired(w, c) || !literal_bit(classes_[c])) return true;
  return false;
}

bool DeonticModel::obl_holds(WorldMask w, const Literal& l) const {
  if (!valid_world(w)) throw UnknownWorld("world mask out of range");
  if (!literal_bit(l)) return false;  // ||l|| empty: guarded
  auto it = std::lower_bound(classes_.begin(), classes_.end(), l);
  if (it == classes_.end() || *it != l) return false;
  return class_fired(w, static_cast<int>(it - classes_.begin()));
}

bool DeonticModel::perm_holds(WorldMask w, const Literal& l) const {
  if (!valid_world(w)) throw UnknownWorld("world mask out of range");
  // W - ||l|| can only be a member of N(w) in one-literal models: every
  // neighborhood member is ∅ or a cylinder ||c||, and for n >= 2 no cylinder
  // equals a cylinder complement within nonempty subsets.
  if (bits() != 1) return true;
  if (literal_bit(l)) {
    // W - ||l|| = ∅
    return !neighborhood_has_empty(w);
  }
  // ||l|| = ∅, W - ||l|| = W = ||e0||
  const Literal& e0 = ext_[0];
  auto it = std::lower_bound(classes_.begin(), classes_.end(), e0);
  if (it != classes_.end() && *it == e0 &&
      class_fired(w, static_cast<int>(it - classes_.begin())))
    return false;
  return true;
}

bool DeonticModel::holds(WorldMask w, const Formula& f) const {
  if (!valid_world(w)) throw UnknownWorld("world mask out of range");
  switch (f.kind) {
    case Formula::Kind::literal: {
      auto b = literal_bit(f.lit);
      return b && (w & (WorldMask{1} << *b));
    }
    case Formula::Kind::negation:
      return !holds(w, *f.inner);
    case Formula::Kind::obligation:
      return obl_holds(w, f.lit);
    case Formula::Kind::permission:
      return perm_holds(w, f.lit);
  }
  return false;
}

std::vector<WorldMask> DeonticModel::truth_set(const Formula& f) const {
  std::vector<WorldMask> out;
  for (std::uint64_t w = 1; w <= world_count(); ++w)
    if (holds(static_cast<WorldMask>(w), f)) out.push_back(static_cast<WorldMask>(w));
  return out;
}

namespace {

constexpr std::uint64_t kMaterializeCap = 1u << 14;

std::vector<std::vector<int>> dedup_family(std::vector<std::vector<int>> fam) {
  for (auto& member : fam) std::sort(member.begin(), member.end());
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  return fam;
}

SubModel submodel_over(const DeonticModel& m, std::vector<WorldMask> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (WorldMask w : keep)
    if (!m.valid_world(w)) throw NotASubset("world mask outside the model");
  if (keep.size() > kMaterializeCap) throw WorldCapExceeded("submodel too large");

  SubModel sub;
  std::map<std::set<Literal>, int> index_of;
  std::vector<std::set<Literal>> labels;
  for (WorldMask w : keep) {
    auto lits = m.world_literals(w);
    labels.emplace_back(lits.begin(), lits.end());
  }
  // order worlds by literal set
  std::vector<int> order(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return labels[a] < labels[b]; });
  std::vector<WorldMask> sorted_keep;
  for (int o : order) {
    index_of[labels[o]] = static_cast<int>(sub.worlds.size());
    sub.worlds.push_back(labels[o]);
    sorted_keep.push_back(keep[o]);
  }

  // member ||c|| ∩ X per class, as indices into sub.worlds
  std::vector<std::vector<int>> class_members(m.classes().size());
  for (int c = 0; c < static_cast<int>(m.classes().size()); ++c) {
    auto b = m.literal_bit(m.classes()[c]);
    if (!b) continue;  // ||c|| empty
    for (std::size_t i = 0; i < sorted_keep.size(); ++i)
      if (sorted_keep[i] & (WorldMask{1} << *b))
        class_members[c].push_back(static_cast<int>(i));
  }

  for (std::size_t i = 0; i < sorted_keep.size(); ++i) {
    WorldMask w = sorted_keep[i];
    std::vector<std::vector<int>> fam;
    if (m.neighborhood_has_empty(w)) fam.push_back({});
    for (int c = 0; c < static_cast<int>(m.classes().size()); ++c)
      if (m.class_fired(w, c) && m.literal_bit(m.classes()[c]))
        fam.push_back(class_members[c]);
    sub.neighborhoods.push_back(dedup_family(std::move(fam)));
  }
  return sub;
}

}  // namespace

std::optional<int> SubModel::world_index(const std::set<Literal>& w) const {
  auto it = std::lower_bound(worlds.begin(), worlds.end(), w);
  if (it == worlds.end() || *it != w) return std::nullopt;
  return static_cast<int>(it - worlds.begin());
}

std::vector<int> SubModel::literal_truth_set(const Literal& l) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(worlds.size()); ++i)
    if (worlds[i].count(l)) out.push_back(i);
  return out;
}

bool SubModel::obl_holds(int world_idx, const Literal& l) const {
  std::vector<int> ts = literal_truth_set(l);
  if (ts.empty()) return false;  // same guard as the full model
  const auto& fam = neighborhoods[world_idx];
  return std::binary_search(fam.begin(), fam.end(), ts);
}

bool SubModel::perm_holds(int world_idx, const Literal& l) const {
  std::vector<int> ts = literal_truth_set(l);
  std::vector<int> rest;
  std::set<int> in(ts.begin(), ts.end());
  for (int i = 0; i < static_cast<int>(worlds.size()); ++i)
    if (!in.count(i)) rest.push_back(i);
  const auto& fam = neighborhoods[world_idx];
  return !std::binary_search(fam.begin(), fam.end(), rest);
}

bool SubModel::holds(int world_idx, const Formula& f) const {
  if (world_idx < 0 || world_idx >= static_cast<int>(worlds.size()))
    throw UnknownWorld("world index out of range");
  switch (f.kind) {
    case Formula::Kind::literal:
      return worlds[world_idx].count(f.lit) != 0;
    case Formula::Kind::negation:
      return !holds(world_idx, *f.inner);
    case Formula::Kind::obligation:
      return obl_holds(world_idx, f.lit);
    case Formula::Kind::permission:
      return perm_holds(world_idx, f.lit);
  }
  return false;
}

SubModel materialize(const DeonticModel& m) {
  std::vector<WorldMask> all;
  all.reserve(m.world_count());
  for (std::uint64_t w = 1; w <= m.world_count(); ++w)
    all.push_back(static_cast<WorldMask>(w));
  return submodel_over(m, std::move(all));
}

SubModel generated_submodel(const DeonticModel& m, const std::vector<WorldMask>& X) {
  return submodel_over(m, X);
}

SubModel generated_submodel(const SubModel& m, const std::set<std::set<Literal>>& X) {
  std::vector<int> keep;
  for (const auto& w : X) {
    auto idx = m.world_index(w);
    if (!idx) throw NotASubset("world not present in the submodel");
    keep.push_back(*idx);
  }
  std::sort(keep.begin(), keep.end());
  std::map<int, int> remap;
  SubModel sub;
  for (int old : keep) {
    remap[old] = static_cast<int>(sub.worlds.size());
    sub.worlds.push_back(m.worlds[old]);
  }
  for (int old : keep) {
    std::vector<std::vector<int>> fam;
    for (const auto& member : m.neighborhoods[old]) {
      std::vector<int> inter;
      for (int widx : member) {
        auto it = remap.find(widx);
        if (it != remap.end()) inter.push_back(it->second);
      }
      fam.push_back(std::move(inter));
    }
    sub.neighborhoods.push_back(dedup_family(std::move(fam)));
  }
  return sub;
}

bool certify_generated(const DeonticModel& m, const SubModel& sub) {
  for (int i = 0; i < static_cast<int>(sub.worlds.size()); ++i) {
    WorldMask w = 0;
    for (const auto& l : sub.worlds[i]) {
      auto b = m.literal_bit(l);
      if (!b) return false;
      w |= (WorldMask{1} << *b);
    }
    for (const auto& l : m.extension()) {
      bool in_model = m.obl_holds(w, l);
      bool in_sub = sub.obl_holds(i, l);
      if (in_model != in_sub) return false;
    }
  }
  return true;
}

SubModel explanation_submodel(const DeonticModel& m, const Explanation& e) {
  Framework fw = Framework::build(m.source());
  for (const auto& id : e.argument_ids)
    if (!fw.by_canonical(id))
      throw ForeignArgument("argument " + id + " not constructible from the theory");

  std::set<int> removed_bits;
  for (const auto& f : m.source().facts()) {
    if (e.argument_ids.count(to_string(f))) continue;  // factual argument kept
    auto b = m.literal_bit(f);
    if (b) removed_bits.insert(*b);
  }
  std::vector<WorldMask> keep;
  for (std::uint64_t w = 1; w <= m.world_count(); ++w) {
    bool drop = false;
    for (int b : removed_bits)
      if (w & (WorldMask{1} << b)) { drop = true; break; }
    if (!drop) keep.push_back(static_cast<WorldMask>(w));
  }
  return generated_submodel(m, keep);
}

bool verify_argument_condition(const DeonticModel& m, const Framework& fw, int arg) {
  if (arg < 0 || arg >= static_cast<int>(fw.arguments().size()))
    throw ForeignArgument("argument index out of range");
  if (!structurally_equal(fw.theory(), m.source().theory()))
    throw ForeignArgument("framework built from a different theory");

  const Argument& a = fw.arguments()[arg];
  if (!a.rule) return true;  // factual arguments hold vacuously

  // plain subarguments grouped by depth from the root
  std::vector<std::vector<int>> strata;
  std::vector<int> frontier{arg};
  while (!frontier.empty()) {
    std::vector<int> level, next;
    for (int x : frontier) {
      if (fw.arguments()[x].rule) level.push_back(x);
      for (int c : fw.arguments()[x].children) next.push_back(c);
    }
    if (!level.empty()) strata.push_back(std::move(level));
    frontier = std::move(next);
  }
  std::reverse(strata.begin(), strata.end());  // deepest first

  const DefeasibleTheory& t = fw.theory();
  for (const auto& level : strata) {
    bool found = false;
    for (std::uint64_t wi = 1; wi <= m.world_count() && !found; ++wi) {
      WorldMask w = static_cast<WorldMask>(wi);
      bool ok = true;
      for (int x : level) {
        const Rule& r = t.rules[*fw.arguments()[x].rule];
        for (const auto& q : r.antecedents) {
          auto b = m.literal_bit(q);
          if (!b || !(w & (WorldMask{1} << *b))) { ok = false; break; }
        }
        if (!ok) break;
        if (!m.obl_holds(w, fw.arguments()[x].conclusion)) { ok = false; break; }
      }
      found = ok;
    }
    if (!found) return false;
  }
  return true;
}

bool verify_explanation_condition(const DeonticModel& m, const Framework& fw,
                                  const Explanation& e) {
  for (const auto& id : e.argument_ids) {
    auto idx = fw.by_canonical(id);
    if (!idx) throw ForeignArgument("argument " + id + " not in the framework");
    if (!verify_argument_condition(m, fw, *idx)) return false;
  }
  return true;
}

SemanticStabilityResult semantic_stability_check(const ArgumentationTheory& t,
                                                 const Explanation& e, int world_cap) {
  SemanticStabilityResult res;

  // F+: literals occurring in antecedents that no rule concludes.
  for (const auto& r : t.rules())
    for (const auto& a : r.antecedents) {
      bool concluded = false;
      for (const auto& r2 : t.rules())
        if (r2.consequent == a || r2.consequent == complement(a)) {
          concluded = true;
          break;
        }
      if (!concluded) res.f_plus.insert(a);
    }
  std::set<Literal> combined(t.facts().begin(), t.facts().end());
  combined.insert(res.f_plus.begin(), res.f_plus.end());
  if (!consistent(combined)) {
    std::string clash;
    for (const auto& l : combined)
      if (!l.positive && combined.count(complement(l)))
        clash += (clash.empty() ? "" : ", ") + to_string(complement(l)) + "/" + to_string(l);
    throw InconsistentFPlus("F+ clashes with the fact set: " + clash);
  }

  DefeasibleTheory plus = t.theory();
  for (const auto& l : res.f_plus)
    if (!plus.has_fact(l)) plus.facts.push_back(l);
  auto validated = ArgumentationTheory::validate(plus);
  if (!validated.ok()) throw InvalidTheory("D+ failed validation");
  const ArgumentationTheory& dplus = *validated.theory;

  res.explanation_in_d_plus = false;
  for (const auto& cand : find_explanations(dplus, e.target, e.mode))
    if (cand.argument_ids == e.argument_ids) {
      res.explanation_in_d_plus = true;
      break;
    }

  DeonticModel md = DeonticModel::build(t, world_cap);
  DeonticModel mdp = DeonticModel::build(dplus, world_cap);
  SubModel sd = explanation_submodel(md, e);
  SubModel sdp = explanation_submodel(mdp, e);

  std::set<std::set<Literal>> common;
  {
    std::set<std::set<Literal>> wd(sd.worlds.begin(), sd.worlds.end());
    for (const auto& w : sdp.worlds)
      if (wd.count(w)) common.insert(w);
  }
  SubModel gd = generated_submodel(sd, common);
  SubModel gdp = generated_submodel(sdp, common);
  res.submodels_equal = (gd == gdp);

  res.holds = res.explanation_in_d_plus && res.submodels_equal;
  return res;
}

}  // namespace normex
