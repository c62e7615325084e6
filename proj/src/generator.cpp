#include "normex/generator.hpp"

#include <algorithm>
#include <random>

namespace normex {

namespace {

// Hand-rolled bounded sampling: uniform_int_distribution is
// implementation-defined, which would break byte-identical output.
struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  int bounded(int n) { return n <= 1 ? 0 : static_cast<int>(g() % n); }
  bool coin() { return (g() & 1) != 0; }
};

}  // namespace

DefeasibleTheory generate_theory(const GenParams& p) {
  Rng rng(p.seed);
  DefeasibleTheory t;

  int total = std::max(1, p.atoms);
  int nfact = std::clamp(p.fact_atoms, 0, total);
  int nfree = std::clamp(p.free_fact_atoms, 0, total - nfact);
  int nconc = std::min(total - nfact - nfree, std::max(0, p.rules));
  int nrules = nconc == 0 ? 0 : std::max(p.rules, nconc);

  auto atom_name = [](int i) { return "a" + std::to_string(i); };

  std::vector<Literal> justified;
  for (int i = 0; i < nfact; ++i) {
    Literal f{atom_name(i), rng.coin()};
    t.facts.push_back(f);
    justified.push_back(f);
  }
  std::vector<Literal> free_lits;
  for (int i = 0; i < nfree; ++i)
    free_lits.push_back(Literal{atom_name(nfact + i), rng.coin()});

  // rule budget per conclusion atom, one guaranteed applicable rule each
  std::vector<int> budget(nconc, 0);
  for (int i = 0; i < nconc; ++i) budget[i] = 1;
  for (int extra = nrules - nconc; extra > 0; --extra) ++budget[rng.bounded(nconc)];

  std::vector<int> priority(nrules);
  for (int i = 0; i < nrules; ++i) priority[i] = i;
  for (int i = nrules - 1; i > 0; --i)
    std::swap(priority[i], priority[rng.bounded(i + 1)]);

  auto sample_body = [&](const std::vector<Literal>& pool, int want) {
    std::vector<Literal> out;
    std::vector<int> idx(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) idx[i] = static_cast<int>(i);
    for (int k = 0; k < want && !idx.empty(); ++k) {
      int j = rng.bounded(static_cast<int>(idx.size()));
      out.push_back(pool[idx[j]]);
      idx.erase(idx.begin() + j);
    }
    return out;
  };

  if (justified.empty()) nconc = 0;  // nothing to ground rules in

  int rule_idx = 0;
  for (int k = 0; k < nconc; ++k) {
    std::string head_atom = atom_name(nfact + nfree + k);
    std::vector<Literal> mixed = justified;
    for (const auto& l : justified) mixed.push_back(complement(l));
    mixed.insert(mixed.end(), free_lits.begin(), free_lits.end());

    struct Made {
      int index;
      bool applicable;
    };
    std::vector<Made> made;
    for (int b = 0; b < budget[k]; ++b) {
      int body_size = 1 + rng.bounded(std::max(1, p.max_body));
      std::vector<Literal> body;
      bool applicable;
      if (b == 0) {  // grounding rule: body drawn from justified literals
        body = sample_body(justified, body_size);
        applicable = true;
      } else {
        body = sample_body(mixed, body_size);
        applicable = true;
        for (const auto& l : body) {
          bool just = std::find(justified.begin(), justified.end(), l) != justified.end();
          if (!just) { applicable = false; break; }
        }
      }
      if (body.empty()) continue;
      Literal head{head_atom, rng.coin()};
      std::string label = "r" + std::to_string(rule_idx + 1);
      t.rules.push_back(make_rule(label, RuleKind::defeasible, body, head));
      made.push_back({rule_idx, applicable});
      ++rule_idx;
    }

    // orient every complementary-conclusion pair by priority
    for (std::size_t i = 0; i < made.size(); ++i)
      for (std::size_t j = i + 1; j < made.size(); ++j) {
        const Rule& ri = t.rules[made[i].index];
        const Rule& rj = t.rules[made[j].index];
        if (ri.consequent != complement(rj.consequent)) continue;
        if (priority[made[i].index] > priority[made[j].index])
          t.superiority.emplace_back(ri.label, rj.label);
        else
          t.superiority.emplace_back(rj.label, ri.label);
      }

    // the highest-priority applicable rule settles the atom
    int best = -1;
    for (const auto& m : made)
      if (m.applicable && (best < 0 || priority[m.index] > priority[best]))
        best = m.index;
    if (best >= 0) justified.push_back(t.rules[best].consequent);
  }

  return t;
}

}  // namespace normex
