#pragma once

// Model layer: executable finite algebras for the formula language, the two
// bundled model families (truncated language models and monoid-powerset
// models over an RDP preorder), law verification, inequation checking,
// rule-soundness sweeps and countermodel search.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lmc/algebra.hpp"
#include "lmc/calculus.hpp"
#include "lmc/syntax.hpp"

namespace lmc {

// -------------------------------------------------------------------- models

struct Model {
  std::string name;
  std::size_t size = 0;
  std::function<std::string(std::size_t)> elem_name;
  std::function<std::size_t(std::size_t, std::size_t)> prod, meet, join;
  std::function<std::size_t(std::size_t)> dia, box;
  std::size_t one = 0, bot = 0, top = 0;

  bool leq(std::size_t a, std::size_t b) const { return meet(a, b) == a; }
};

// Subsets of the words of length <= L, join = union, product = truncating
// concatenation, dia = prefix closure, box = prefix interior. Elements are
// bitmasks over the word list, so large carriers stay lazy.
inline Model build_truncated_model(const std::string& alphabet, std::size_t L) {
  auto words = std::make_shared<std::vector<std::string>>(words_upto(alphabet, L));
  std::size_t W = words->size();
  if (W > 20) throw std::invalid_argument("truncated model too large (> 20 words)");

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < W; ++i) index[(*words)[i]] = i;

  // concat[i][j]: word index of words[i]+words[j], or npos when too long.
  auto concat = std::make_shared<std::vector<std::vector<std::size_t>>>(
      W, std::vector<std::size_t>(W, static_cast<std::size_t>(-1)));
  auto prefixes = std::make_shared<std::vector<std::size_t>>(W, 0);
  for (std::size_t i = 0; i < W; ++i) {
    for (std::size_t j = 0; j < W; ++j) {
      std::string w = (*words)[i] + (*words)[j];
      if (w.size() <= L) (*concat)[i][j] = index[w];
    }
    for (std::size_t j = 0; j < W; ++j)
      if (is_prefix((*words)[j], (*words)[i])) (*prefixes)[i] |= std::size_t{1} << j;
  }

  Model m;
  m.name = "truncated(alphabet=" + alphabet + ", L=" + std::to_string(L) + ")";
  m.size = std::size_t{1} << W;
  m.one = 1;  // { empty word }
  m.bot = 0;
  m.top = m.size - 1;
  m.elem_name = [words, W](std::size_t a) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < W; ++i)
      if (a >> i & 1) {
        if (!first) out += ",";
        out += (*words)[i].empty() ? "eps" : (*words)[i];
        first = false;
      }
    return out + "}";
  };
  m.meet = [](std::size_t a, std::size_t b) { return a & b; };
  m.join = [](std::size_t a, std::size_t b) { return a | b; };
  m.prod = [concat, W](std::size_t a, std::size_t b) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < W; ++i) {
      if (!(a >> i & 1)) continue;
      for (std::size_t j = 0; j < W; ++j) {
        if (!(b >> j & 1)) continue;
        std::size_t k = (*concat)[i][j];
        if (k != static_cast<std::size_t>(-1)) out |= std::size_t{1} << k;
      }
    }
    return out;
  };
  m.dia = [prefixes, W](std::size_t a) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < W; ++i)
      if (a >> i & 1) out |= (*prefixes)[i];
    return out;
  };
  m.box = [prefixes, W](std::size_t a) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < W; ++i)
      if (((*prefixes)[i] & ~a) == 0) out |= std::size_t{1} << i;
    return out;
  };
  return m;
}

// Powerset of a finite monoid with a reflexive-transitive RDP preorder:
// product lifted pointwise, dia = downward closure, box = its interior.
inline Model build_preorder_model(const FiniteMonoid& mon, const Preorder& rel,
                                  std::string name = "") {
  if (auto d = monoid_defect(mon)) throw std::invalid_argument("monoid: " + *d);
  if (auto d = preorder_defect(rel, mon.n)) throw std::invalid_argument("preorder: " + *d);
  if (auto d = rdp_defect(mon, rel))
    throw std::invalid_argument("preorder lacks RDP at (" + mon.name_of(d->a1) + "," +
                                mon.name_of(d->a2) + "," + mon.name_of(d->b) + ")");
  std::size_t n = mon.n;
  if (n > 20) throw std::invalid_argument("monoid too large");

  auto monp = std::make_shared<FiniteMonoid>(mon);
  auto down = std::make_shared<std::vector<std::size_t>>(n, 0);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a)
      if (rel[a][b]) (*down)[b] |= std::size_t{1} << a;

  Model m;
  m.name = name.empty() ? "powerset(monoid size " + std::to_string(n) + ")" : std::move(name);
  m.size = std::size_t{1} << n;
  m.one = std::size_t{1} << mon.unit;
  m.bot = 0;
  m.top = m.size - 1;
  m.elem_name = [monp, n](std::size_t a) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i)
      if (a >> i & 1) {
        if (!first) out += ",";
        out += monp->name_of(i);
        first = false;
      }
    return out + "}";
  };
  m.meet = [](std::size_t a, std::size_t b) { return a & b; };
  m.join = [](std::size_t a, std::size_t b) { return a | b; };
  m.prod = [monp, n](std::size_t a, std::size_t b) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(a >> i & 1)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b >> j & 1) out |= std::size_t{1} << monp->mul(i, j);
    }
    return out;
  };
  m.dia = [down, n](std::size_t a) {
    std::size_t out = 0;
    for (std::size_t b = 0; b < n; ++b)
      if (a >> b & 1) out |= (*down)[b];
    return out;
  };
  m.box = [down, n](std::size_t a) {
    std::size_t out = 0;
    for (std::size_t b = 0; b < n; ++b)
      if (((*down)[b] & ~a) == 0) out |= std::size_t{1} << b;
    return out;
  };
  return m;
}

inline Model z2_total_model() {
  return build_preorder_model(z2_xor(), total_preorder(2), "z2-total");
}

inline Model z2_discrete_model() {
  return build_preorder_model(z2_xor(), discrete_preorder(2), "z2-discrete");
}

// ---------------------------------------------------------------- evaluation

using Assignment = std::map<std::string, std::size_t>;

inline std::size_t eval(const Model& m, const FormulaPtr& f, const Assignment& asg) {
  switch (f->tag) {
    case FTag::Var: {
      auto it = asg.find(f->var);
      if (it == asg.end()) throw std::invalid_argument("unassigned variable " + f->var);
      return it->second;
    }
    case FTag::One: return m.one;
    case FTag::Bot: return m.bot;
    case FTag::Top: return m.top;
    case FTag::Prod: return m.prod(eval(m, f->l, asg), eval(m, f->r, asg));
    case FTag::Meet: return m.meet(eval(m, f->l, asg), eval(m, f->r, asg));
    case FTag::Join: return m.join(eval(m, f->l, asg), eval(m, f->r, asg));
    case FTag::Dia: return m.dia(eval(m, f->l, asg));
    case FTag::Box: return m.box(eval(m, f->l, asg));
  }
  throw std::invalid_argument("bad formula");
}

inline std::size_t eval(const Model& m, const StructPtr& t, const Assignment& asg) {
  return eval(m, natural(t), asg);
}

inline bool holds_at(const Model& m, const Inequation& e, const Assignment& asg) {
  return m.leq(eval(m, e.lhs, asg), eval(m, e.rhs, asg));
}

inline bool holds_at(const Model& m, const Sequent& s, const Assignment& asg) {
  return holds_at(m, sharp(s), asg);
}

// --------------------------------------------------------- inequation checking

struct CheckOptions {
  unsigned long long exhaustive_budget = 1ull << 20;
  std::size_t samples = 4096;
  std::uint64_t seed = 1;
};

struct CheckOutcome {
  bool holds = true;
  bool exhaustive = true;
  std::string counterexample;  // rendered assignment when holds is false
};

namespace detail {

inline std::string render_assignment(const Model& m, const std::vector<std::string>& vars,
                                     const std::vector<std::size_t>& vals) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ", ";
    out += vars[i] + " = " + m.elem_name(vals[i]);
  }
  return out.empty() ? "(no variables)" : out;
}

// Runs pred over assignments to vars (exhaustively if the space fits in the
// budget, otherwise by seeded sampling); returns the first falsifying one.
template <typename Pred>
CheckOutcome sweep_assignments(const Model& m, const std::vector<std::string>& vars,
                               const CheckOptions& opt, Pred&& pred) {
  unsigned long long space = 1;
  bool fits = true;
  for (std::size_t i = 0; i < vars.size() && fits; ++i) {
    if (space > opt.exhaustive_budget / m.size) fits = false;
    else space *= m.size;
  }
  fits = fits && space <= opt.exhaustive_budget;

  std::vector<std::size_t> vals(vars.size(), 0);
  auto as_map = [&] {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = vals[i];
    return a;
  };

  if (fits) {
    while (true) {
      if (!pred(as_map()))
        return {false, true, render_assignment(m, vars, vals)};
      std::size_t i = 0;
      for (; i < vals.size(); ++i) {
        if (++vals[i] < m.size) break;
        vals[i] = 0;
      }
      if (i == vals.size()) break;
      if (vars.empty()) break;
    }
    return {true, true, ""};
  }

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> dist(0, m.size - 1);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    for (auto& v : vals) v = dist(rng);
    if (!pred(as_map()))
      return {false, false, render_assignment(m, vars, vals)};
  }
  return {true, false, ""};
}

}  // namespace detail

inline CheckOutcome check_inequation(const Model& m, const Inequation& e,
                                     const CheckOptions& opt = {}) {
  std::set<std::string> vs;
  collect_vars(e.lhs, vs);
  collect_vars(e.rhs, vs);
  std::vector<std::string> vars(vs.begin(), vs.end());
  return detail::sweep_assignments(m, vars, opt,
                                   [&](const Assignment& a) { return holds_at(m, e, a); });
}

inline CheckOutcome check_sequent(const Model& m, const Sequent& s,
                                  const CheckOptions& opt = {}) {
  return check_inequation(m, sharp(s), opt);
}

inline CheckOutcome check_equation(const Model& m, const Equation& e,
                                   const CheckOptions& opt = {}) {
  CheckOutcome a = check_inequation(m, Inequation{e.lhs, e.rhs}, opt);
  if (!a.holds) return a;
  CheckOutcome b = check_inequation(m, Inequation{e.rhs, e.lhs}, opt);
  b.exhaustive = a.exhaustive && b.exhaustive;
  return b;
}

// ------------------------------------------------------------- law batteries

struct LawOutcome {
  std::string name;
  std::string statement;
  CheckOutcome outcome;
};

struct Law {
  const char* name;
  const char* lhs;
  const char* rhs;
  bool equation;
};

inline const std::vector<Law>& axiom_laws() {
  static const std::vector<Law> laws = {
      // Bounded distributive lattice.
      {"meet_comm", "(x & y)", "(y & x)", true},
      {"meet_assoc", "((x & y) & z)", "(x & (y & z))", true},
      {"meet_idem", "(x & x)", "x", true},
      {"join_comm", "(x | y)", "(y | x)", true},
      {"join_assoc", "((x | y) | z)", "(x | (y | z))", true},
      {"join_idem", "(x | x)", "x", true},
      {"absorb_meet", "(x & (x | y))", "x", true},
      {"absorb_join", "(x | (x & y))", "x", true},
      {"top_unit", "(x & top)", "x", true},
      {"bot_unit", "(x | bot)", "x", true},
      {"distrib_meet", "(x & (y | z))", "((x & y) | (x & z))", true},
      {"distrib_join", "(x | (y & z))", "((x | y) & (x | z))", true},
      // Monoid over the lattice, bot absorbing.
      {"prod_assoc", "((x * y) * z)", "(x * (y * z))", true},
      {"one_left", "(1 * x)", "x", true},
      {"one_right", "(x * 1)", "x", true},
      {"prod_join_left", "(x * (y | z))", "((x * y) | (x * z))", true},
      {"prod_join_right", "((y | z) * x)", "((y * x) | (z * x))", true},
      {"bot_absorb_left", "(bot * x)", "bot", true},
      {"bot_absorb_right", "(x * bot)", "bot", true},
      // Closure operator axioms.
      {"c1_increasing", "x", "dia x", false},
      {"c2_idempotent", "dia dia x", "dia x", true},
      {"c3_join", "dia (x | y)", "(dia x | dia y)", true},
      {"c4_box_meet", "box (x & y)", "(box x & box y)", true},
      {"c5_prod", "dia (x * y)", "(dia x * dia y)", false},
      {"c6_counit", "dia box x", "x", false},
      {"c7_unit", "x", "box dia x", false},
  };
  return laws;
}

inline const std::vector<Law>& derived_laws() {
  static const std::vector<Law> laws = {
      {"d01_box_decreasing", "box x", "x", false},
      {"d02_box_idempotent", "box box x", "box x", true},
      {"d03_box_prod_stable", "box (box x * box y)", "(box x * box y)", true},
      {"d04_dia_box", "dia box x", "box x", true},
      {"d05_dia_bot", "dia bot", "bot", true},
      {"d06_dia_top", "dia top", "top", true},
      {"d07_box_bot", "box bot", "bot", true},
      {"d08_box_top", "box top", "top", true},
      {"d09_dia_meet", "dia (x & y)", "(dia x & dia y)", false},
      {"d10_box_join", "(box x | box y)", "box (x | y)", false},
      {"d11_box_dia", "box dia x", "dia x", true},
      {"d12_dia_prod_stable", "dia (dia x * dia y)", "(dia x * dia y)", true},
      {"d13_dia_meet_stable", "dia (dia x & dia y)", "(dia x & dia y)", true},
      {"d14_box_join_stable", "box (box x | box y)", "(box x | box y)", true},
      {"d15_box_prod", "(box x * box y)", "box (x * y)", false},
  };
  return laws;
}

inline std::vector<LawOutcome> verify_laws(const Model& m, const std::vector<Law>& laws,
                                           const CheckOptions& opt = {}) {
  std::vector<LawOutcome> out;
  for (const Law& law : laws) {
    FormulaPtr l = parse_formula(law.lhs), r = parse_formula(law.rhs);
    CheckOutcome o = law.equation ? check_equation(m, Equation{l, r}, opt)
                                  : check_inequation(m, Inequation{l, r}, opt);
    std::string stmt = std::string(law.lhs) + (law.equation ? " == " : " <= ") + law.rhs;
    out.push_back({law.name, stmt, o});
  }
  return out;
}

// Full battery: lattice + monoid + closure axioms + derived laws.
inline std::vector<LawOutcome> verify_axioms(const Model& m, const CheckOptions& opt = {}) {
  std::vector<LawOutcome> out = verify_laws(m, axiom_laws(), opt);
  std::vector<LawOutcome> der = verify_laws(m, derived_laws(), opt);
  out.insert(out.end(), der.begin(), der.end());
  return out;
}

// Residuation between the modalities: dia a <= b  iff  a <= box b, checked
// exhaustively over the carrier.
inline std::optional<std::string> residuation_defect(const Model& m) {
  for (std::size_t a = 0; a < m.size; ++a)
    for (std::size_t b = 0; b < m.size; ++b) {
      bool lhs = m.leq(m.dia(a), b);
      bool rhs = m.leq(a, m.box(b));
      if (lhs != rhs)
        return "a = " + m.elem_name(a) + ", b = " + m.elem_name(b);
    }
  return std::nullopt;
}

// ------------------------------------------------------------ rule soundness

struct SoundnessOutcome {
  bool ok = true;
  std::string detail;
};

// A rule instance is sound on m when every assignment making all premises
// hold also makes the conclusion hold.
inline SoundnessOutcome instance_sound(const Model& m, const std::vector<Sequent>& prems,
                                       const Sequent& concl, const CheckOptions& opt = {}) {
  std::set<std::string> vs;
  for (const auto& p : prems) {
    collect_vars(p.ant, vs);
    collect_vars(p.suc, vs);
  }
  collect_vars(concl.ant, vs);
  collect_vars(concl.suc, vs);
  std::vector<std::string> vars(vs.begin(), vs.end());
  CheckOutcome o = detail::sweep_assignments(m, vars, opt, [&](const Assignment& a) {
    for (const auto& p : prems)
      if (!holds_at(m, p, a)) return true;
    return holds_at(m, concl, a);
  });
  if (o.holds) return {true, ""};
  return {false, "conclusion '" + render(concl) + "' fails at " + o.counterexample};
}

// Deterministic pool of ground goal sequents: contexts of depth <= 2 over
// hole / x / y / eps, plugged subterms, and a small formula family.
inline std::vector<Sequent> soundness_goal_pool() {
  FormulaPtr x = fvar("x"), y = fvar("y");
  std::vector<StructPtr> leaves = {satom(x), satom(y), seps()};
  std::vector<StructPtr> plugs = {satom(x), satom(y), seps(), sangle(satom(x)),
                                  scomma(satom(x), satom(y))};
  std::vector<FormulaPtr> sucs = {x,        y,           fone(),       fbot(),
                                  ftop(),   fprod(x, y), fmeet(x, y),  fjoin(x, y),
                                  fdia(x),  fbox(x)};

  // Contexts as functions hole -> term.
  using Ctx = std::function<StructPtr(const StructPtr&)>;
  std::vector<Ctx> depth0 = {[](const StructPtr& h) { return h; }};
  auto grow = [&](const std::vector<Ctx>& base) {
    std::vector<Ctx> out;
    for (const Ctx& c : base) {
      out.push_back([c](const StructPtr& h) { return sangle(c(h)); });
      for (const StructPtr& a : leaves) {
        out.push_back([c, a](const StructPtr& h) { return scomma(c(h), a); });
        out.push_back([c, a](const StructPtr& h) { return scomma(a, c(h)); });
        out.push_back([c, a](const StructPtr& h) { return scap(c(h), a); });
        out.push_back([c, a](const StructPtr& h) { return scap(a, c(h)); });
      }
    }
    return out;
  };
  std::vector<Ctx> depth1 = grow(depth0);
  std::vector<Ctx> depth2 = grow(depth1);
  std::vector<Ctx> ctxs = depth0;
  ctxs.insert(ctxs.end(), depth1.begin(), depth1.end());
  ctxs.insert(ctxs.end(), depth2.begin(), depth2.end());

  std::vector<Sequent> out;
  for (const Ctx& c : ctxs)
    for (const StructPtr& plug : plugs)
      for (const FormulaPtr& f : sucs) out.push_back(Sequent{c(plug), f});
  return out;
}

struct RuleSoundnessReport {
  bool ok = true;
  std::size_t goals = 0;
  std::size_t instances = 0;
  std::string detail;
};

// Sweeps every backward rule instance over the goal pool (plus synthesized
// cut and mix instances) and checks each on the model.
inline RuleSoundnessReport check_rule_soundness(const Model& m,
                                                const std::vector<Sequent>& goals,
                                                const CheckOptions& opt = {}) {
  RuleSoundnessReport rep;
  rep.goals = goals.size();
  FormulaPtr x = fvar("x"), y = fvar("y");
  std::vector<StructPtr> deltas = {satom(y), seps(), sangle(satom(x)),
                                   scomma(satom(x), satom(y))};
  BackwardOptions bopt;
  bopt.t_focus = false;  // sweep unfocused T-wraps too
  for (const Sequent& g : goals) {
    for (const BackwardInstance& inst : backward_instances(g, bopt)) {
      ++rep.instances;
      SoundnessOutcome so = instance_sound(m, inst.premises, g, opt);
      if (!so.ok)
        return {false, rep.goals, rep.instances,
                std::string(rule_name(inst.app.rule)) + " at goal '" + render(g) +
                    "': " + so.detail};
    }
    // cut and mix instances over the atoms of the goal.
    for (const Position& p : all_positions(g.ant)) {
      StructPtr sub = subterm_at(g.ant, p);
      if (sub->tag != STag::FAtom) continue;
      for (const StructPtr& d : deltas) {
        Sequent left{d, sub->f};
        ++rep.instances;
        Sequent ccut{replace_one(g.ant, p, d), g.suc};
        SoundnessOutcome so = instance_sound(m, {left, g}, ccut, opt);
        if (!so.ok)
          return {false, rep.goals, rep.instances, "cut at '" + render(g) + "': " + so.detail};
        ++rep.instances;
        Sequent cmix{replace_at(g.ant, occurrences_of(g.ant, sub->f), d), g.suc};
        so = instance_sound(m, {left, g}, cmix, opt);
        if (!so.ok)
          return {false, rep.goals, rep.instances, "mix at '" + render(g) + "': " + so.detail};
      }
    }
  }
  return rep;
}

// --------------------------------------------------------- countermodel search

struct CountermodelOptions {
  std::size_t max_monoid_size = 3;
  std::size_t max_trunc_L = 3;
  CheckOptions check;
};

struct Countermodel {
  std::string model_name;
  std::string assignment;
};

namespace detail {

// Canonical key of (table, relation) under carrier permutations fixing the unit.
inline std::string monoid_preorder_key(const FiniteMonoid& m, const Preorder& r) {
  std::vector<std::size_t> perm(m.n);
  for (std::size_t i = 0; i < m.n; ++i) perm[i] = i;
  std::string best;
  do {
    std::string key;
    for (std::size_t a = 0; a < m.n; ++a)
      for (std::size_t b = 0; b < m.n; ++b) {
        // position (a,b) in the permuted table / relation
        std::size_t pa = perm[a], pb = perm[b];
        std::size_t prod = m.mul(pa, pb);
        std::size_t inv = static_cast<std::size_t>(
            std::find(perm.begin(), perm.end(), prod) - perm.begin());
        key += static_cast<char>('0' + inv);
        key += r[pa][pb] ? '<' : '.';
      }
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

}  // namespace detail

inline std::optional<Countermodel> countermodel_search(const Inequation& e,
                                                       const CountermodelOptions& opt = {}) {
  // Truncated language models first.
  for (const std::string& alphabet : {std::string("a"), std::string("ab")}) {
    for (std::size_t L = 0; L <= opt.max_trunc_L; ++L) {
      if (words_upto(alphabet, L).size() > 20) break;
      Model m = build_truncated_model(alphabet, L);
      CheckOutcome o = check_inequation(m, e, opt.check);
      if (!o.holds) return Countermodel{m.name, o.counterexample};
    }
  }

  // Monoid powerset models by monoid size, preorders from total downwards.
  for (std::size_t n = 1; n <= opt.max_monoid_size; ++n) {
    std::set<std::string> seen;
    std::size_t cells = (n - 1) * (n - 1);
    std::vector<std::size_t> fill(cells, 0);
    while (true) {
      FiniteMonoid mon;
      mon.n = n;
      mon.unit = 0;
      mon.table.assign(n, std::vector<std::size_t>(n));
      for (std::size_t a = 0; a < n; ++a) {
        mon.table[0][a] = a;
        mon.table[a][0] = a;
      }
      for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b)
          mon.table[a][b] = fill[(a - 1) * (n - 1) + (b - 1)];
      if (!monoid_defect(mon)) {
        std::size_t offdiag = n * n - n;
        // Iterate relation masks from all-ones down so total preorders come first.
        for (std::size_t mask = (std::size_t{1} << offdiag); mask-- > 0;) {
          Preorder rel = discrete_preorder(n);
          std::size_t bit = 0;
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
              if (a == b) continue;
              rel[a][b] = (mask >> bit & 1) != 0;
              ++bit;
            }
          if (preorder_defect(rel, n)) continue;
          if (!check_rdp(mon, rel)) continue;
          if (n <= 3 && !seen.insert(detail::monoid_preorder_key(mon, rel)).second) continue;
          Model m = build_preorder_model(mon, rel);
          CheckOutcome o = check_inequation(m, e, opt.check);
          if (!o.holds) {
            std::string desc = "powerset(n=" + std::to_string(n) + ", table=";
            for (std::size_t a = 0; a < n; ++a)
              for (std::size_t b = 0; b < n; ++b)
                desc += static_cast<char>('0' + mon.table[a][b]);
            desc += ", rel=";
            for (std::size_t a = 0; a < n; ++a)
              for (std::size_t b = 0; b < n; ++b) desc += rel[a][b] ? '1' : '0';
            desc += ")";
            return Countermodel{desc, o.counterexample};
          }
        }
      }
      // next table fill
      std::size_t i = 0;
      for (; i < cells; ++i) {
        if (++fill[i] < n) break;
        fill[i] = 0;
      }
      if (i == cells) break;
      if (cells == 0) break;
    }
  }
  return std::nullopt;
}

inline std::optional<Countermodel> countermodel_search(const Sequent& s,
                                                       const CountermodelOptions& opt = {}) {
  return countermodel_search(sharp(s), opt);
}

}  // namespace lmc
