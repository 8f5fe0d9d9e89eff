#pragma once

// Proof layer: rule identifiers, rule applications, derivation trees, the
// forward rule engine, the derivation checker, backward rule-instance
// enumeration for proof search, derived-rule macros and the built-in
// derivation corpus.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lmc/syntax.hpp"

namespace lmc {

// ------------------------------------------------------------------ rule ids

enum class RuleId {
  init, cut,
  oA_l2r, oA_r2l, oEps, epsO,
  capA_l2r, capA_r2l, capW1, capE, capC,
  K, T, Four,
  prodL, prodR, meetL, meetR, joinL, joinR1, joinR2,
  diaL, diaR, bboxL, bboxR,
  oneL, oneR, prodOne, oneProd,
  botL, topR,
  mix
};

inline const char* rule_name(RuleId r) {
  switch (r) {
    case RuleId::init: return "init";
    case RuleId::cut: return "cut";
    case RuleId::oA_l2r: return "oA_l2r";
    case RuleId::oA_r2l: return "oA_r2l";
    case RuleId::oEps: return "oEps";
    case RuleId::epsO: return "epsO";
    case RuleId::capA_l2r: return "capA_l2r";
    case RuleId::capA_r2l: return "capA_r2l";
    case RuleId::capW1: return "capW1";
    case RuleId::capE: return "capE";
    case RuleId::capC: return "capC";
    case RuleId::K: return "K";
    case RuleId::T: return "T";
    case RuleId::Four: return "Four";
    case RuleId::prodL: return "prodL";
    case RuleId::prodR: return "prodR";
    case RuleId::meetL: return "meetL";
    case RuleId::meetR: return "meetR";
    case RuleId::joinL: return "joinL";
    case RuleId::joinR1: return "joinR1";
    case RuleId::joinR2: return "joinR2";
    case RuleId::diaL: return "diaL";
    case RuleId::diaR: return "diaR";
    case RuleId::bboxL: return "bboxL";
    case RuleId::bboxR: return "bboxR";
    case RuleId::oneL: return "oneL";
    case RuleId::oneR: return "oneR";
    case RuleId::prodOne: return "prodOne";
    case RuleId::oneProd: return "oneProd";
    case RuleId::botL: return "botL";
    case RuleId::topR: return "topR";
    case RuleId::mix: return "mix";
  }
  return "?";
}

inline std::optional<RuleId> rule_from_name(const std::string& s) {
  static const std::map<std::string, RuleId> m = {
      {"init", RuleId::init}, {"cut", RuleId::cut},
      {"oA_l2r", RuleId::oA_l2r}, {"oA_r2l", RuleId::oA_r2l},
      {"oEps", RuleId::oEps}, {"epsO", RuleId::epsO},
      {"capA_l2r", RuleId::capA_l2r}, {"capA_r2l", RuleId::capA_r2l},
      {"capW1", RuleId::capW1}, {"capE", RuleId::capE}, {"capC", RuleId::capC},
      {"K", RuleId::K}, {"T", RuleId::T}, {"Four", RuleId::Four},
      {"prodL", RuleId::prodL}, {"prodR", RuleId::prodR},
      {"meetL", RuleId::meetL}, {"meetR", RuleId::meetR},
      {"joinL", RuleId::joinL}, {"joinR1", RuleId::joinR1}, {"joinR2", RuleId::joinR2},
      {"diaL", RuleId::diaL}, {"diaR", RuleId::diaR},
      {"bboxL", RuleId::bboxL}, {"bboxR", RuleId::bboxR},
      {"oneL", RuleId::oneL}, {"oneR", RuleId::oneR},
      {"prodOne", RuleId::prodOne}, {"oneProd", RuleId::oneProd},
      {"botL", RuleId::botL}, {"topR", RuleId::topR},
      {"mix", RuleId::mix}};
  auto it = m.find(s);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

// ------------------------------------------------------------ rule instances

struct rule_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ctx points into the premise antecedent (first premise for binary left
// rules; the right premise for cut). For axiom rules the conclusion is
// rebuilt from aux data: init carries the formula, botL/topR carry the whole
// antecedent (and botL's ctx addresses one bot-atom in it, botL's
// aux_formula the succedent).
struct RuleApp {
  RuleId rule = RuleId::init;
  Position ctx;
  std::vector<Position> occ;  // mix only
  FormulaPtr aux_formula;
  StructPtr aux_term;
};

namespace detail {
inline void need(bool cond, const char* msg) {
  if (!cond) throw rule_error(msg);
}
}  // namespace detail

inline Sequent apply_rule(const RuleApp& app, const std::vector<Sequent>& prems) {
  using detail::need;
  auto arity = [&](std::size_t n) { need(prems.size() == n, "wrong premise count"); };

  // Unary rewrite of the antecedent at app.ctx: redex -> contractum.
  auto rewrite = [&](auto&& make) -> Sequent {
    arity(1);
    StructPtr redex = subterm_at(prems[0].ant, app.ctx);
    StructPtr out = make(redex);
    return Sequent{replace_one(prems[0].ant, app.ctx, out), prems[0].suc};
  };

  switch (app.rule) {
    case RuleId::init:
      arity(0);
      need(app.aux_formula != nullptr, "init needs its formula");
      return Sequent{satom(app.aux_formula), app.aux_formula};

    case RuleId::oneR:
      arity(0);
      return Sequent{seps(), fone()};

    case RuleId::botL: {
      arity(0);
      need(app.aux_term != nullptr && app.aux_formula != nullptr,
           "botL needs antecedent and succedent");
      StructPtr at = subterm_at(app.aux_term, app.ctx);
      need(at->tag == STag::FAtom && at->f->tag == FTag::Bot,
           "botL ctx must address a bot atom");
      return Sequent{app.aux_term, app.aux_formula};
    }

    case RuleId::topR:
      arity(0);
      need(app.aux_term != nullptr, "topR needs its antecedent");
      return Sequent{app.aux_term, ftop()};

    case RuleId::oA_l2r:
      return rewrite([](const StructPtr& x) {
        need(x->tag == STag::Comma && x->l->tag == STag::Comma, "oA_l2r shape");
        return scomma(x->l->l, scomma(x->l->r, x->r));
      });

    case RuleId::oA_r2l:
      return rewrite([](const StructPtr& x) {
        need(x->tag == STag::Comma && x->r->tag == STag::Comma, "oA_r2l shape");
        return scomma(scomma(x->l, x->r->l), x->r->r);
      });

    case RuleId::oEps:
      return rewrite([](const StructPtr& x) { return scomma(x, seps()); });

    case RuleId::epsO:
      return rewrite([](const StructPtr& x) { return scomma(seps(), x); });

    case RuleId::capA_l2r:
      return rewrite([](const StructPtr& x) {
        need(x->tag == STag::Cap && x->l->tag == STag::Cap, "capA_l2r shape");
        return scap(x->l->l, scap(x->l->r, x->r));
      });

    case RuleId::capA_r2l:
      return rewrite([](const StructPtr& x) {
        need(x->tag == STag::Cap && x->r->tag == STag::Cap, "capA_r2l shape");
        return scap(scap(x->l, x->r->l), x->r->r);
      });

    case RuleId::capW1:
      need(app.aux_term != nullptr, "capW1 needs the weakened-in term");
      return rewrite([&](const StructPtr& x) { return scap(x, app.aux_term); });

    case RuleId::capE:
      return rewrite([](const StructPtr& x) {
        need(x->tag == STag::Cap, "capE shape");
        return scap(x->r, x->l);
      });

    case RuleId::capC:
      return rewrite([](const StructPtr& x) {
        need(x->tag == STag::Cap && steq(x->l, x->r), "capC shape");
        return x->l;
      });

    case RuleId::K:
      return rewrite([](const StructPtr& x) {
        need(x->tag == STag::Comma && x->l->tag == STag::Angle &&
                 x->r->tag == STag::Angle,
             "K shape");
        return sangle(scomma(x->l->l, x->r->l));
      });

    case RuleId::T:
      return rewrite([](const StructPtr& x) {
        need(x->tag == STag::Angle, "T shape");
        return x->l;
      });

    case RuleId::Four:
      return rewrite([](const StructPtr& x) {
        need(x->tag == STag::Angle, "Four shape");
        return sangle(x);
      });

    case RuleId::prodL:
      return rewrite([](const StructPtr& x) {
        need(x->tag == STag::Comma && x->l->tag == STag::FAtom &&
                 x->r->tag == STag::FAtom,
             "prodL shape");
        return satom(fprod(x->l->f, x->r->f));
      });

    case RuleId::meetL:
      return rewrite([](const StructPtr& x) {
        need(x->tag == STag::Cap && x->l->tag == STag::FAtom &&
                 x->r->tag == STag::FAtom,
             "meetL shape");
        return satom(fmeet(x->l->f, x->r->f));
      });

    case RuleId::diaL:
      return rewrite([](const StructPtr& x) {
        need(x->tag == STag::Angle && x->l->tag == STag::FAtom, "diaL shape");
        return satom(fdia(x->l->f));
      });

    case RuleId::bboxL:
      return rewrite([](const StructPtr& x) {
        need(x->tag == STag::FAtom, "bboxL shape");
        return sangle(satom(fbox(x->f)));
      });

    case RuleId::oneL:
      return rewrite([](const StructPtr& x) {
        need(x->tag == STag::Eps, "oneL shape");
        return satom(fone());
      });

    case RuleId::joinL: {
      arity(2);
      StructPtr h1 = subterm_at(prems[0].ant, app.ctx);
      StructPtr h2 = subterm_at(prems[1].ant, app.ctx);
      need(h1->tag == STag::FAtom && h2->tag == STag::FAtom, "joinL hole shape");
      need(feq(prems[0].suc, prems[1].suc), "joinL succedents differ");
      StructPtr marker = seps();
      need(steq(replace_one(prems[0].ant, app.ctx, marker),
                replace_one(prems[1].ant, app.ctx, marker)),
           "joinL contexts differ");
      return Sequent{replace_one(prems[0].ant, app.ctx, satom(fjoin(h1->f, h2->f))),
                     prems[0].suc};
    }

    case RuleId::prodR:
      arity(2);
      return Sequent{scomma(prems[0].ant, prems[1].ant),
                     fprod(prems[0].suc, prems[1].suc)};

    case RuleId::meetR:
      arity(2);
      need(steq(prems[0].ant, prems[1].ant), "meetR antecedents differ");
      return Sequent{prems[0].ant, fmeet(prems[0].suc, prems[1].suc)};

    case RuleId::joinR1:
      arity(1);
      need(app.aux_formula != nullptr, "joinR1 needs the other disjunct");
      return Sequent{prems[0].ant, fjoin(prems[0].suc, app.aux_formula)};

    case RuleId::joinR2:
      arity(1);
      need(app.aux_formula != nullptr, "joinR2 needs the other disjunct");
      return Sequent{prems[0].ant, fjoin(app.aux_formula, prems[0].suc)};

    case RuleId::diaR:
      arity(1);
      return Sequent{sangle(prems[0].ant), fdia(prems[0].suc)};

    case RuleId::bboxR:
      arity(1);
      need(prems[0].ant->tag == STag::Angle, "bboxR needs an angled antecedent");
      return Sequent{prems[0].ant->l, fbox(prems[0].suc)};

    case RuleId::prodOne:
      arity(1);
      return Sequent{prems[0].ant, fprod(prems[0].suc, fone())};

    case RuleId::oneProd:
      arity(1);
      return Sequent{prems[0].ant, fprod(fone(), prems[0].suc)};

    case RuleId::cut: {
      arity(2);
      StructPtr at = subterm_at(prems[1].ant, app.ctx);
      need(at->tag == STag::FAtom && feq(at->f, prems[0].suc),
           "cut ctx must address an atom of the cut formula");
      return Sequent{replace_one(prems[1].ant, app.ctx, prems[0].ant), prems[1].suc};
    }

    case RuleId::mix: {
      arity(2);
      for (const auto& p : app.occ) {
        StructPtr at = subterm_at(prems[1].ant, p);
        need(at->tag == STag::FAtom && feq(at->f, prems[0].suc),
             "mix occ must address atoms of the mix formula");
      }
      return Sequent{replace_at(prems[1].ant, app.occ, prems[0].ant), prems[1].suc};
    }
  }
  throw rule_error("unknown rule");
}

// ------------------------------------------------------------- derivations

struct Derivation;
using Deriv = std::shared_ptr<const Derivation>;

struct Derivation {
  RuleApp app;
  Sequent conclusion;
  std::vector<Deriv> premises;
};

// Builds a node whose conclusion is recomputed from the rule; nodes made this
// way are locally valid by construction.
inline Deriv mk(RuleApp app, std::vector<Deriv> prems) {
  std::vector<Sequent> concl;
  concl.reserve(prems.size());
  for (const auto& p : prems) concl.push_back(p->conclusion);
  Sequent c = apply_rule(app, concl);
  auto d = std::make_shared<Derivation>();
  d->app = std::move(app);
  d->conclusion = std::move(c);
  d->premises = std::move(prems);
  return d;
}

inline std::size_t height(const Deriv& d) {
  std::size_t h = 0;
  for (const auto& p : d->premises) h = std::max(h, height(p));
  return h + 1;
}

inline std::size_t node_count(const Deriv& d) {
  std::size_t n = 1;
  for (const auto& p : d->premises) n += node_count(p);
  return n;
}

inline std::size_t count_rule(const Deriv& d, RuleId r) {
  std::size_t n = d->app.rule == r ? 1 : 0;
  for (const auto& p : d->premises) n += count_rule(p, r);
  return n;
}

inline bool uses_rule(const Deriv& d, RuleId r) { return count_rule(d, r) > 0; }

struct CheckResult {
  bool ok = true;
  std::string error;
  std::vector<int> path;  // premise indices from the root to the failing node
};

inline CheckResult check_derivation(const Deriv& d) {
  std::vector<int> path;
  CheckResult res;
  auto walk = [&](auto&& self, const Deriv& n) -> bool {
    for (std::size_t i = 0; i < n->premises.size(); ++i) {
      path.push_back(static_cast<int>(i));
      if (!self(self, n->premises[i])) return false;
      path.pop_back();
    }
    std::vector<Sequent> concl;
    for (const auto& p : n->premises) concl.push_back(p->conclusion);
    try {
      Sequent c = apply_rule(n->app, concl);
      if (!seq_eq(c, n->conclusion)) {
        res = {false,
               std::string(rule_name(n->app.rule)) + ": stored conclusion '" +
                   render(n->conclusion) + "' differs from derived '" + render(c) + "'",
               path};
        return false;
      }
    } catch (const std::exception& e) {
      res = {false, std::string(rule_name(n->app.rule)) + ": " + e.what(), path};
      return false;
    }
    return true;
  };
  walk(walk, d);
  return res;
}

// ------------------------------------------------- backward rule enumeration

struct BackwardInstance {
  RuleApp app;
  std::vector<Sequent> premises;
};

struct BackwardOptions {
  bool allow_capC = true;
  bool allow_T = true;
  bool t_focus = true;  // only angle-wraps that enable K/Four/bboxL/diaR
};

// All single-rule backward steps from `goal` (cut/mix excluded).
inline std::vector<BackwardInstance> backward_instances(const Sequent& goal,
                                                        const BackwardOptions& opt = {}) {
  std::vector<BackwardInstance> out;
  const StructPtr& ant = goal.ant;
  const FormulaPtr& suc = goal.suc;
  auto push = [&](RuleApp app, std::vector<Sequent> prems) {
    out.push_back({std::move(app), std::move(prems)});
  };
  auto unary = [&](RuleId r, const Position& p, StructPtr newsub, FormulaPtr auxf = nullptr,
                   StructPtr auxt = nullptr) {
    RuleApp app;
    app.rule = r;
    app.ctx = p;
    app.aux_formula = std::move(auxf);
    app.aux_term = std::move(auxt);
    push(std::move(app), {Sequent{replace_one(ant, p, newsub), suc}});
  };

  // Axioms.
  if (ant->tag == STag::FAtom && feq(ant->f, suc)) {
    RuleApp app;
    app.rule = RuleId::init;
    app.aux_formula = suc;
    push(std::move(app), {});
  }
  if (ant->tag == STag::Eps && suc->tag == FTag::One) push({RuleId::oneR, {}, {}, {}, {}}, {});
  if (suc->tag == FTag::Top) {
    RuleApp app;
    app.rule = RuleId::topR;
    app.aux_term = ant;
    push(std::move(app), {});
  }

  std::vector<Position> poss = all_positions(ant);
  for (const auto& p : poss) {
    StructPtr sub = subterm_at(ant, p);
    if (sub->tag == STag::FAtom && sub->f->tag == FTag::Bot) {
      RuleApp app;
      app.rule = RuleId::botL;
      app.ctx = p;
      app.aux_formula = suc;
      app.aux_term = ant;
      push(std::move(app), {});
    }
  }

  // Left logical rules.
  for (const auto& p : poss) {
    StructPtr sub = subterm_at(ant, p);
    switch (sub->tag) {
      case STag::FAtom: {
        const FormulaPtr& f = sub->f;
        if (f->tag == FTag::Prod)
          unary(RuleId::prodL, p, scomma(satom(f->l), satom(f->r)));
        if (f->tag == FTag::Meet)
          unary(RuleId::meetL, p, scap(satom(f->l), satom(f->r)));
        if (f->tag == FTag::Dia)
          unary(RuleId::diaL, p, sangle(satom(f->l)));
        if (f->tag == FTag::One)
          unary(RuleId::oneL, p, seps());
        if (f->tag == FTag::Join) {
          RuleApp app;
          app.rule = RuleId::joinL;
          app.ctx = p;
          push(std::move(app), {Sequent{replace_one(ant, p, satom(f->l)), suc},
                                Sequent{replace_one(ant, p, satom(f->r)), suc}});
        }
        break;
      }
      case STag::Angle:
        if (sub->l->tag == STag::FAtom && sub->l->f->tag == FTag::Box)
          unary(RuleId::bboxL, p, satom(sub->l->f->l));
        break;
      default: break;
    }
  }

  // Right rules (root only).
  switch (suc->tag) {
    case FTag::Meet:
      push({RuleId::meetR, {}, {}, {}, {}},
           {Sequent{ant, suc->l}, Sequent{ant, suc->r}});
      break;
    case FTag::Join: {
      RuleApp a1;
      a1.rule = RuleId::joinR1;
      a1.aux_formula = suc->r;
      push(std::move(a1), {Sequent{ant, suc->l}});
      RuleApp a2;
      a2.rule = RuleId::joinR2;
      a2.aux_formula = suc->l;
      push(std::move(a2), {Sequent{ant, suc->r}});
      break;
    }
    case FTag::Box:
      push({RuleId::bboxR, {}, {}, {}, {}}, {Sequent{sangle(ant), suc->l}});
      break;
    case FTag::Dia:
      if (ant->tag == STag::Angle)
        push({RuleId::diaR, {}, {}, {}, {}}, {Sequent{ant->l, suc->l}});
      break;
    case FTag::Prod:
      if (ant->tag == STag::Comma)
        push({RuleId::prodR, {}, {}, {}, {}},
             {Sequent{ant->l, suc->l}, Sequent{ant->r, suc->r}});
      if (suc->r->tag == FTag::One)
        push({RuleId::prodOne, {}, {}, {}, {}}, {Sequent{ant, suc->l}});
      if (suc->l->tag == FTag::One)
        push({RuleId::oneProd, {}, {}, {}, {}}, {Sequent{ant, suc->r}});
      break;
    default: break;
  }

  // Structural rules.
  for (const auto& p : poss) {
    StructPtr sub = subterm_at(ant, p);
    switch (sub->tag) {
      case STag::Comma:
        if (sub->r->tag == STag::Eps) unary(RuleId::oEps, p, sub->l);
        if (sub->l->tag == STag::Eps) unary(RuleId::epsO, p, sub->r);
        if (sub->r->tag == STag::Comma)
          unary(RuleId::oA_l2r, p, scomma(scomma(sub->l, sub->r->l), sub->r->r));
        if (sub->l->tag == STag::Comma)
          unary(RuleId::oA_r2l, p, scomma(sub->l->l, scomma(sub->l->r, sub->r)));
        break;
      case STag::Cap:
        if (sub->r->tag == STag::Cap)
          unary(RuleId::capA_l2r, p, scap(scap(sub->l, sub->r->l), sub->r->r));
        if (sub->l->tag == STag::Cap)
          unary(RuleId::capA_r2l, p, scap(sub->l->l, scap(sub->l->r, sub->r)));
        unary(RuleId::capE, p, scap(sub->r, sub->l), nullptr, nullptr);
        // Backward capW1/capW-right: drop one side of the cap.
        {
          RuleApp a;
          a.rule = RuleId::capW1;
          a.ctx = p;
          a.aux_term = sub->r;
          push(std::move(a), {Sequent{replace_one(ant, p, sub->l), suc}});
        }
        break;
      case STag::Angle:
        if (sub->l->tag == STag::Comma)
          unary(RuleId::K, p, scomma(sangle(sub->l->l), sangle(sub->l->r)));
        if (sub->l->tag == STag::Angle) unary(RuleId::Four, p, sub->l);
        break;
      default: break;
    }
    if (opt.allow_T) {
      bool focused = !opt.t_focus || sub->tag == STag::Comma || sub->tag == STag::Angle ||
                     (sub->tag == STag::FAtom && sub->f->tag == FTag::Box) ||
                     (p.empty() && suc->tag == FTag::Dia);
      if (focused) unary(RuleId::T, p, sangle(sub));
    }
    if (opt.allow_capC) unary(RuleId::capC, p, scap(sub, sub));
  }

  return out;
}

// -------------------------------------------------------- derived-rule macros

// Each expands to primitive rules; the returned subtree proves the derived
// rule's conclusion from the given premise derivation(s).

inline Deriv d_init(const FormulaPtr& f) {
  RuleApp app;
  app.rule = RuleId::init;
  app.aux_formula = f;
  return mk(std::move(app), {});
}

inline Deriv d_unary(RuleId r, Position ctx, Deriv p, FormulaPtr auxf = nullptr,
                     StructPtr auxt = nullptr) {
  RuleApp app;
  app.rule = r;
  app.ctx = std::move(ctx);
  app.aux_formula = std::move(auxf);
  app.aux_term = std::move(auxt);
  return mk(std::move(app), {std::move(p)});
}

inline Deriv d_binary(RuleId r, Position ctx, Deriv p1, Deriv p2,
                      FormulaPtr auxf = nullptr) {
  RuleApp app;
  app.rule = r;
  app.ctx = std::move(ctx);
  app.aux_formula = std::move(auxf);
  return mk(std::move(app), {std::move(p1), std::move(p2)});
}

// capW2: weaken on the left of the cap (capW1 then capE).
inline Deriv d_capW2(Position ctx, Deriv p, StructPtr added_left) {
  Deriv w = d_unary(RuleId::capW1, ctx, std::move(p), nullptr, std::move(added_left));
  return d_unary(RuleId::capE, ctx, std::move(w));
}

// meetL1: Gamma{f1} => Gamma{f1 & f2}.
inline Deriv d_meetL1(Position ctx, Deriv p, FormulaPtr f2) {
  Deriv w = d_unary(RuleId::capW1, ctx, std::move(p), nullptr, satom(std::move(f2)));
  return d_unary(RuleId::meetL, ctx, std::move(w));
}

// meetL2: Gamma{f2} => Gamma{f1 & f2}.
inline Deriv d_meetL2(Position ctx, Deriv p, FormulaPtr f1) {
  Deriv w = d_capW2(ctx, std::move(p), satom(std::move(f1)));
  return d_unary(RuleId::meetL, ctx, std::move(w));
}

// prodIso: from f1 |- g1 and f2 |- g2 derive f1*f2 |- g1*g2 (atomic antecedents).
inline Deriv d_prodIso(Deriv p1, Deriv p2) {
  Deriv r = d_binary(RuleId::prodR, {}, std::move(p1), std::move(p2));
  return d_unary(RuleId::prodL, {}, std::move(r));
}

inline Deriv d_meetIso(Deriv p1, Deriv p2) {
  FormulaPtr f1 = p1->conclusion.ant->f;
  FormulaPtr f2 = p2->conclusion.ant->f;
  Deriv l = d_meetL1({}, std::move(p1), f2);
  Deriv r = d_meetL2({}, std::move(p2), f1);
  return d_binary(RuleId::meetR, {}, std::move(l), std::move(r));
}

inline Deriv d_joinIso(Deriv p1, Deriv p2) {
  FormulaPtr g1 = p1->conclusion.suc;
  FormulaPtr g2 = p2->conclusion.suc;
  Deriv l = d_unary(RuleId::joinR1, {}, std::move(p1), g2);
  Deriv r = d_unary(RuleId::joinR2, {}, std::move(p2), g1);
  return d_binary(RuleId::joinL, {}, std::move(l), std::move(r));
}

inline Deriv d_diaIso(Deriv p) {
  Deriv r = d_unary(RuleId::diaR, {}, std::move(p));
  return d_unary(RuleId::diaL, {}, std::move(r));
}

inline Deriv d_boxIso(Deriv p) {
  Deriv l = d_unary(RuleId::bboxL, {}, std::move(p));
  return d_unary(RuleId::bboxR, {}, std::move(l));
}

// ------------------------------------------------------------------- corpus

struct NamedDerivation {
  std::string name;
  Deriv d;
};

// Hand-built derivations of the closure axioms (both directions of the
// equational ones), the weak-co-nucleus laws and the two lattice
// distributivity sequents.
inline std::vector<NamedDerivation> builtin_corpus() {
  using R = RuleId;
  FormulaPtr x = fvar("x"), y = fvar("y"), z = fvar("z");
  std::vector<NamedDerivation> out;
  auto add = [&](std::string name, Deriv d) { out.push_back({std::move(name), std::move(d)}); };

  // x |- dia x
  add("ax1", d_unary(R::T, {}, d_unary(R::diaR, {}, d_init(x))));

  // dia dia x |- dia x
  {
    Deriv d = d_unary(R::diaR, {}, d_init(x));         // <x> |- dia x
    d = d_unary(R::Four, {}, d);                       // <<x>> |- dia x
    d = d_unary(R::diaL, {0}, d);                      // <dia x> |- dia x
    add("ax2a", d_unary(R::diaL, {}, d));
  }

  // dia x |- dia dia x
  {
    Deriv d = d_unary(R::diaR, {}, d_init(x));         // <x> |- dia x
    d = d_unary(R::T, {}, d);                          // x |- dia x
    d = d_unary(R::diaR, {}, d);                       // <x> |- dia dia x
    add("ax2b", d_unary(R::diaL, {}, d));
  }

  // dia (x | y) |- (dia x | dia y)
  {
    Deriv b1 = d_unary(R::joinR1, {}, d_unary(R::diaR, {}, d_init(x)), fdia(y));
    Deriv b2 = d_unary(R::joinR2, {}, d_unary(R::diaR, {}, d_init(y)), fdia(x));
    Deriv j = d_binary(R::joinL, {0}, b1, b2);         // <x | y> |- dia x | dia y
    add("ax3a", d_unary(R::diaL, {}, j));
  }

  // (dia x | dia y) |- dia (x | y)
  {
    Deriv b1 = d_unary(R::joinR1, {}, d_init(x), y);   // x |- x | y
    b1 = d_unary(R::diaL, {}, d_unary(R::diaR, {}, b1));
    Deriv b2 = d_unary(R::joinR2, {}, d_init(y), x);
    b2 = d_unary(R::diaL, {}, d_unary(R::diaR, {}, b2));
    add("ax3b", d_binary(R::joinL, {}, b1, b2));
  }

  // box (x & y) |- (box x & box y)
  {
    Deriv b1 = d_meetL1({}, d_init(x), y);             // x & y |- x
    b1 = d_unary(R::bboxR, {}, d_unary(R::bboxL, {}, b1));
    Deriv b2 = d_meetL2({}, d_init(y), x);             // x & y |- y
    b2 = d_unary(R::bboxR, {}, d_unary(R::bboxL, {}, b2));
    add("ax4a", d_binary(R::meetR, {}, b1, b2));
  }

  // (box x & box y) |- box (x & y)
  {
    Deriv b1 = d_unary(R::bboxL, {}, d_init(x));       // <box x> |- x
    b1 = d_meetL1({0}, b1, fbox(y));                   // <box x & box y> |- x
    Deriv b2 = d_unary(R::bboxL, {}, d_init(y));
    b2 = d_meetL2({0}, b2, fbox(x));                   // <box x & box y> |- y
    Deriv m = d_binary(R::meetR, {}, b1, b2);
    add("ax4b", d_unary(R::bboxR, {}, m));
  }

  // dia (x * y) |- (dia x * dia y)
  {
    Deriv l = d_unary(R::diaR, {}, d_init(x));
    Deriv r = d_unary(R::diaR, {}, d_init(y));
    Deriv d = d_binary(R::prodR, {}, l, r);            // <x> o <y> |- dia x * dia y
    d = d_unary(R::K, {}, d);                          // <x o y> |- ...
    d = d_unary(R::prodL, {0}, d);                     // <x * y> |- ...
    add("ax5", d_unary(R::diaL, {}, d));
  }

  // dia box x |- x
  {
    Deriv d = d_unary(R::bboxL, {}, d_init(x));        // <box x> |- x
    add("ax6", d_unary(R::diaL, {}, d));
  }

  // x |- box dia x
  add("ax7", d_unary(R::bboxR, {}, d_unary(R::diaR, {}, d_init(x))));

  // half: <box f> |- box f (via Four)
  auto boxed_half = [&](const FormulaPtr& f) {
    Deriv d = d_unary(R::bboxL, {}, d_init(f));        // <box f> |- f
    d = d_unary(R::Four, {}, d);                       // <<box f>> |- f
    return d_unary(R::bboxR, {}, d);                   // <box f> |- box f
  };

  // box (box x * box y) |- (box x * box y)
  {
    Deriv d = d_binary(R::prodR, {}, boxed_half(x), boxed_half(y));
    d = d_unary(R::K, {}, d);                          // <box x o box y> |- box x * box y
    d = d_unary(R::prodL, {0}, d);                     // <box x * box y> |- ...
    d = d_unary(R::bboxL, {0}, d);                     // <<box (box x * box y)>> |- ...
    d = d_unary(R::T, {0}, d);                         // <box (box x * box y)> |- ...
    add("conuc1", d_unary(R::T, {}, d));
  }

  // (box x * box y) |- box (box x * box y)
  {
    Deriv d = d_binary(R::prodR, {}, boxed_half(x), boxed_half(y));
    d = d_unary(R::K, {}, d);                          // <box x o box y> |- box x * box y
    d = d_unary(R::bboxR, {}, d);                      // box x o box y |- box (...)
    add("conuc2", d_unary(R::prodL, {}, d));
  }

  // (x & (y | z)) |- ((x & y) | (x & z))
  {
    auto cap_pair = [&](const FormulaPtr& a, const FormulaPtr& b) {
      // a n b |- a & b
      Deriv l = d_unary(R::capW1, {}, d_init(a), nullptr, satom(b));
      Deriv r = d_capW2({}, d_init(b), satom(a));
      return d_binary(R::meetR, {}, l, r);
    };
    Deriv b1 = d_unary(R::joinR1, {}, cap_pair(x, y), fmeet(x, z));
    Deriv b2 = d_unary(R::joinR2, {}, cap_pair(x, z), fmeet(x, y));
    Deriv j = d_binary(R::joinL, {1}, b1, b2);         // x n (y | z) |- ...
    add("dist1", d_unary(R::meetL, {}, j));
  }

  // ((x | y) & (x | z)) |- (x | (y & z))
  {
    FormulaPtr yz = fmeet(y, z);
    // P1: x n (x | z) |- x | (y & z)
    Deriv p1 = d_unary(R::joinR1, {}, d_init(x), yz);  // x |- x | (y & z)
    p1 = d_unary(R::capW1, {}, p1, nullptr, satom(fjoin(x, z)));
    // Q1: y n x |- x | (y & z)
    Deriv q1 = d_unary(R::joinR1, {}, d_init(x), yz);
    q1 = d_capW2({}, q1, satom(y));
    // Q2: y n z |- x | (y & z)
    Deriv qy = d_unary(R::capW1, {}, d_init(y), nullptr, satom(z));
    Deriv qz = d_capW2({}, d_init(z), satom(y));
    Deriv q2 = d_binary(R::meetR, {}, qy, qz);         // y n z |- y & z
    q2 = d_unary(R::joinR2, {}, q2, x);
    Deriv p2 = d_binary(R::joinL, {1}, q1, q2);        // y n (x | z) |- ...
    Deriv j = d_binary(R::joinL, {0}, p1, p2);         // (x | y) n (x | z) |- ...
    add("dist2", d_unary(R::meetL, {}, j));
  }

  return out;
}

}  // namespace lmc
