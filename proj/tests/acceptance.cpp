// Acceptance gate: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lmc/gen.hpp"
#include "lmc/io.hpp"
#include "lmc/models.hpp"
#include "lmc/search.hpp"
#include "lmc/transform.hpp"

using namespace lmc;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// 1. The ten sequent forms of the closure axioms: bundled derivations check
//    out and proof search re-finds each under the default budget in < 5 s.
Criterion criterion1() {
  Criterion c;
  auto t0 = Clock::now();
  std::vector<Sequent> goals;
  for (const Law& law : axiom_laws()) {
    if (std::string(law.name).rfind("c", 0) != 0) continue;
    FormulaPtr l = parse_formula(law.lhs), r = parse_formula(law.rhs);
    std::vector<Sequent> fs =
        law.equation ? flat(Equation{l, r}) : flat(Inequation{l, r});
    goals.insert(goals.end(), fs.begin(), fs.end());
  }
  if (goals.size() != 10) c.fail("expected 10 axiom sequents, got " +
                                 std::to_string(goals.size()));

  auto corpus = builtin_corpus();
  for (const Sequent& g : goals) {
    bool bundled = false;
    for (const auto& nd : corpus)
      if (seq_eq(nd.d->conclusion, g) && check_derivation(nd.d).ok) bundled = true;
    if (!bundled) c.fail("no checker-valid bundled derivation for " + render(g));
    auto d = prove(g);
    if (!d || !check_derivation(*d).ok || !seq_eq((*d)->conclusion, g))
      c.fail("prove failed on " + render(g));
  }
  double dt = seconds_since(t0);
  if (dt >= 5.0) c.fail("took " + std::to_string(dt) + " s (limit 5)");
  return c;
}

// 2. Derived-law battery: the fifteen consequence laws plus both
//    distributivity sequents are provable and semantically valid on the
//    exhaustive truncated model and the group-based total-preorder model.
Criterion criterion2() {
  Criterion c;
  Model trunc = build_truncated_model("a", 2);
  Model z2 = z2_total_model();

  std::vector<Sequent> goals;
  for (const Law& law : derived_laws()) {
    FormulaPtr l = parse_formula(law.lhs), r = parse_formula(law.rhs);
    std::vector<Sequent> fs =
        law.equation ? flat(Equation{l, r}) : flat(Inequation{l, r});
    goals.insert(goals.end(), fs.begin(), fs.end());
  }
  goals.push_back(parse_sequent("(x & (y | z)) |- ((x & y) | (x & z))"));
  goals.push_back(parse_sequent("((x | y) & (x | z)) |- (x | (y & z))"));

  for (const Sequent& g : goals) {
    auto d = prove(g);
    if (!d || !check_derivation(*d).ok) {
      c.fail("prove failed on " + render(g));
      continue;
    }
    CheckOutcome a = check_sequent(trunc, g);
    if (!a.holds || !a.exhaustive)
      c.fail("not exhaustively valid on " + trunc.name + ": " + render(g));
    if (!check_sequent(z2, g).holds)
      c.fail("not valid on " + z2.name + ": " + render(g));
  }
  return c;
}

// 3. Rule soundness: exhaustive goal-pool sweep on the 8-element truncated
//    model plus 1000 seeded random goals on the two-letter model, < 60 s.
Criterion criterion3() {
  Criterion c;
  auto t0 = Clock::now();

  auto sweep = [&](const Model& m, const std::vector<Sequent>& goals,
                   const CheckOptions& opt) {
    const std::size_t jobs = 4;
    std::vector<RuleSoundnessReport> reports(jobs);
    std::vector<std::thread> workers;
    std::size_t chunk = (goals.size() + jobs - 1) / jobs;
    for (std::size_t j = 0; j < jobs; ++j)
      workers.emplace_back([&, j] {
        std::size_t lo = j * chunk, hi = std::min(goals.size(), lo + chunk);
        if (lo < hi)
          reports[j] = check_rule_soundness(
              m, std::vector<Sequent>(goals.begin() + static_cast<long>(lo),
                                      goals.begin() + static_cast<long>(hi)),
              opt);
      });
    for (auto& w : workers) w.join();
    for (const auto& r : reports)
      if (!r.ok) c.fail("unsound on " + m.name + ": " + r.detail);
  };

  Model small = build_truncated_model("a", 2);
  sweep(small, soundness_goal_pool(), CheckOptions{});

  Model big = build_truncated_model("ab", 2);
  Rng rng(20260823);
  std::vector<std::string> vars = {"x", "y"};
  std::vector<Sequent> random_goals;
  for (int i = 0; i < 1000; ++i) random_goals.push_back(random_sequent(rng, 3, vars));
  CheckOptions sampled;
  sampled.exhaustive_budget = 4096;
  sampled.samples = 256;
  sampled.seed = 20260823;
  sweep(big, random_goals, sampled);

  double dt = seconds_since(t0);
  if (dt >= 60.0) c.fail("took " + std::to_string(dt) + " s (limit 60)");
  return c;
}

// 4. Cut/mix elimination on >= 100 generated compositions: outputs are
//    checker-valid, cut/mix-free, conclude the identical endsequent; every
//    intermediate step is rank-checked inside the eliminator (violations and
//    unmatched cases throw, failing the criterion).
Criterion criterion4() {
  Criterion c;
  Rng rng(4);
  std::vector<Deriv> pool;
  for (const auto& nd : builtin_corpus()) pool.push_back(nd.d);

  std::size_t done = 0;
  for (int iter = 0; iter < 4000 && done < 120; ++iter) {
    if (rng.upto(3) == 0) {
      Deriv grown = d_binary(RuleId::prodR, {}, pool[rng.upto(pool.size())],
                             pool[rng.upto(pool.size())]);
      if (node_count(grown) < 80) pool.push_back(grown);
    }
    Deriv b = pool[rng.upto(pool.size())];
    std::vector<Deriv> lefts;
    for (const Deriv& a : pool)
      if (!occurrences_of(b->conclusion.ant, a->conclusion.suc).empty())
        lefts.push_back(a);
    if (lefts.empty()) continue;
    Deriv a = lefts[rng.upto(lefts.size())];
    std::vector<Position> all = occurrences_of(b->conclusion.ant, a->conclusion.suc);

    RuleApp app;
    Deriv cand;
    if (rng.coin()) {
      app.rule = RuleId::cut;
      app.ctx = all[rng.upto(all.size())];
      cand = mk(std::move(app), {a, b});
      cand = cut_as_mix(cand);
    } else {
      app.rule = RuleId::mix;
      for (const Position& p : all)
        if (app.occ.empty() || rng.coin()) app.occ.push_back(p);
      cand = mk(std::move(app), {a, b});
    }

    try {
      Deriv e = eliminate_mix(cand);
      if (!check_derivation(e).ok) c.fail("result fails the checker");
      if (!seq_eq(e->conclusion, cand->conclusion)) c.fail("endsequent changed");
      if (uses_rule(e, RuleId::cut) || uses_rule(e, RuleId::mix))
        c.fail("cut/mix left behind");
    } catch (const transform_error& e) {
      c.fail(std::string("eliminator threw: ") + e.what());
    }
    if (node_count(cand) < 64) pool.push_back(cand);
    ++done;
  }
  if (done < 100) c.fail("only generated " + std::to_string(done) + " compositions");
  return c;
}

// 5. Non-derivability: search exhausts on the four known non-theorems; the
//    first three get a size-2 total-preorder countermodel within 1 s each.
Criterion criterion5() {
  Criterion c;
  std::vector<std::string> non = {
      "dia 1 |- 1", "box x |- (box x * box 1)", "box x |- (box 1 * box x)",
      "dia (x * y) |- (dia x | (x * dia y))"};
  for (const std::string& txt : non)
    if (prove(parse_sequent(txt))) c.fail("proved non-theorem " + txt);

  for (std::size_t i = 0; i < 3; ++i) {
    auto t0 = Clock::now();
    auto cm = countermodel_search(parse_sequent(non[i]));
    double dt = seconds_since(t0);
    if (!cm)
      c.fail("no countermodel for " + non[i]);
    else if (cm->model_name.find("powerset(n=2") == std::string::npos ||
             cm->model_name.find("rel=1111") == std::string::npos)
      c.fail("unexpected countermodel for " + non[i] + ": " + cm->model_name);
    if (dt >= 1.0) c.fail("countermodel for " + non[i] + " took " +
                          std::to_string(dt) + " s");
  }
  return c;
}

// 6. Word decomposition: 10,000 seeded triples all decompose; the all-splits
//    oracle agrees with the canonical choice on 1,000 of them.
Criterion criterion6() {
  Criterion c;
  Rng rng(6);
  for (int i = 0; i < 10000; ++i) {
    std::string u = random_word(rng, "ab", 12);
    std::string v = random_word(rng, "ab", 12);
    std::string uv = u + v;
    std::string w = uv.substr(0, rng.upto(uv.size() + 1));
    auto split = rdp_decompose(u, v, w);
    if (!split || split->first + split->second != w || !is_prefix(split->first, u) ||
        !is_prefix(split->second, v)) {
      c.fail("bad decomposition for u=" + u + " v=" + v + " w=" + w);
      continue;
    }
    if (i < 1000) {
      auto all = rdp_all_splits(u, v, w);
      if (all.empty() || all.back() != *split)
        c.fail("oracle disagrees at u=" + u + " v=" + v + " w=" + w);
    }
  }
  return c;
}

// 7. Model validity: the full law battery and the residuation equivalence
//    hold on every bundled model.
Criterion criterion7() {
  Criterion c;
  std::vector<Model> models;
  for (std::size_t L = 0; L <= 3; ++L) models.push_back(build_truncated_model("a", L));
  for (std::size_t L = 0; L <= 2; ++L) models.push_back(build_truncated_model("ab", L));
  models.push_back(z2_total_model());
  models.push_back(z2_discrete_model());

  for (const Model& m : models) {
    for (const LawOutcome& lo : verify_axioms(m))
      if (!lo.outcome.holds)
        c.fail(lo.name + std::string(" fails on ") + m.name + " at " +
               lo.outcome.counterexample);
    if (auto d = residuation_defect(m))
      c.fail("residuation fails on " + m.name + " at " + *d);
  }
  return c;
}

// 8. Traces: strict rooted traces of the protocol up to length 8 satisfy both
//    policies; their set is a safety property; the interior-based safety
//    decider agrees with the closure-based one on 1,000 random subsets; the
//    four example traces behave as documented.
Criterion criterion8() {
  Criterion c;
  Lts l = running_example();

  TraceSet strict = valid_traces(l, 8, /*rooted=*/true, /*strict=*/true);
  for (const Trace& w : strict) {
    if (!policy_p1(w)) c.fail("P1 fails on " + render(w));
    if (!policy_p2(w)) c.fail("P2 fails on " + render(w));
  }
  TraceSet universe = valid_traces(l, 8, true, false);
  if (!classify(strict, universe).safety) c.fail("strict trace set is not prefix-closed");
  if (!safety_via_box(strict)) c.fail("interior-based safety disagrees on the trace set");

  Rng rng(8);
  for (int i = 0; i < 1000; ++i) {
    TraceSet p = random_trace_subset(rng, l, 3, rng.upto(6));
    if (classify(p, universe).safety != safety_via_box(p)) {
      c.fail("safety deciders disagree on " + std::to_string(p.size()) + " traces");
      break;
    }
  }

  Trace v1 = parse_trace("(s0,conn)(s1,snd)(s2,ack)(s4,end)");
  Trace cyc = parse_trace("(s1,snd)(s2,nack)(s3,end)(s0,conn)");
  Trace v2;
  for (int i = 0; i < 3; ++i) v2.insert(v2.end(), cyc.begin(), cyc.end());
  if (!is_valid(l, v1) || !is_valid(l, v2)) c.fail("a documented valid trace fails");
  if (is_valid(l, parse_trace("(s1,snd)(s2,ack)(s2,nack)")) ||
      is_valid(l, parse_trace("(s0,conn)(s0,conn)")))
    c.fail("a documented invalid trace validates");
  return c;
}

// 9. Integer endomorphism witnesses on [-100, 100].
Criterion criterion9() {
  Criterion c;
  EndzReport r = endz_witness_check(-100, 100);
  if (!r.ok) c.fail(r.detail);
  return c;
}

// 10. Round trips: parse/render identity on 10,000 random terms, the product
//     translation is a homomorphism on 10,000 structural terms, and the
//     cut->mix->cut round trip preserves endsequent and validity.
Criterion criterion10() {
  Criterion c;
  Rng rng(10);
  std::vector<std::string> vars = {"x", "y", "z"};
  for (int i = 0; i < 10000; ++i) {
    FormulaPtr f = random_formula(rng, 4, vars);
    if (!feq(parse_formula(render(f)), f)) c.fail("formula round trip: " + render(f));
    StructPtr t = random_struct(rng, 4, vars);
    if (!steq(parse_struct(render(t)), t)) c.fail("struct round trip: " + render(t));
  }
  for (int i = 0; i < 10000; ++i) {
    StructPtr a = random_struct(rng, 3, vars);
    StructPtr b = random_struct(rng, 3, vars);
    if (!feq(natural(scomma(a, b)), fprod(natural(a), natural(b))) ||
        !feq(natural(scap(a, b)), fmeet(natural(a), natural(b))) ||
        !feq(natural(sangle(a)), fdia(natural(a))))
      c.fail("translation homomorphism: " + render(a) + " / " + render(b));
  }

  // Cut <-> mix round trip over compositions of the bundled corpus.
  auto corpus = builtin_corpus();
  Model m = build_truncated_model("a", 2);
  for (const auto& na : corpus)
    for (const auto& nb : corpus) {
      auto occ = occurrences_of(nb.d->conclusion.ant, na.d->conclusion.suc);
      if (occ.empty()) continue;
      RuleApp app;
      app.rule = RuleId::cut;
      app.ctx = occ[0];
      Deriv cut = mk(std::move(app), {na.d, nb.d});
      Deriv back = mix_as_cuts(cut_as_mix(cut));
      if (!seq_eq(back->conclusion, cut->conclusion))
        c.fail("round trip changed endsequent for " + na.name + "/" + nb.name);
      if (!check_derivation(back).ok)
        c.fail("round trip result invalid for " + na.name + "/" + nb.name);
      if (!check_sequent(m, back->conclusion).holds)
        c.fail("round trip endsequent not valid on " + m.name);
    }
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Criterion (*run)();
  };
  const Entry entries[] = {
      {"1 axiom corpus proved and re-found", criterion1},
      {"2 derived-law battery provable and valid", criterion2},
      {"3 rule soundness sweeps", criterion3},
      {"4 cut/mix elimination on generated corpus", criterion4},
      {"5 non-derivability and countermodels", criterion5},
      {"6 word decomposition property", criterion6},
      {"7 law battery on all bundled models", criterion7},
      {"8 trace policies and safety deciders", criterion8},
      {"9 integer endomorphism witnesses", criterion9},
      {"10 round-trip properties", criterion10},
  };

  int failures = 0;
  for (const Entry& e : entries) {
    auto t0 = Clock::now();
    Criterion c;
    try {
      c = e.run();
    } catch (const std::exception& ex) {
      c.fail(std::string("exception: ") + ex.what());
    }
    std::ostringstream line;
    line << "criterion " << e.name << ": " << (c.ok ? "PASS" : "FAIL");
    if (!c.ok) line << " (" << c.detail << ")";
    line << " [" << std::fixed << std::setprecision(1) << seconds_since(t0) << "s]";
    std::cout << line.str() << std::endl;
    failures += c.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
