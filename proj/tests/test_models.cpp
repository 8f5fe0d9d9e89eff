#include <catch2/catch_amalgamated.hpp>

#include "lmc/models.hpp"
#include "lmc/syntax.hpp"

using namespace lmc;

namespace {
Assignment asg(std::initializer_list<std::pair<const std::string, std::size_t>> xs) {
  return Assignment(xs);
}
}  // namespace

TEST_CASE("truncated language model evaluates pointwise") {
  Model m = build_truncated_model("a", 2);  // words: eps, a, aa
  REQUIRE(m.size == 8);
  REQUIRE(m.one == 1);
  REQUIRE(m.elem_name(0b101) == "{eps,aa}");

  // {a} * {a} = {aa}; {a} * {aa} truncates away.
  REQUIRE(eval(m, parse_formula("(x * x)"), asg({{"x", 0b010}})) == 0b100);
  REQUIRE(eval(m, parse_formula("(x * y)"), asg({{"x", 0b010}, {"y", 0b100}})) == 0);
  // dia = prefix closure, box = prefix interior.
  REQUIRE(eval(m, parse_formula("dia x"), asg({{"x", 0b100}})) == 0b111);
  REQUIRE(eval(m, parse_formula("box x"), asg({{"x", 0b011}})) == 0b011);
  REQUIRE(eval(m, parse_formula("box x"), asg({{"x", 0b110}})) == 0);
  // Structural terms evaluate through their formula translation.
  REQUIRE(eval(m, parse_struct("(e o <x>)"), asg({{"x", 0b100}})) == 0b111);
  REQUIRE(m.leq(0b001, 0b011));
  REQUIRE_FALSE(m.leq(0b011, 0b001));

  REQUIRE_THROWS_AS(build_truncated_model("ab", 5), std::invalid_argument);
}

TEST_CASE("defective inputs to the powerset model are rejected") {
  // Non-associative table.
  FiniteMonoid bad;
  bad.n = 2;
  bad.unit = 0;
  bad.table = {{0, 1}, {0, 0}};  // 1*x not x: unit law broken
  REQUIRE(monoid_defect(bad).has_value());
  REQUIRE_THROWS_AS(build_preorder_model(bad, discrete_preorder(2)), std::invalid_argument);

  // Non-transitive relation.
  Preorder nt = discrete_preorder(3);
  nt[0][1] = nt[1][2] = true;
  REQUIRE(preorder_defect(nt, 3).has_value());
  REQUIRE_THROWS_AS(build_preorder_model(truncated_word_monoid("a", 2), nt),
                    std::invalid_argument);

  // Preorder without the decomposition property: a below aa, nothing else.
  FiniteMonoid w = truncated_word_monoid("a", 2);
  Preorder r = discrete_preorder(3);
  r[1][2] = true;
  auto d = rdp_defect(w, r);
  REQUIRE(d.has_value());
  REQUIRE(w.name_of(d->b) == "a");
  REQUIRE_THROWS_AS(build_preorder_model(w, r), std::invalid_argument);

  // The prefix preorder on the same monoid does decompose.
  REQUIRE(check_rdp(w, prefix_preorder(w)));
  REQUIRE_NOTHROW(build_preorder_model(w, prefix_preorder(w)));
}

TEST_CASE("all bundled models satisfy the full law battery") {
  for (const Model& m : {build_truncated_model("a", 2), build_truncated_model("ab", 1),
                         z2_total_model(), z2_discrete_model(),
                         build_preorder_model(truncated_word_monoid("a", 2),
                                              prefix_preorder(truncated_word_monoid("a", 2)),
                                              "word-prefix")}) {
    INFO(m.name);
    for (const LawOutcome& lo : verify_axioms(m)) {
      INFO(lo.name << ": " << lo.statement << " at " << lo.outcome.counterexample);
      REQUIRE(lo.outcome.holds);
      REQUIRE(lo.outcome.exhaustive);
    }
    REQUIRE_FALSE(residuation_defect(m).has_value());
  }
}

TEST_CASE("law checking finds counterexamples in defective models") {
  Model m = build_truncated_model("a", 2);
  Model bad = m;
  bad.box = [](std::size_t a) { return a; };  // no longer the prefix interior
  REQUIRE(residuation_defect(bad).has_value());
  bool c6_fails = false;
  for (const LawOutcome& lo : verify_axioms(bad))
    if (lo.name == std::string("c6_counit") && !lo.outcome.holds) c6_fails = true;
  REQUIRE(c6_fails);

  CheckOutcome o = check_inequation(m, Inequation{parse_formula("dia x"), parse_formula("x")});
  REQUIRE_FALSE(o.holds);
  REQUIRE(o.exhaustive);
  REQUIRE_FALSE(o.counterexample.empty());
}

TEST_CASE("non-theorems fail on the two-element group models") {
  Model mt = z2_total_model();
  REQUIRE_FALSE(check_inequation(mt, Inequation{parse_formula("dia 1"),
                                                parse_formula("1")}).holds);
  REQUIRE_FALSE(check_inequation(mt, Inequation{parse_formula("box x"),
                                                parse_formula("(box x * box 1)")}).holds);
  REQUIRE_FALSE(check_inequation(mt, Inequation{parse_formula("box x"),
                                                parse_formula("(box 1 * box x)")}).holds);
  // The discrete variant has trivial modalities, so those laws hold there.
  Model md = z2_discrete_model();
  REQUIRE(check_inequation(md, Inequation{parse_formula("dia 1"),
                                          parse_formula("1")}).holds);
}

TEST_CASE("instance soundness separates sound from unsound rule instances") {
  Model m = build_truncated_model("a", 1);
  Sequent prem = parse_sequent("x |- y");
  REQUIRE(instance_sound(m, {prem}, parse_sequent("<x> |- dia y")).ok);
  SoundnessOutcome bad = instance_sound(m, {prem}, parse_sequent("y |- x"));
  REQUIRE_FALSE(bad.ok);
  REQUIRE_FALSE(bad.detail.empty());
}

TEST_CASE("rule soundness sweep on a small goal set") {
  std::vector<Sequent> goals = {
      parse_sequent("x |- x"),
      parse_sequent("(x o y) |- (x * y)"),
      parse_sequent("<(x n e)> |- dia x"),
      parse_sequent("<box x> |- x"),
      parse_sequent("((x | y) o e) |- dia (x | y)"),
  };
  Model m = build_truncated_model("a", 1);
  RuleSoundnessReport rep = check_rule_soundness(m, goals);
  INFO(rep.detail);
  REQUIRE(rep.ok);
  REQUIRE(rep.goals == goals.size());
  REQUIRE(rep.instances > 50);

  // A tampered modality is caught by the sweep.
  Model bad = m;
  bad.box = [](std::size_t a) { return a; };
  RuleSoundnessReport brep = check_rule_soundness(bad, goals);
  REQUIRE_FALSE(brep.ok);
  REQUIRE(brep.detail.find("bboxL") != std::string::npos);
}

TEST_CASE("the deterministic goal pool has the advertised shape") {
  std::vector<Sequent> pool = soundness_goal_pool();
  REQUIRE(pool.size() > 5000);
  // Spot-check membership and well-formedness.
  bool has_root = false;
  for (const Sequent& s : pool) {
    REQUIRE_NOTHROW(parse_sequent(render(s)));
    if (render(s) == "x |- (x * y)") has_root = true;
  }
  REQUIRE(has_root);
}

TEST_CASE("countermodel search refutes non-theorems") {
  CountermodelOptions opt;
  opt.max_monoid_size = 2;
  opt.max_trunc_L = 1;

  auto cm = countermodel_search(parse_sequent("x |- y"), opt);
  REQUIRE(cm.has_value());
  REQUIRE(cm->model_name.rfind("truncated", 0) == 0);  // found before monoid search

  for (const char* txt : {"dia 1 <= 1", "box x <= (box x * box 1)",
                          "box x <= (box 1 * box x)"}) {
    std::string s(txt);
    auto at = s.find("<=");
    Inequation e{parse_formula(s.substr(0, at)), parse_formula(s.substr(at + 2))};
    auto found = countermodel_search(e, opt);
    INFO(txt);
    REQUIRE(found.has_value());
    REQUIRE(found->model_name.rfind("powerset(n=2", 0) == 0);
  }

  REQUIRE_FALSE(countermodel_search(parse_sequent("x |- dia x"), opt).has_value());
  REQUIRE_FALSE(countermodel_search(parse_sequent("(box x o box y) |- box (x * y)"), opt)
                    .has_value());
}
