#include <catch2/catch_amalgamated.hpp>

#include "lmc/gen.hpp"
#include "lmc/syntax.hpp"

using namespace lmc;

TEST_CASE("parsing builds the expected trees") {
  Sequent s = parse_sequent("((x & y) n z) |- top");
  REQUIRE(s.ant->tag == STag::Cap);
  // The conjunction is a single atomic leaf of the structural term.
  REQUIRE(s.ant->l->tag == STag::FAtom);
  REQUIRE(s.ant->l->f->tag == FTag::Meet);
  REQUIRE(s.ant->r->tag == STag::FAtom);
  REQUIRE(s.ant->r->f->var == "z");
  REQUIRE(s.suc->tag == FTag::Top);

  StructPtr t = parse_struct("<(e o (x * 1))>");
  REQUIRE(t->tag == STag::Angle);
  REQUIRE(t->l->tag == STag::Comma);
  REQUIRE(t->l->l->tag == STag::Eps);
  REQUIRE(t->l->r->tag == STag::FAtom);
  REQUIRE(t->l->r->f->tag == FTag::Prod);

  REQUIRE(feq(parse_formula("dia box bot"), fdia(fbox(fbot()))));
  REQUIRE(feq(parse_formula("(x * (y | z))"), fprod(fvar("x"), fjoin(fvar("y"), fvar("z")))));
}

TEST_CASE("parse errors carry positions") {
  REQUIRE_THROWS_AS(parse_formula("(x &"), parse_error);
  REQUIRE_THROWS_AS(parse_formula("e"), parse_error);      // reserved for structs
  REQUIRE_THROWS_AS(parse_formula("x y"), parse_error);    // trailing input
  REQUIRE_THROWS_AS(parse_struct("(x o"), parse_error);
  REQUIRE_THROWS_AS(parse_sequent("x |-"), parse_error);
  REQUIRE_THROWS_AS(parse_sequent("x top"), parse_error);
}

TEST_CASE("rendering is the parser's inverse on fixed inputs") {
  for (const char* txt : {"x", "1", "bot", "top", "(x * y)", "(x & (y | z))",
                          "dia box x", "box (x * 1)"}) {
    REQUIRE(render(parse_formula(txt)) == txt);
  }
  for (const char* txt : {"e", "x", "(x o e)", "(e n <x>)", "<<(x o (y n z))>>",
                          "(x * y)"}) {
    REQUIRE(render(parse_struct(txt)) == txt);
  }
  REQUIRE(render(parse_sequent("(x o y) |- (x * y)")) == "(x o y) |- (x * y)");
}

TEST_CASE("round trip on random terms") {
  Rng rng(20260823);
  std::vector<std::string> vars = {"x", "y", "z", "w_1"};
  for (int i = 0; i < 2000; ++i) {
    FormulaPtr f = random_formula(rng, 4, vars);
    REQUIRE(feq(parse_formula(render(f)), f));
    StructPtr t = random_struct(rng, 4, vars);
    REQUIRE(steq(parse_struct(render(t)), t));
  }
}

TEST_CASE("complexity measures") {
  REQUIRE(cp(parse_formula("x")) == 0);
  REQUIRE(cp(parse_formula("bot")) == 0);
  REQUIRE(cp(parse_formula("dia x")) == 1);
  REQUIRE(cp(parse_formula("(x * y)")) == 1);
  REQUIRE(cp(parse_formula("box (x & y)")) == 2);
  REQUIRE(cp(parse_formula("(dia x | box (y * 1))")) == 4);

  // Formulas are atomic leaves: structural complexity ignores their insides.
  REQUIRE(cp_s(parse_struct("(x & y)")) == 0);
  REQUIRE(cp_s(parse_struct("e")) == 0);
  REQUIRE(cp_s(parse_struct("(x n y)")) == 1);
  REQUIRE(cp_s(parse_struct("<((x * y) o e)>")) == 2);
}

TEST_CASE("positions, occurrences and replacement") {
  StructPtr t = parse_struct("((x n (x & y)) o <x>)");
  std::vector<Position> occ = occurrences_of(t, fvar("x"));
  // The conjunction leaf (x & y) is not an occurrence of x.
  REQUIRE(occ == std::vector<Position>{{0, 0}, {1, 0}});
  REQUIRE(occurrences_of(t, fmeet(fvar("x"), fvar("y"))) ==
          std::vector<Position>{{0, 1}});

  REQUIRE(steq(subterm_at(t, {0, 1}), satom(fmeet(fvar("x"), fvar("y")))));
  REQUIRE(render(replace_at(t, occ, seps())) == "((e n (x & y)) o <e>)");
  REQUIRE_THROWS_AS(replace_at(t, {{0}, {0, 0}}, seps()), position_error);
  REQUIRE_THROWS_AS(subterm_at(t, {5}), position_error);

  REQUIRE(all_positions(parse_struct("<x>")).size() == 2);
}

TEST_CASE("translations") {
  StructPtr t = parse_struct("((x o e) n <y>)");
  REQUIRE(render(natural(t)) == "((x * 1) & dia y)");

  Sequent s = parse_sequent("(x o y) |- (x * y)");
  Inequation e = sharp(s);
  REQUIRE(render(e) == "(x * y) <= (x * y)");

  Equation eq{fvar("x"), fdia(fvar("x"))};
  std::vector<Sequent> fs = flat(eq);
  REQUIRE(fs.size() == 2);
  REQUIRE(render(fs[0]) == "x |- dia x");
  REQUIRE(render(fs[1]) == "dia x |- x");
  REQUIRE(flat(Equation{fvar("x"), fvar("x")}).size() == 1);
  REQUIRE(flat(Inequation{fvar("x"), fvar("y")}).size() == 1);
}

TEST_CASE("natural is a homomorphism on random terms") {
  Rng rng(99);
  std::vector<std::string> vars = {"x", "y"};
  for (int i = 0; i < 2000; ++i) {
    StructPtr a = random_struct(rng, 3, vars);
    StructPtr b = random_struct(rng, 3, vars);
    REQUIRE(feq(natural(scomma(a, b)), fprod(natural(a), natural(b))));
    REQUIRE(feq(natural(scap(a, b)), fmeet(natural(a), natural(b))));
    REQUIRE(feq(natural(sangle(a)), fdia(natural(a))));
    // And round-trips through the concrete syntax.
    REQUIRE(feq(parse_formula(render(natural(a))), natural(a)));
  }
  REQUIRE(feq(natural(seps()), fone()));
}
