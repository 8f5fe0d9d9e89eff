#pragma once

// Term layer: formulas, structural terms, positions, sequents, (in)equations,
// the concrete text syntax, complexity measures and the three translations.

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lmc {

// ---------------------------------------------------------------- formulas

enum class FTag { Var, One, Bot, Top, Prod, Meet, Join, Dia, Box };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FTag tag;
  std::string var;      // FTag::Var only
  FormulaPtr l, r;      // binary: l,r; unary: l

  Formula(FTag t, std::string v, FormulaPtr a, FormulaPtr b)
      : tag(t), var(std::move(v)), l(std::move(a)), r(std::move(b)) {}
};

inline FormulaPtr fvar(std::string name) {
  return std::make_shared<Formula>(FTag::Var, std::move(name), nullptr, nullptr);
}
inline FormulaPtr fone() { return std::make_shared<Formula>(FTag::One, "", nullptr, nullptr); }
inline FormulaPtr fbot() { return std::make_shared<Formula>(FTag::Bot, "", nullptr, nullptr); }
inline FormulaPtr ftop() { return std::make_shared<Formula>(FTag::Top, "", nullptr, nullptr); }
inline FormulaPtr fprod(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(FTag::Prod, "", std::move(a), std::move(b));
}
inline FormulaPtr fmeet(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(FTag::Meet, "", std::move(a), std::move(b));
}
inline FormulaPtr fjoin(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(FTag::Join, "", std::move(a), std::move(b));
}
inline FormulaPtr fdia(FormulaPtr a) {
  return std::make_shared<Formula>(FTag::Dia, "", std::move(a), nullptr);
}
inline FormulaPtr fbox(FormulaPtr a) {
  return std::make_shared<Formula>(FTag::Box, "", std::move(a), nullptr);
}

inline bool feq(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case FTag::Var: return a->var == b->var;
    case FTag::One: case FTag::Bot: case FTag::Top: return true;
    case FTag::Dia: case FTag::Box: return feq(a->l, b->l);
    default: return feq(a->l, b->l) && feq(a->r, b->r);
  }
}

inline bool is_binary(FTag t) { return t == FTag::Prod || t == FTag::Meet || t == FTag::Join; }
inline bool is_modal(FTag t) { return t == FTag::Dia || t == FTag::Box; }

// cp: atoms and constants 0, binary = sum + 1, modal = argument + 1.
inline std::size_t cp(const FormulaPtr& f) {
  switch (f->tag) {
    case FTag::Var: case FTag::One: case FTag::Bot: case FTag::Top: return 0;
    case FTag::Dia: case FTag::Box: return cp(f->l) + 1;
    default: return cp(f->l) + cp(f->r) + 1;
  }
}

inline void collect_vars(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->tag) {
    case FTag::Var: out.insert(f->var); break;
    case FTag::One: case FTag::Bot: case FTag::Top: break;
    case FTag::Dia: case FTag::Box: collect_vars(f->l, out); break;
    default: collect_vars(f->l, out); collect_vars(f->r, out); break;
  }
}

// ---------------------------------------------------------- structural terms

enum class STag { FAtom, Eps, Comma, Cap, Angle };

struct Struct;
using StructPtr = std::shared_ptr<const Struct>;

struct Struct {
  STag tag;
  FormulaPtr f;        // FAtom only
  StructPtr l, r;      // Comma/Cap: l,r; Angle: l

  Struct(STag t, FormulaPtr ff, StructPtr a, StructPtr b)
      : tag(t), f(std::move(ff)), l(std::move(a)), r(std::move(b)) {}
};

inline StructPtr satom(FormulaPtr f) {
  return std::make_shared<Struct>(STag::FAtom, std::move(f), nullptr, nullptr);
}
inline StructPtr seps() { return std::make_shared<Struct>(STag::Eps, nullptr, nullptr, nullptr); }
inline StructPtr scomma(StructPtr a, StructPtr b) {
  return std::make_shared<Struct>(STag::Comma, nullptr, std::move(a), std::move(b));
}
inline StructPtr scap(StructPtr a, StructPtr b) {
  return std::make_shared<Struct>(STag::Cap, nullptr, std::move(a), std::move(b));
}
inline StructPtr sangle(StructPtr a) {
  return std::make_shared<Struct>(STag::Angle, nullptr, std::move(a), nullptr);
}

inline bool steq(const StructPtr& a, const StructPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case STag::FAtom: return feq(a->f, b->f);
    case STag::Eps: return true;
    case STag::Angle: return steq(a->l, b->l);
    default: return steq(a->l, b->l) && steq(a->r, b->r);
  }
}

// cp_s: atoms (formulas) and eps 0, comma/cap = sum + 1, angle = argument + 1.
inline std::size_t cp_s(const StructPtr& t) {
  switch (t->tag) {
    case STag::FAtom: case STag::Eps: return 0;
    case STag::Angle: return cp_s(t->l) + 1;
    default: return cp_s(t->l) + cp_s(t->r) + 1;
  }
}

inline void collect_vars(const StructPtr& t, std::set<std::string>& out) {
  switch (t->tag) {
    case STag::FAtom: collect_vars(t->f, out); break;
    case STag::Eps: break;
    case STag::Angle: collect_vars(t->l, out); break;
    default: collect_vars(t->l, out); collect_vars(t->r, out); break;
  }
}

// ------------------------------------------------------------------ positions

// Child-index path from the root; unary nodes use index 0.
using Position = std::vector<int>;

inline bool pos_eq(const Position& a, const Position& b) { return a == b; }

inline bool pos_is_prefix(const Position& a, const Position& b) {
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

inline Position pos_cat(Position a, const Position& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct position_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline StructPtr subterm_at(const StructPtr& t, const Position& p, std::size_t i = 0) {
  if (i == p.size()) return t;
  int k = p[i];
  switch (t->tag) {
    case STag::Comma: case STag::Cap:
      if (k == 0) return subterm_at(t->l, p, i + 1);
      if (k == 1) return subterm_at(t->r, p, i + 1);
      break;
    case STag::Angle:
      if (k == 0) return subterm_at(t->l, p, i + 1);
      break;
    default: break;
  }
  throw position_error("invalid position");
}

inline StructPtr replace_one(const StructPtr& t, const Position& p, const StructPtr& r,
                             std::size_t i = 0) {
  if (i == p.size()) return r;
  int k = p[i];
  switch (t->tag) {
    case STag::Comma:
      if (k == 0) return scomma(replace_one(t->l, p, r, i + 1), t->r);
      if (k == 1) return scomma(t->l, replace_one(t->r, p, r, i + 1));
      break;
    case STag::Cap:
      if (k == 0) return scap(replace_one(t->l, p, r, i + 1), t->r);
      if (k == 1) return scap(t->l, replace_one(t->r, p, r, i + 1));
      break;
    case STag::Angle:
      if (k == 0) return sangle(replace_one(t->l, p, r, i + 1));
      break;
    default: break;
  }
  throw position_error("invalid position");
}

// Simultaneous substitution at pairwise non-overlapping positions.
inline StructPtr replace_at(const StructPtr& t, const std::vector<Position>& ps,
                            const StructPtr& r) {
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      if (pos_is_prefix(ps[i], ps[j]) || pos_is_prefix(ps[j], ps[i]))
        throw position_error("overlapping positions");
  StructPtr cur = t;
  for (const auto& p : ps) cur = replace_one(cur, p, r);
  return cur;
}

// Positions of atomic leaves whose formula equals f (preorder).
inline void occurrences_of_rec(const StructPtr& t, const FormulaPtr& f, Position& here,
                               std::vector<Position>& out) {
  switch (t->tag) {
    case STag::FAtom:
      if (feq(t->f, f)) out.push_back(here);
      break;
    case STag::Eps: break;
    case STag::Angle:
      here.push_back(0); occurrences_of_rec(t->l, f, here, out); here.pop_back();
      break;
    default:
      here.push_back(0); occurrences_of_rec(t->l, f, here, out); here.pop_back();
      here.push_back(1); occurrences_of_rec(t->r, f, here, out); here.pop_back();
      break;
  }
}

inline std::vector<Position> occurrences_of(const StructPtr& t, const FormulaPtr& f) {
  std::vector<Position> out;
  Position here;
  occurrences_of_rec(t, f, here, out);
  return out;
}

// All node positions (preorder), useful for rule-instance enumeration.
inline void all_positions_rec(const StructPtr& t, Position& here, std::vector<Position>& out) {
  out.push_back(here);
  switch (t->tag) {
    case STag::Angle:
      here.push_back(0); all_positions_rec(t->l, here, out); here.pop_back();
      break;
    case STag::Comma: case STag::Cap:
      here.push_back(0); all_positions_rec(t->l, here, out); here.pop_back();
      here.push_back(1); all_positions_rec(t->r, here, out); here.pop_back();
      break;
    default: break;
  }
}

inline std::vector<Position> all_positions(const StructPtr& t) {
  std::vector<Position> out;
  Position here;
  all_positions_rec(t, here, out);
  return out;
}

// ------------------------------------------------------- sequents / equations

struct Sequent {
  StructPtr ant;
  FormulaPtr suc;
};

inline bool seq_eq(const Sequent& a, const Sequent& b) {
  return steq(a.ant, b.ant) && feq(a.suc, b.suc);
}

struct Inequation {
  FormulaPtr lhs, rhs;
};

struct Equation {
  FormulaPtr lhs, rhs;
};

// ----------------------------------------------------------------- rendering

inline std::string render(const FormulaPtr& f) {
  switch (f->tag) {
    case FTag::Var: return f->var;
    case FTag::One: return "1";
    case FTag::Bot: return "bot";
    case FTag::Top: return "top";
    case FTag::Prod: return "(" + render(f->l) + " * " + render(f->r) + ")";
    case FTag::Meet: return "(" + render(f->l) + " & " + render(f->r) + ")";
    case FTag::Join: return "(" + render(f->l) + " | " + render(f->r) + ")";
    case FTag::Dia: return "dia " + render(f->l);
    case FTag::Box: return "box " + render(f->l);
  }
  return "";
}

inline std::string render(const StructPtr& t) {
  switch (t->tag) {
    case STag::FAtom: return render(t->f);
    case STag::Eps: return "e";
    case STag::Comma: return "(" + render(t->l) + " o " + render(t->r) + ")";
    case STag::Cap: return "(" + render(t->l) + " n " + render(t->r) + ")";
    case STag::Angle: return "<" + render(t->l) + ">";
  }
  return "";
}

inline std::string render(const Sequent& s) {
  return render(s.ant) + " |- " + render(s.suc);
}

inline std::string render(const Inequation& e) {
  return render(e.lhs) + " <= " + render(e.rhs);
}

// ------------------------------------------------------------------- parsing

struct parse_error : std::runtime_error {
  std::size_t pos;
  parse_error(std::string msg, std::size_t at)
      : std::runtime_error(std::move(msg) + " (at offset " + std::to_string(at) + ")"),
        pos(at) {}
};

namespace detail {

struct Token {
  enum Kind { Ident, Num1, LPar, RPar, LAng, RAng, Star, Amp, Pipe, Turnstile, End } kind;
  std::string text;
  std::size_t at;
};

inline std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto isident0 = [](char c) { return c >= 'a' && c <= 'z'; };
  auto isident = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') { ++i; continue; }
    if (c == '(') { out.push_back({Token::LPar, "(", i}); ++i; continue; }
    if (c == ')') { out.push_back({Token::RPar, ")", i}); ++i; continue; }
    if (c == '<') { out.push_back({Token::LAng, "<", i}); ++i; continue; }
    if (c == '>') { out.push_back({Token::RAng, ">", i}); ++i; continue; }
    if (c == '*') { out.push_back({Token::Star, "*", i}); ++i; continue; }
    if (c == '&') { out.push_back({Token::Amp, "&", i}); ++i; continue; }
    if (c == '|') {
      if (i + 1 < s.size() && s[i + 1] == '-') {
        out.push_back({Token::Turnstile, "|-", i});
        i += 2;
      } else {
        out.push_back({Token::Pipe, "|", i});
        ++i;
      }
      continue;
    }
    if (c == '1') { out.push_back({Token::Num1, "1", i}); ++i; continue; }
    if (isident0(c)) {
      std::size_t j = i;
      while (j < s.size() && isident(s[j])) ++j;
      out.push_back({Token::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    throw parse_error("unexpected character '" + std::string(1, c) + "'", i);
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

inline bool reserved(const std::string& w) {
  return w == "e" || w == "o" || w == "n" || w == "dia" || w == "box" || w == "bot" ||
         w == "top";
}

struct Parser {
  std::vector<Token> toks;
  std::size_t i = 0;

  const Token& peek() const { return toks[i]; }
  Token take() { return toks[i++]; }

  [[noreturn]] void fail(const std::string& what) {
    throw parse_error("expected " + what + ", got '" + peek().text + "'", peek().at);
  }

  FormulaPtr formula() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Num1: take(); return fone();
      case Token::Ident: {
        if (t.text == "bot") { take(); return fbot(); }
        if (t.text == "top") { take(); return ftop(); }
        if (t.text == "dia") { take(); return fdia(formula()); }
        if (t.text == "box") { take(); return fbox(formula()); }
        if (reserved(t.text)) fail("formula");
        take();
        return fvar(t.text);
      }
      case Token::LPar: {
        take();
        FormulaPtr a = formula();
        const Token& op = peek();
        FormulaPtr res;
        if (op.kind == Token::Star) { take(); res = fprod(a, formula()); }
        else if (op.kind == Token::Amp) { take(); res = fmeet(a, formula()); }
        else if (op.kind == Token::Pipe) { take(); res = fjoin(a, formula()); }
        else fail("'*', '&' or '|'");
        if (peek().kind != Token::RPar) fail("')'");
        take();
        return res;
      }
      default: fail("formula");
    }
  }

  StructPtr struct_term() {
    const Token& t = peek();
    if (t.kind == Token::Ident && t.text == "e") { take(); return seps(); }
    if (t.kind == Token::LAng) {
      take();
      StructPtr a = struct_term();
      if (peek().kind != Token::RAng) fail("'>'");
      take();
      return sangle(a);
    }
    if (t.kind == Token::LPar) {
      // Composite struct or a fully-parenthesized formula atom: try the
      // formula reading first and backtrack on failure.
      std::size_t save = i;
      try {
        return satom(formula());
      } catch (const parse_error&) {
        i = save;
      }
      take();  // '('
      StructPtr a = struct_term();
      const Token& op = peek();
      StructPtr res;
      if (op.kind == Token::Ident && op.text == "o") { take(); res = scomma(a, struct_term()); }
      else if (op.kind == Token::Ident && op.text == "n") { take(); res = scap(a, struct_term()); }
      else fail("'o' or 'n'");
      if (peek().kind != Token::RPar) fail("')'");
      take();
      return res;
    }
    return satom(formula());
  }
};

}  // namespace detail

inline FormulaPtr parse_formula(const std::string& text) {
  detail::Parser p{detail::lex(text)};
  FormulaPtr f = p.formula();
  if (p.peek().kind != detail::Token::End) p.fail("end of input");
  return f;
}

inline StructPtr parse_struct(const std::string& text) {
  detail::Parser p{detail::lex(text)};
  StructPtr t = p.struct_term();
  if (p.peek().kind != detail::Token::End) p.fail("end of input");
  return t;
}

inline Sequent parse_sequent(const std::string& text) {
  detail::Parser p{detail::lex(text)};
  StructPtr ant = p.struct_term();
  if (p.peek().kind != detail::Token::Turnstile) p.fail("'|-'");
  p.take();
  FormulaPtr suc = p.formula();
  if (p.peek().kind != detail::Token::End) p.fail("end of input");
  return Sequent{ant, suc};
}

// -------------------------------------------------------------- translations

// Formula translation of a structural term: o -> *, n -> &, <.> -> dia, e -> 1.
inline FormulaPtr natural(const StructPtr& t) {
  switch (t->tag) {
    case STag::FAtom: return t->f;
    case STag::Eps: return fone();
    case STag::Comma: return fprod(natural(t->l), natural(t->r));
    case STag::Cap: return fmeet(natural(t->l), natural(t->r));
    case STag::Angle: return fdia(natural(t->l));
  }
  return nullptr;
}

inline Inequation sharp(const Sequent& s) { return Inequation{natural(s.ant), s.suc}; }

inline std::vector<Sequent> flat(const Inequation& e) {
  return {Sequent{satom(e.lhs), e.rhs}};
}

inline std::vector<Sequent> flat(const Equation& e) {
  std::vector<Sequent> out{Sequent{satom(e.lhs), e.rhs}};
  Sequent back{satom(e.rhs), e.lhs};
  if (!seq_eq(out[0], back)) out.push_back(back);
  return out;
}

}  // namespace lmc
