#pragma once

// Serialization: JSON derivation files (checked on load, never trusted),
// model description files, LTS files and trace files, plus parsing of
// inequations/equations in the concrete syntax.

#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lmc/algebra.hpp"
#include "lmc/calculus.hpp"
#include "lmc/models.hpp"
#include "lmc/syntax.hpp"
#include "lmc/traces.hpp"

namespace lmc {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ----------------------------------------------------------- (in)equations

// "lhs <= rhs" or "lhs == rhs" over formulas.
inline bool parse_law(const std::string& text, Inequation& ineq, bool& is_equation) {
  auto at = text.find("<=");
  is_equation = false;
  if (at == std::string::npos) {
    at = text.find("==");
    if (at == std::string::npos) return false;
    is_equation = true;
  }
  ineq.lhs = parse_formula(text.substr(0, at));
  ineq.rhs = parse_formula(text.substr(at + 2));
  return true;
}

// ------------------------------------------------------- derivations (JSON)

inline nlohmann::json to_json(const Deriv& d) {
  nlohmann::json j;
  j["rule"] = rule_name(d->app.rule);
  j["conclusion"] = render(d->conclusion);
  if (!d->app.ctx.empty() || d->app.rule == RuleId::botL || d->app.rule == RuleId::cut)
    j["ctx"] = d->app.ctx;
  if (d->app.rule == RuleId::mix) j["occ"] = d->app.occ;
  if (d->app.aux_formula) j["aux_formula"] = render(d->app.aux_formula);
  if (d->app.aux_term) j["aux_term"] = render(d->app.aux_term);
  j["premises"] = nlohmann::json::array();
  for (const auto& p : d->premises) j["premises"].push_back(to_json(p));
  return j;
}

// Rebuilds the tree with the *stored* conclusions so that check_derivation
// genuinely re-derives every step.
inline Deriv deriv_from_json(const nlohmann::json& j) {
  auto node = std::make_shared<Derivation>();
  auto r = rule_from_name(j.at("rule").get<std::string>());
  if (!r) throw io_error("unknown rule '" + j.at("rule").get<std::string>() + "'");
  node->app.rule = *r;
  if (j.contains("ctx")) node->app.ctx = j["ctx"].get<Position>();
  if (j.contains("occ")) node->app.occ = j["occ"].get<std::vector<Position>>();
  if (j.contains("aux_formula"))
    node->app.aux_formula = parse_formula(j["aux_formula"].get<std::string>());
  if (j.contains("aux_term"))
    node->app.aux_term = parse_struct(j["aux_term"].get<std::string>());
  node->conclusion = parse_sequent(j.at("conclusion").get<std::string>());
  for (const auto& pj : j.at("premises")) node->premises.push_back(deriv_from_json(pj));
  return node;
}

inline void save_derivation(const std::string& path, const Deriv& d) {
  std::ofstream f(path);
  if (!f) throw io_error("cannot write " + path);
  f << to_json(d).dump(2) << "\n";
}

inline Deriv load_derivation(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw io_error("cannot read " + path);
  nlohmann::json j;
  f >> j;
  return deriv_from_json(j);
}

// -------------------------------------------------------------- model files

// Either a single line
//   truncated alphabet=<letters> L=<n>
// or a monoid-with-preorder description:
//   monoid <n>
//   names <n tokens>          (optional)
//   table <n*n entries row-major>
//   preorder <n*n 0/1 entries>
inline Model load_model(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw io_error("cannot read " + path);
  std::string word;
  FiniteMonoid mon;
  Preorder rel;
  bool have_monoid = false, have_table = false, have_rel = false;
  while (f >> word) {
    if (word == "truncated") {
      std::string a, l;
      f >> a >> l;
      if (a.rfind("alphabet=", 0) != 0 || l.rfind("L=", 0) != 0)
        throw io_error("bad truncated model line");
      return build_truncated_model(a.substr(9), std::stoul(l.substr(2)));
    }
    if (word == "monoid") {
      f >> mon.n;
      mon.unit = 0;
      have_monoid = true;
    } else if (word == "names") {
      mon.names.resize(mon.n);
      for (auto& s : mon.names) f >> s;
    } else if (word == "table") {
      if (!have_monoid) throw io_error("table before monoid size");
      mon.table.assign(mon.n, std::vector<std::size_t>(mon.n));
      for (auto& row : mon.table)
        for (auto& v : row) f >> v;
      have_table = true;
    } else if (word == "preorder") {
      if (!have_monoid) throw io_error("preorder before monoid size");
      rel.assign(mon.n, std::vector<bool>(mon.n));
      for (auto& row : rel)
        for (std::size_t i = 0; i < row.size(); ++i) {
          int v;
          f >> v;
          row[i] = v != 0;
        }
      have_rel = true;
    } else {
      throw io_error("unknown model file keyword '" + word + "'");
    }
  }
  if (!have_monoid || !have_table || !have_rel)
    throw io_error("incomplete model file " + path);
  return build_preorder_model(mon, rel, path);
}

// ---------------------------------------------------------------- LTS files

// Lines: "state <name>", "init <name>", "action <name>",
// "trans <src> <action> <dst>".
inline Lts load_lts(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw io_error("cannot read " + path);
  Lts l;
  std::string word;
  while (f >> word) {
    if (word == "state") {
      std::string s;
      f >> s;
      l.states.push_back(s);
    } else if (word == "init") {
      f >> l.init;
    } else if (word == "action") {
      std::string a;
      f >> a;
      l.actions.push_back(a);
    } else if (word == "trans") {
      std::string s, a, t;
      f >> s >> a >> t;
      l.trans.emplace_back(s, a, t);
    } else {
      throw io_error("unknown lts keyword '" + word + "'");
    }
  }
  return l;
}

// --------------------------------------------------------------- trace files

// One trace per line as "(state,action)(state,action)..."; "eps" or a blank
// line is the empty trace.
inline Trace parse_trace(const std::string& line) {
  Trace w;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  };
  skip_ws();
  if (line.compare(i, 3, "eps") == 0 && i + 3 >= line.size()) return w;
  while (i < line.size()) {
    skip_ws();
    if (i >= line.size()) break;
    if (line[i] != '(') throw io_error("expected '(' in trace: " + line);
    std::size_t comma = line.find(',', i);
    std::size_t close = line.find(')', i);
    if (comma == std::string::npos || close == std::string::npos || comma > close)
      throw io_error("malformed trace pair: " + line);
    w.emplace_back(line.substr(i + 1, comma - i - 1), line.substr(comma + 1, close - comma - 1));
    i = close + 1;
  }
  return w;
}

inline std::vector<Trace> load_traces(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw io_error("cannot read " + path);
  std::vector<Trace> out;
  std::string line;
  while (std::getline(f, line)) {
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    out.push_back(parse_trace(trimmed));
  }
  return out;
}

}  // namespace lmc
