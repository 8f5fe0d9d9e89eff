// Command-line front end; see --help for the subcommands.

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "lmc/io.hpp"
#include "lmc/models.hpp"
#include "lmc/search.hpp"
#include "lmc/transform.hpp"

using namespace lmc;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;  // failed check, no proof, or counterexample found
constexpr int kUsage = 2;

Model model_by_spec(const std::string& spec) {
  if (spec == "z2-total") return z2_total_model();
  if (spec == "z2-discrete") return z2_discrete_model();
  if (spec.rfind("truncated:", 0) == 0) {
    std::string rest = spec.substr(10);
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw io_error("expected truncated:<alphabet>:<L>");
    return build_truncated_model(rest.substr(0, colon),
                                 std::stoul(rest.substr(colon + 1)));
  }
  return load_model(spec);  // treat anything else as a file path
}

// Accepts an inequation, an equation, or a sequent; returns the sequent forms.
std::vector<Sequent> parse_claims(const std::string& text) {
  Inequation ineq;
  bool is_eq = false;
  if (parse_law(text, ineq, is_eq)) {
    if (is_eq) return flat(Equation{ineq.lhs, ineq.rhs});
    return flat(ineq);
  }
  return {parse_sequent(text)};
}

int cmd_parse(const std::string& text, const std::string& kind) {
  if (kind == "formula")
    std::cout << render(parse_formula(text)) << "\n";
  else if (kind == "struct")
    std::cout << render(parse_struct(text)) << "\n";
  else
    std::cout << render(parse_sequent(text)) << "\n";
  return kPass;
}

int cmd_check(const std::string& path) {
  Deriv d = load_derivation(path);
  CheckResult res = check_derivation(d);
  if (res.ok) {
    std::cout << "ok: " << render(d->conclusion) << " (" << node_count(d)
              << " nodes)\n";
    return kPass;
  }
  std::cout << "invalid at node [";
  for (std::size_t i = 0; i < res.path.size(); ++i)
    std::cout << (i ? " " : "") << res.path[i];
  std::cout << "]: " << res.error << "\n";
  return kFail;
}

int cmd_prove(const std::string& text, const SearchBudget& budget,
              const std::string& emit) {
  bool all = true;
  for (const Sequent& goal : parse_claims(text)) {
    SearchStats st;
    auto d = prove(goal, budget, &st);
    if (d) {
      std::cout << "proved: " << render(goal) << " (" << height(*d)
                << " high, " << st.nodes << " nodes searched)\n";
      if (!emit.empty()) save_derivation(emit, *d);
    } else {
      std::cout << (st.budget_hit ? "gave up on: " : "exhausted: ")
                << render(goal) << " (" << st.nodes << " nodes searched)\n";
      all = false;
    }
  }
  return all ? kPass : kFail;
}

int cmd_eliminate(const std::string& path, const std::string& emit, bool trace) {
  Deriv d = load_derivation(path);
  CheckResult res = check_derivation(d);
  if (!res.ok) {
    std::cout << "input derivation invalid: " << res.error << "\n";
    return kFail;
  }
  std::vector<std::string> log;
  Deriv e = eliminate_mix(cut_as_mix(d), trace ? &log : nullptr);
  for (const std::string& line : log) std::cout << "  " << line << "\n";
  std::cout << "eliminated: " << render(e->conclusion) << " (" << node_count(d)
            << " -> " << node_count(e) << " nodes)\n";
  if (!emit.empty()) save_derivation(emit, e);
  return kPass;
}

int cmd_eval(const std::string& text, const std::string& model_spec,
             std::uint64_t seed) {
  Model m = model_by_spec(model_spec);
  CheckOptions opt;
  opt.seed = seed;
  Inequation ineq;
  bool is_eq = false;
  std::vector<std::pair<std::string, CheckOutcome>> results;
  if (parse_law(text, ineq, is_eq)) {
    if (is_eq) {
      results.emplace_back(render(ineq.lhs) + " <= " + render(ineq.rhs),
                           check_inequation(m, ineq, opt));
      results.emplace_back(render(ineq.rhs) + " <= " + render(ineq.lhs),
                           check_inequation(m, Inequation{ineq.rhs, ineq.lhs}, opt));
    } else {
      results.emplace_back(render(ineq), check_inequation(m, ineq, opt));
    }
  } else {
    Sequent s = parse_sequent(text);
    results.emplace_back(render(s), check_sequent(m, s, opt));
  }
  bool all = true;
  for (const auto& [what, o] : results) {
    if (o.holds)
      std::cout << "holds on " << m.name << (o.exhaustive ? "" : " (sampled)")
                << ": " << what << "\n";
    else
      std::cout << "fails on " << m.name << ": " << what << " at "
                << o.counterexample << "\n";
    all = all && o.holds;
  }
  return all ? kPass : kFail;
}

int cmd_soundness(const std::string& model_spec, std::size_t random_goals,
                  std::uint64_t seed, std::size_t jobs, std::size_t samples) {
  Model m = model_by_spec(model_spec);
  CheckOptions opt;
  opt.seed = seed;
  if (samples > 0) {
    // Cap the per-instance assignment sweep: spaces larger than the cap are
    // sampled instead of enumerated.
    opt.samples = samples;
    opt.exhaustive_budget = samples;
  }
  std::vector<Sequent> goals;
  if (random_goals > 0) {
    Rng rng(seed);
    std::vector<std::string> vars = {"x", "y"};
    for (std::size_t i = 0; i < random_goals; ++i)
      goals.push_back(random_sequent(rng, 3, vars));
  } else {
    goals = soundness_goal_pool();
  }

  if (jobs < 1) jobs = 1;
  std::vector<RuleSoundnessReport> reports(jobs);
  std::vector<std::thread> workers;
  std::size_t chunk = (goals.size() + jobs - 1) / jobs;
  for (std::size_t j = 0; j < jobs; ++j) {
    workers.emplace_back([&, j] {
      std::size_t lo = j * chunk, hi = std::min(goals.size(), lo + chunk);
      if (lo >= hi) return;
      std::vector<Sequent> part(goals.begin() + static_cast<long>(lo),
                                goals.begin() + static_cast<long>(hi));
      reports[j] = check_rule_soundness(m, part, opt);
    });
  }
  for (auto& w : workers) w.join();

  RuleSoundnessReport total;
  for (const auto& r : reports) {
    total.goals += r.goals;
    total.instances += r.instances;
    if (!r.ok && total.ok) {
      total.ok = false;
      total.detail = r.detail;
    }
  }
  if (total.ok) {
    std::cout << "sound on " << m.name << ": " << total.instances
              << " rule instances over " << total.goals << " goals\n";
    return kPass;
  }
  std::cout << "UNSOUND on " << m.name << ": " << total.detail << "\n";
  return kFail;
}

int cmd_countermodel(const std::string& text, std::size_t max_size,
                     std::size_t max_L) {
  CountermodelOptions opt;
  opt.max_monoid_size = max_size;
  opt.max_trunc_L = max_L;
  bool found_any = false;
  for (const Sequent& s : parse_claims(text)) {
    auto cm = countermodel_search(s, opt);
    if (cm) {
      std::cout << "countermodel for " << render(s) << ": " << cm->model_name
                << " with " << cm->assignment << "\n";
      found_any = true;
    } else {
      std::cout << "no countermodel for " << render(s) << " within bounds\n";
    }
  }
  return found_any ? kFail : kPass;
}

Lts lts_for(const std::string& path) {
  return path.empty() ? running_example() : load_lts(path);
}

int cmd_traces_enumerate(const std::string& lts_path, std::size_t max_len,
                         bool rooted, bool strict) {
  Lts l = lts_for(lts_path);
  TraceSet ts = valid_traces(l, max_len, rooted, strict);
  for (const Trace& w : ts) std::cout << render(w) << "\n";
  std::cout << ts.size() << " traces\n";
  return kPass;
}

int cmd_traces_classify(const std::string& lts_path, const std::string& file,
                        std::size_t max_len) {
  Lts l = lts_for(lts_path);
  TraceSet p;
  for (const Trace& w : load_traces(file)) p.insert(w);
  TraceSet universe = valid_traces(l, max_len, true, false);
  TraceClass c = classify(p, universe);
  std::cout << "safety: " << (c.safety ? "yes" : "no")
            << " (interior check " << (safety_via_box(p) ? "agrees" : "DISAGREES")
            << "), liveness: " << (c.liveness ? "yes" : "no") << "\n";
  return kPass;
}

int cmd_traces_policy(const std::string& lts_path, const std::string& file,
                      bool strict) {
  Lts l = lts_for(lts_path);
  bool all = true;
  for (const Trace& w : load_traces(file)) {
    bool v = is_valid(l, w, strict);
    bool p1 = policy_p1(w), p2 = policy_p2(w);
    std::cout << render(w) << ": " << (v ? "valid" : "invalid")
              << ", P1 " << (p1 ? "ok" : "violated")
              << ", P2 " << (p2 ? "ok" : "violated") << "\n";
    all = all && v && p1 && p2;
  }
  return all ? kPass : kFail;
}

FiniteMonoid monoid_by_name(const std::string& name) {
  if (name == "z2") return z2_xor();
  if (name == "join2") return join_semilattice2();
  if (name == "trivial") return trivial_monoid();
  if (name.rfind("words:", 0) == 0) {
    std::string rest = name.substr(6);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw io_error("expected words:<alphabet>:<L>");
    return truncated_word_monoid(rest.substr(0, colon),
                                 std::stoul(rest.substr(colon + 1)));
  }
  throw io_error("unknown monoid '" + name + "'");
}

int cmd_algebra_rdp(const std::string& u, const std::string& v,
                    const std::string& w, bool all_splits) {
  if (all_splits) {
    auto splits = rdp_all_splits(u, v, w);
    for (const auto& [w1, w2] : splits)
      std::cout << "(" << w1 << ", " << w2 << ")\n";
    return splits.empty() ? kFail : kPass;
  }
  auto s = rdp_decompose(u, v, w);
  if (!s) {
    std::cout << "'" << w << "' is not a prefix of '" << u + v << "'\n";
    return kFail;
  }
  std::cout << "(" << s->first << ", " << s->second << ")\n";
  return kPass;
}

int cmd_algebra_classify(const std::string& name) {
  FiniteMonoid m = monoid_by_name(name);
  CancellativeReport c = cancellative(m);
  ConicalReport o = conical(m);
  std::cout << "cancellative: " << (c.cancellative ? "yes" : ("no (" + c.witness + ")"))
            << "\nconical: " << (o.conical ? "yes" : ("no (" + o.witness + ")")) << "\n";
  return kPass;
}

int cmd_algebra_endz(long lo, long hi) {
  EndzReport r = endz_witness_check(lo, hi);
  if (r.ok) {
    std::cout << "witnesses verified on [" << lo << ", " << hi << "]\n";
    return kPass;
  }
  std::cout << "witness check failed: " << r.detail << "\n";
  return kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequent calculus toolkit for closure l-monoids"};
  app.require_subcommand(1);

  std::string text, kind = "sequent", file, emit, model_spec = "truncated:a:2";
  std::string lts_path, u, v, w, monoid_name = "z2";
  std::uint64_t seed = 1;
  std::size_t jobs = 1, random_goals = 0, max_len = 3, max_size = 3, max_L = 3;
  std::size_t samples = 0;
  long lo = -100, hi = 100;
  bool trace = false, rooted = false, strict = false, all_splits = false;
  SearchBudget budget;
  bool no_focus = false;

  auto* parse_cmd = app.add_subcommand("parse", "Parse and reprint canonically");
  parse_cmd->add_option("text", text)->required();
  parse_cmd->add_option("--kind", kind)->check(CLI::IsMember({"sequent", "formula", "struct"}));

  auto* check_cmd = app.add_subcommand("check", "Re-derive every node of a derivation file");
  check_cmd->add_option("file", file)->required();

  auto* prove_cmd = app.add_subcommand("prove", "Backward proof search");
  prove_cmd->add_option("text", text, "sequent, or law with <= / ==")->required();
  prove_cmd->add_option("--depth", budget.max_depth);
  prove_cmd->add_option("--capc", budget.max_capC_per_branch);
  prove_cmd->add_option("--tlimit", budget.max_T_per_branch);
  prove_cmd->add_option("--nodes", budget.max_nodes);
  prove_cmd->add_flag("--no-focus", no_focus);
  prove_cmd->add_option("--emit", emit, "write the found derivation as JSON");

  auto* elim_cmd = app.add_subcommand("eliminate", "Remove cut/mix from a derivation file");
  elim_cmd->add_option("file", file)->required();
  elim_cmd->add_option("--emit", emit);
  elim_cmd->add_flag("--trace", trace, "print each elimination step");

  auto* eval_cmd = app.add_subcommand("eval", "Check a law or sequent on a model");
  eval_cmd->add_option("text", text)->required();
  eval_cmd->add_option("--model", model_spec,
                       "truncated:<alphabet>:<L>, z2-total, z2-discrete, or a file");
  eval_cmd->add_option("--seed", seed);

  auto* sound_cmd = app.add_subcommand("soundness", "Sweep all rules over goal sequents");
  sound_cmd->add_option("--model", model_spec);
  sound_cmd->add_option("--goals", random_goals, "use N random goals instead of the pool");
  sound_cmd->add_option("--seed", seed);
  sound_cmd->add_option("--jobs", jobs);
  sound_cmd->add_option("--samples", samples,
                        "cap per-instance assignment sweeps at N samples");

  auto* cm_cmd = app.add_subcommand("countermodel", "Search small models for a refutation");
  cm_cmd->add_option("text", text)->required();
  cm_cmd->add_option("--max-size", max_size, "largest monoid carrier");
  cm_cmd->add_option("--max-L", max_L, "largest truncation length");

  auto* traces_cmd = app.add_subcommand("traces", "Finite-trace layer");
  auto* tr_enum = traces_cmd->add_subcommand("enumerate", "List valid traces");
  tr_enum->add_option("--lts", lts_path, "LTS file (default: built-in protocol)");
  tr_enum->add_option("--max-len", max_len);
  tr_enum->add_flag("--rooted", rooted);
  tr_enum->add_flag("--strict", strict);
  auto* tr_cls = traces_cmd->add_subcommand("classify", "Safety/liveness of a trace file");
  tr_cls->add_option("file", file)->required();
  tr_cls->add_option("--lts", lts_path);
  tr_cls->add_option("--max-len", max_len);
  auto* tr_pol = traces_cmd->add_subcommand("policy", "Validity and policies per trace");
  tr_pol->add_option("file", file)->required();
  tr_pol->add_option("--lts", lts_path);
  tr_pol->add_flag("--strict", strict);
  traces_cmd->require_subcommand(1);

  auto* alg_cmd = app.add_subcommand("algebra", "Monoid utilities");
  auto* al_rdp = alg_cmd->add_subcommand("rdp", "Decompose w along u, v");
  al_rdp->add_option("u", u)->required();
  al_rdp->add_option("v", v)->required();
  al_rdp->add_option("w", w)->required();
  al_rdp->add_flag("--all", all_splits, "list every split");
  auto* al_cls = alg_cmd->add_subcommand("classify", "Cancellative/conical report");
  al_cls->add_option("--monoid", monoid_name, "z2, join2, trivial, words:<alphabet>:<L>");
  auto* al_endz = alg_cmd->add_subcommand("endz", "Integer endomorphism witnesses");
  al_endz->add_option("--lo", lo);
  al_endz->add_option("--hi", hi);
  alg_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  budget.t_focus = !no_focus;
  try {
    if (*parse_cmd) return cmd_parse(text, kind);
    if (*check_cmd) return cmd_check(file);
    if (*prove_cmd) return cmd_prove(text, budget, emit);
    if (*elim_cmd) return cmd_eliminate(file, emit, trace);
    if (*eval_cmd) return cmd_eval(text, model_spec, seed);
    if (*sound_cmd) return cmd_soundness(model_spec, random_goals, seed, jobs, samples);
    if (*cm_cmd) return cmd_countermodel(text, max_size, max_L);
    if (*traces_cmd) {
      if (*tr_enum) return cmd_traces_enumerate(lts_path, max_len, rooted, strict);
      if (*tr_cls) return cmd_traces_classify(lts_path, file, max_len);
      if (*tr_pol) return cmd_traces_policy(lts_path, file, strict);
    }
    if (*alg_cmd) {
      if (*al_rdp) return cmd_algebra_rdp(u, v, w, all_splits);
      if (*al_cls) return cmd_algebra_classify(monoid_name);
      if (*al_endz) return cmd_algebra_endz(lo, hi);
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kFail;
  } catch (const transform_error& e) {
    std::cerr << "transform error: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
