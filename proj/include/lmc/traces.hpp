#pragma once

// Trace layer: finite labelled transition systems, validity of finite traces
// of (state, action) pairs, rooted/strict variants, enumeration, prefix
// closure / interior, safety classification and two example trace policies.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lmc/gen.hpp"

namespace lmc {

struct Lts {
  std::vector<std::string> states;
  std::string init;
  std::vector<std::string> actions;
  // (source state, action, target state)
  std::vector<std::tuple<std::string, std::string, std::string>> trans;

  bool has_trans(const std::string& s, const std::string& a, const std::string& t) const {
    for (const auto& [x, y, z] : trans)
      if (x == s && y == a && z == t) return true;
    return false;
  }

  bool enabled(const std::string& s, const std::string& a) const {
    for (const auto& [x, y, z] : trans)
      if (x == s && y == a) return true;
    return false;
  }

  bool has_state(const std::string& s) const {
    return std::find(states.begin(), states.end(), s) != states.end();
  }

  bool has_action(const std::string& a) const {
    return std::find(actions.begin(), actions.end(), a) != actions.end();
  }
};

using TPair = std::pair<std::string, std::string>;  // (state, action)
using Trace = std::vector<TPair>;
using TraceSet = std::set<Trace>;

inline std::string render(const Trace& w) {
  if (w.empty()) return "eps";
  std::string out;
  for (const auto& [s, a] : w) out += "(" + s + "," + a + ")";
  return out;
}

// A trace is valid when every adjacent pair is connected by a transition:
// the i-th action, taken at the i-th state, leads to the (i+1)-th state.
// The final action is unconstrained; `strict` additionally requires it to be
// enabled at the final state. Unknown states/actions make a trace invalid.
inline bool is_valid(const Lts& lts, const Trace& w, bool strict = false) {
  for (const auto& [s, a] : w)
    if (!lts.has_state(s) || !lts.has_action(a)) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!lts.has_trans(w[i].first, w[i].second, w[i + 1].first)) return false;
  if (strict && !w.empty() && !lts.enabled(w.back().first, w.back().second)) return false;
  return true;
}

inline bool is_rooted(const Lts& lts, const Trace& w) {
  return w.empty() || w.front().first == lts.init;
}

// All valid traces up to the given length (including the empty trace).
inline TraceSet valid_traces(const Lts& lts, std::size_t max_len, bool rooted,
                             bool strict) {
  TraceSet out;
  out.insert(Trace{});
  TraceSet frontier{Trace{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    TraceSet next;
    for (const Trace& w : frontier) {
      for (const std::string& s : lts.states) {
        if (!w.empty() && !lts.has_trans(w.back().first, w.back().second, s)) continue;
        if (w.empty() && rooted && s != lts.init) continue;
        for (const std::string& a : lts.actions) {
          Trace w2 = w;
          w2.emplace_back(s, a);
          if (strict && !lts.enabled(s, a)) continue;
          next.insert(w2);
        }
      }
    }
    out.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// ------------------------------------------------------------ set operations

inline TraceSet prefix_closure(const TraceSet& p) {
  TraceSet out;
  for (const Trace& w : p)
    for (std::size_t i = 0; i <= w.size(); ++i) out.insert(Trace(w.begin(), w.begin() + i));
  return out;
}

// Members all of whose prefixes are members.
inline TraceSet box_interior(const TraceSet& p) {
  TraceSet out;
  for (const Trace& w : p) {
    bool all = true;
    for (std::size_t i = 0; i < w.size() && all; ++i)
      all = p.count(Trace(w.begin(), w.begin() + i)) > 0;
    if (all) out.insert(w);
  }
  return out;
}

struct TraceClass {
  bool safety = false;    // prefix-closed
  bool liveness = false;  // every word of the universe extends into the set
};

inline TraceClass classify(const TraceSet& p, const TraceSet& universe) {
  TraceClass c;
  c.safety = prefix_closure(p) == p;
  TraceSet cl = prefix_closure(p);
  c.liveness = std::includes(cl.begin(), cl.end(), universe.begin(), universe.end());
  return c;
}

// Safety decided through the interior operator instead of the closure.
inline bool safety_via_box(const TraceSet& p) { return box_interior(p) == p; }

// ------------------------------------------------------------------ policies

// Acknowledgements need an earlier send: every non-final occurrence of
// ack/nack has a strictly earlier snd.
inline bool policy_p1(const Trace& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i].second != "ack" && w[i].second != "nack") continue;
    bool found = false;
    for (std::size_t j = 0; j < i && !found; ++j) found = w[j].second == "snd";
    if (!found) return false;
  }
  return true;
}

// Sends are eventually answered: every non-final occurrence of snd has a
// strictly later ack/nack.
inline bool policy_p2(const Trace& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i].second != "snd") continue;
    bool found = false;
    for (std::size_t j = i + 1; j < w.size() && !found; ++j)
      found = w[j].second == "ack" || w[j].second == "nack";
    if (!found) return false;
  }
  return true;
}

// -------------------------------------------------------------- example LTS

// A small connect/send/acknowledge protocol.
inline Lts running_example() {
  Lts l;
  l.states = {"s0", "s1", "s2", "s3", "s4"};
  l.init = "s0";
  l.actions = {"conn", "snd", "ack", "nack", "end", "req"};
  l.trans = {
      {"s0", "conn", "s1"}, {"s1", "snd", "s2"},  {"s2", "nack", "s3"},
      {"s2", "ack", "s4"},  {"s3", "end", "s0"},  {"s4", "end", "s0"},
      {"s4", "req", "s1"},
  };
  return l;
}

// Random subset of the words of length <= max_len over states x actions.
inline TraceSet random_trace_subset(Rng& rng, const Lts& lts, std::size_t max_len,
                                    std::size_t count) {
  TraceSet out;
  for (std::size_t i = 0; i < count; ++i) {
    Trace w;
    std::size_t len = rng.upto(max_len + 1);
    for (std::size_t j = 0; j < len; ++j)
      w.emplace_back(lts.states[rng.upto(lts.states.size())],
                     lts.actions[rng.upto(lts.actions.size())]);
    out.insert(w);
  }
  return out;
}

}  // namespace lmc
