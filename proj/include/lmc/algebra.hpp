#pragma once

// Monoid layer: finite monoids with explicit tables, preorders on them,
// the right-decomposition property (RDP), divisibility-style preorders on
// word monoids with canonical decompositions, and small structural
// classifiers (cancellative / conical) with bundled example monoids.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lmc {

// -------------------------------------------------------------- finite monoid

struct FiniteMonoid {
  std::size_t n = 0;
  std::size_t unit = 0;
  std::vector<std::vector<std::size_t>> table;  // table[a][b] = a * b
  std::vector<std::string> names;

  std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }

  std::string name_of(std::size_t a) const {
    return a < names.size() ? names[a] : std::to_string(a);
  }
};

// Empty result means the table is a monoid; otherwise a human-readable defect.
inline std::optional<std::string> monoid_defect(const FiniteMonoid& m) {
  if (m.table.size() != m.n) return "table has wrong row count";
  for (const auto& row : m.table) {
    if (row.size() != m.n) return "table has wrong column count";
    for (auto v : row)
      if (v >= m.n) return "table entry out of range";
  }
  for (std::size_t a = 0; a < m.n; ++a) {
    if (m.mul(m.unit, a) != a) return "unit fails on the left at " + m.name_of(a);
    if (m.mul(a, m.unit) != a) return "unit fails on the right at " + m.name_of(a);
  }
  for (std::size_t a = 0; a < m.n; ++a)
    for (std::size_t b = 0; b < m.n; ++b)
      for (std::size_t c = 0; c < m.n; ++c)
        if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c)))
          return "associativity fails at (" + m.name_of(a) + "," + m.name_of(b) + "," +
                 m.name_of(c) + ")";
  return std::nullopt;
}

// ------------------------------------------------------------------ preorders

// rel[a][b] == true  <=>  a <= b.
using Preorder = std::vector<std::vector<bool>>;

inline std::optional<std::string> preorder_defect(const Preorder& r, std::size_t n) {
  if (r.size() != n) return "relation has wrong size";
  for (const auto& row : r)
    if (row.size() != n) return "relation has wrong size";
  for (std::size_t a = 0; a < n; ++a)
    if (!r[a][a]) return "not reflexive at " + std::to_string(a);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (r[a][b] && r[b][c] && !r[a][c])
          return "not transitive at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c) + ")";
  return std::nullopt;
}

inline Preorder discrete_preorder(std::size_t n) {
  Preorder r(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) r[a][a] = true;
  return r;
}

inline Preorder total_preorder(std::size_t n) {
  return Preorder(n, std::vector<bool>(n, true));
}

// RDP: whenever b <= a1*a2 there are b1, b2 with b1*b2 = b, b1 <= a1, b2 <= a2.
struct RdpDefect {
  std::size_t a1, a2, b;
};

inline std::optional<RdpDefect> rdp_defect(const FiniteMonoid& m, const Preorder& r) {
  for (std::size_t a1 = 0; a1 < m.n; ++a1)
    for (std::size_t a2 = 0; a2 < m.n; ++a2) {
      std::size_t prod = m.mul(a1, a2);
      for (std::size_t b = 0; b < m.n; ++b) {
        if (!r[b][prod]) continue;
        bool found = false;
        for (std::size_t b1 = 0; b1 < m.n && !found; ++b1)
          for (std::size_t b2 = 0; b2 < m.n && !found; ++b2)
            if (m.mul(b1, b2) == b && r[b1][a1] && r[b2][a2]) found = true;
        if (!found) return RdpDefect{a1, a2, b};
      }
    }
  return std::nullopt;
}

inline bool check_rdp(const FiniteMonoid& m, const Preorder& r) {
  return !rdp_defect(m, r).has_value();
}

// ---------------------------------------------------- word-monoid decomposition

// Words under concatenation with the prefix preorder. rdp_decompose returns
// the canonical split of w (a prefix of uv) into w1 w2 with w1 a prefix of u
// and w2 a prefix of v, chosen with w1 as long as possible.
inline bool is_prefix(const std::string& p, const std::string& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

inline std::optional<std::pair<std::string, std::string>> rdp_decompose(
    const std::string& u, const std::string& v, const std::string& w) {
  if (!is_prefix(w, u + v)) return std::nullopt;
  std::size_t k = std::min(w.size(), u.size());
  return std::make_pair(w.substr(0, k), w.substr(k));
}

// Reference oracle: every valid split, in increasing |w1| order.
inline std::vector<std::pair<std::string, std::string>> rdp_all_splits(
    const std::string& u, const std::string& v, const std::string& w) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    std::string w1 = w.substr(0, i), w2 = w.substr(i);
    if (is_prefix(w1, u) && is_prefix(w2, v)) out.emplace_back(w1, w2);
  }
  return out;
}

// ----------------------------------------------------------------- classifiers

struct CancellativeReport {
  bool cancellative = true;
  std::string witness;  // non-empty when cancellative is false
};

inline CancellativeReport cancellative(const FiniteMonoid& m) {
  for (std::size_t a = 0; a < m.n; ++a)
    for (std::size_t b = 0; b < m.n; ++b)
      for (std::size_t c = 0; c < m.n; ++c) {
        if (b == c) continue;
        if (m.mul(a, b) == m.mul(a, c))
          return {false, m.name_of(a) + "*" + m.name_of(b) + " = " + m.name_of(a) + "*" +
                             m.name_of(c)};
        if (m.mul(b, a) == m.mul(c, a))
          return {false, m.name_of(b) + "*" + m.name_of(a) + " = " + m.name_of(c) + "*" +
                             m.name_of(a)};
      }
  return {true, ""};
}

struct ConicalReport {
  bool conical = true;
  std::string witness;
};

inline ConicalReport conical(const FiniteMonoid& m) {
  for (std::size_t a = 0; a < m.n; ++a)
    for (std::size_t b = 0; b < m.n; ++b)
      if (m.mul(a, b) == m.unit && (a != m.unit || b != m.unit))
        return {false, m.name_of(a) + "*" + m.name_of(b) + " = unit"};
  return {true, ""};
}

// ------------------------------------------------------------ bundled monoids

inline FiniteMonoid z2_xor() {
  FiniteMonoid m;
  m.n = 2;
  m.unit = 0;
  m.table = {{0, 1}, {1, 0}};
  m.names = {"1", "a"};
  return m;
}

// Two-element join semilattice {0, 1} under max, unit 0.
inline FiniteMonoid join_semilattice2() {
  FiniteMonoid m;
  m.n = 2;
  m.unit = 0;
  m.table = {{0, 1}, {1, 1}};
  m.names = {"0", "1"};
  return m;
}

inline FiniteMonoid trivial_monoid() {
  FiniteMonoid m;
  m.n = 1;
  m.unit = 0;
  m.table = {{0}};
  m.names = {"1"};
  return m;
}

// Words of length <= L over the alphabet, concatenation truncated to the
// first L characters. Element 0 is the empty word; words are ordered by
// length, then lexicographically.
inline std::vector<std::string> words_upto(const std::string& alphabet, std::size_t L) {
  std::vector<std::string> words{""};
  std::size_t lo = 0;
  for (std::size_t len = 1; len <= L; ++len) {
    std::size_t hi = words.size();
    for (std::size_t i = lo; i < hi; ++i)
      for (char c : alphabet) words.push_back(words[i] + c);
    lo = hi;
  }
  return words;
}

inline FiniteMonoid truncated_word_monoid(const std::string& alphabet, std::size_t L) {
  FiniteMonoid m;
  std::vector<std::string> words = words_upto(alphabet, L);
  m.n = words.size();
  m.unit = 0;
  m.names = words;
  auto index_of = [&](const std::string& w) {
    return static_cast<std::size_t>(
        std::find(words.begin(), words.end(), w) - words.begin());
  };
  m.table.assign(m.n, std::vector<std::size_t>(m.n));
  for (std::size_t a = 0; a < m.n; ++a)
    for (std::size_t b = 0; b < m.n; ++b)
      m.table[a][b] = index_of((words[a] + words[b]).substr(0, L));
  return m;
}

// Prefix preorder on a word monoid's carrier.
inline Preorder prefix_preorder(const FiniteMonoid& m) {
  Preorder r(m.n, std::vector<bool>(m.n, false));
  for (std::size_t a = 0; a < m.n; ++a)
    for (std::size_t b = 0; b < m.n; ++b)
      r[a][b] = is_prefix(m.names[a], m.names[b]);
  return r;
}

// ----------------------------------------------- integer-endomorphism witness

// Four concrete monotone maps on Z whose compositions and ranges separate
// composition order; verified pointwise on a finite interval.
struct EndzReport {
  bool ok = true;
  std::string detail;
};

inline EndzReport endz_witness_check(long lo, long hi) {
  auto f = [](long n) -> long { return n <= 0 ? 1 : 2; };
  auto g = [](long) -> long { return -1; };
  auto k = [](long n) -> long { return n <= 0 ? 0 : 1; };
  auto kp = [](long) -> long { return 2; };
  bool saw_f1 = false, saw_f2 = false, saw_k0 = false, saw_k1 = false;
  for (long n = lo; n <= hi; ++n) {
    if (f(g(n)) != 1) return {false, "f(g(" + std::to_string(n) + ")) != 1"};
    if (k(kp(n)) != 1) return {false, "k(k'(" + std::to_string(n) + ")) != 1"};
    long fn = f(n), kn = k(n);
    if (fn != 1 && fn != 2) return {false, "f out of range at " + std::to_string(n)};
    if (kn != 0 && kn != 1) return {false, "k out of range at " + std::to_string(n)};
    saw_f1 |= fn == 1;
    saw_f2 |= fn == 2;
    saw_k0 |= kn == 0;
    saw_k1 |= kn == 1;
  }
  if (!(saw_f1 && saw_f2)) return {false, "range of f is not {1,2} on the interval"};
  if (!(saw_k0 && saw_k1)) return {false, "range of k is not {0,1} on the interval"};
  return {true, ""};
}

}  // namespace lmc
