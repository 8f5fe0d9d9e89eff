#pragma once

// Seeded random generators for property tests and fuzzing.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lmc/syntax.hpp"

namespace lmc {

struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::size_t upto(std::size_t n) {  // uniform in [0, n)
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng);
  }

  bool coin() { return upto(2) == 0; }
};

inline FormulaPtr random_formula(Rng& rng, std::size_t depth,
                                 const std::vector<std::string>& vars) {
  if (depth == 0 || rng.upto(4) == 0) {
    switch (rng.upto(4)) {
      case 0: return fone();
      case 1: return fbot();
      case 2: return ftop();
      default: return fvar(vars[rng.upto(vars.size())]);
    }
  }
  switch (rng.upto(5)) {
    case 0: return fprod(random_formula(rng, depth - 1, vars),
                         random_formula(rng, depth - 1, vars));
    case 1: return fmeet(random_formula(rng, depth - 1, vars),
                         random_formula(rng, depth - 1, vars));
    case 2: return fjoin(random_formula(rng, depth - 1, vars),
                         random_formula(rng, depth - 1, vars));
    case 3: return fdia(random_formula(rng, depth - 1, vars));
    default: return fbox(random_formula(rng, depth - 1, vars));
  }
}

inline StructPtr random_struct(Rng& rng, std::size_t depth,
                               const std::vector<std::string>& vars) {
  if (depth == 0 || rng.upto(4) == 0) {
    if (rng.upto(4) == 0) return seps();
    return satom(random_formula(rng, depth == 0 ? 0 : depth - 1, vars));
  }
  switch (rng.upto(3)) {
    case 0: return scomma(random_struct(rng, depth - 1, vars),
                          random_struct(rng, depth - 1, vars));
    case 1: return scap(random_struct(rng, depth - 1, vars),
                        random_struct(rng, depth - 1, vars));
    default: return sangle(random_struct(rng, depth - 1, vars));
  }
}

inline Sequent random_sequent(Rng& rng, std::size_t depth,
                              const std::vector<std::string>& vars) {
  return Sequent{random_struct(rng, depth, vars), random_formula(rng, depth, vars)};
}

inline std::string random_word(Rng& rng, const std::string& alphabet, std::size_t max_len) {
  std::size_t len = rng.upto(max_len + 1);
  std::string w;
  for (std::size_t i = 0; i < len; ++i) w += alphabet[rng.upto(alphabet.size())];
  return w;
}

}  // namespace lmc
