// SPDX-License-Identifier: Apache-2.0
//
// Shared helpers for the tests. The checks here deliberately avoid the
// library's own oracle and evaluation code so they can be used to judge it.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "forget/formula_io.hpp"
#include "forget/logic.hpp"

namespace forget::testing {

inline Formula F(const std::string& text) { return parse_formula(text); }

inline Clause C(const std::string& token) {
  const Formula f = parse_formula(token);
  if (f.size() != 1) throw std::invalid_argument("not a single clause: " + token);
  return *f.begin();
}

inline VarSet V(const std::string& text) { return parse_variables(text); }

inline Variable var(char c) { return Variable(std::string(1, c)); }

/// Random clauses of length 1..max_len over the first `vars` letters. Clause
/// lengths vary, so literals may repeat and tautologies may appear.
inline Formula random_formula(std::mt19937_64& rng, unsigned vars, unsigned clauses,
                              unsigned max_len = 4) {
  std::uniform_int_distribution<unsigned> pick_var(0, vars - 1);
  std::uniform_int_distribution<unsigned> pick_len(1, max_len);
  std::vector<Clause> out;
  for (unsigned i = 0; i < clauses; ++i) {
    std::vector<Literal> lits;
    const unsigned len = pick_len(rng);
    for (unsigned k = 0; k < len; ++k)
      lits.emplace_back(var(static_cast<char>('a' + pick_var(rng))), (rng() & 1u) == 0);
    out.emplace_back(std::move(lits));
  }
  return Formula(std::move(out));
}

/// Like random_formula, without tautological clauses.
inline Formula random_clean_formula(std::mt19937_64& rng, unsigned vars, unsigned clauses,
                                    unsigned max_len = 4) {
  std::vector<Clause> out;
  for (const Clause& c : random_formula(rng, vars, clauses, max_len)) {
    bool taut = false;
    for (Literal l : c) taut = taut || c.contains(~l);
    if (!taut) out.push_back(c);
  }
  return Formula(std::move(out));
}

/// Quadratic reference for minimize: keep c unless some other clause is a
/// proper subset of it.
inline Formula all_pairs_minimize(const Formula& f) {
  std::vector<Clause> out;
  for (const Clause& c : f) {
    bool dominated = false;
    for (const Clause& d : f) {
      if (d == c) continue;
      const bool subset = std::all_of(d.begin(), d.end(), [&](Literal l) {
        return std::find(c.begin(), c.end(), l) != c.end();
      });
      dominated = dominated || subset;
    }
    if (!dominated) out.push_back(c);
  }
  return Formula(std::move(out));
}

/// Truth-table helper over an explicit list of single-letter variables.
class Table {
 public:
  explicit Table(std::string letters) : letters_(std::move(letters)) {}

  [[nodiscard]] std::size_t width() const { return letters_.size(); }

  /// Truth value of `f` when bit i of `bits` gives letters_[i].
  [[nodiscard]] bool eval(const Formula& f, std::uint32_t bits) const {
    for (const Clause& c : f) {
      bool sat = false;
      for (Literal l : c) {
        const auto pos = letters_.find(l.variable().name());
        if (pos == std::string::npos) throw std::invalid_argument("unknown variable");
        const bool value = ((bits >> pos) & 1u) != 0;
        sat = sat || (value == l.positive());
      }
      if (!sat) return false;
    }
    return true;
  }

 private:
  std::string letters_;
};

inline std::string letters_of(const Formula& f) {
  std::string out;
  for (const Clause& c : f)
    for (Literal l : c)
      if (out.find(l.variable().name()) == std::string::npos) out += l.variable().name();
  std::sort(out.begin(), out.end());
  return out;
}

/// True iff `g` mentions no letter of `forgotten` and, for every assignment
/// of the other letters of `f` and `g`, g holds exactly when f can be
/// satisfied by some choice of the forgotten letters.
inline bool is_forgetting(const Formula& f, const std::string& forgotten, const Formula& g) {
  std::string kept;
  for (char c : letters_of(f) + letters_of(g))
    if (forgotten.find(c) == std::string::npos && kept.find(c) == std::string::npos) kept += c;
  for (char c : letters_of(g))
    if (forgotten.find(c) != std::string::npos) return false;
  std::string hidden;
  for (char c : letters_of(f))
    if (forgotten.find(c) != std::string::npos) hidden += c;
  const Table table(kept + hidden);
  const std::uint32_t kept_n = static_cast<std::uint32_t>(kept.size());
  for (std::uint32_t j = 0; j < (1u << kept_n); ++j) {
    bool exists = false;
    for (std::uint32_t h = 0; h < (1u << hidden.size()) && !exists; ++h)
      exists = table.eval(f, j | (h << kept_n));
    if (exists != table.eval(g, j)) return false;
  }
  return true;
}

/// Same truth value on every assignment of the letters of both formulas.
inline bool same_models(const Formula& f, const Formula& g) { return is_forgetting(f, "", g); }

inline std::string first_letters(unsigned k) { return std::string("abcdefghijklmnopqrstuvwxyz").substr(0, k); }

}  // namespace forget::testing
