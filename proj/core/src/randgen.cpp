// SPDX-License-Identifier: Apache-2.0

#include "forget/randgen.hpp"

#include <array>
#include <numeric>
#include <random>

namespace forget {

namespace {

// Unbiased draw in [0, bound) by rejecting the low 2^64 mod bound values.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace

VarSet letters(unsigned count) {
  std::vector<Variable> vars;
  for (unsigned k = 0; k < count; ++k) vars.emplace_back(std::string(1, static_cast<char>('a' + k)));
  return VarSet(std::move(vars));
}

Formula generate(unsigned num_vars, unsigned num_clauses, std::uint64_t seed) {
  if (num_vars < 3 || num_vars > 26) throw ContractError("generate: num_vars must be in 3..26");
  if (num_clauses == 0) throw ContractError("generate: num_clauses must be positive");

  const VarSet alphabet = letters(num_vars);
  const auto vars = alphabet.sorted_by_name();
  std::mt19937_64 rng(seed);
  std::vector<unsigned> pool(num_vars);
  std::vector<Clause> clauses;
  clauses.reserve(num_clauses);
  for (unsigned k = 0; k < num_clauses; ++k) {
    std::iota(pool.begin(), pool.end(), 0u);
    std::array<Literal, 3> lits;
    for (unsigned slot = 0; slot < 3; ++slot) {
      // Partial Fisher-Yates: pick among the not yet chosen positions.
      const auto pick = slot + static_cast<unsigned>(draw_below(rng, num_vars - slot));
      std::swap(pool[slot], pool[pick]);
      const bool positive = (rng() >> 63) == 0;
      lits[slot] = Literal(vars[pool[slot]], positive);
    }
    clauses.emplace_back(std::vector<Literal>(lits.begin(), lits.end()));
  }
  return Formula(std::move(clauses));
}

}  // namespace forget
