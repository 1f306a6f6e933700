// SPDX-License-Identifier: Apache-2.0
//
// Text syntax for formulas.
//
//   abc        the clause a ∨ b ∨ c (one clause per whitespace-separated token)
//   -a         a negated variable
//   &name;     a variable with a multi-character name
//   ab->cd     ¬a ∨ ¬b ∨ c ∨ d
//   ab=cd      the two clauses of ab->cd and cd->ab
//   !          the empty clause ⊥
//
// Lines whose first non-blank character is '#' are comments.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "forget/logic.hpp"

namespace forget {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t token_index, const std::string& message);
  /// Zero-based index of the offending token.
  [[nodiscard]] std::size_t token_index() const noexcept { return token_index_; }

 private:
  std::size_t token_index_;
};

[[nodiscard]] Formula parse_formula(std::string_view text);

/// Parses a string of variables such as "bd" or "&v1;&v2;". Negations and
/// arrows are rejected.
[[nodiscard]] VarSet parse_variables(std::string_view text);

/// As parse_variables, keeping the written order and dropping repeats.
[[nodiscard]] std::vector<Variable> parse_variable_sequence(std::string_view text);

/// A single clause in plain-sequence form, literals in name order; "!" for ⊥.
[[nodiscard]] std::string serialize_clause(const Clause& c);

/// One clause per line in name-canonical order, each line newline-terminated.
/// The empty formula serializes to "".
[[nodiscard]] std::string serialize_formula(const Formula& f);

/// Name-canonical clause order used by serialize_formula.
[[nodiscard]] bool canonical_less(const Clause& a, const Clause& b);

}  // namespace forget
