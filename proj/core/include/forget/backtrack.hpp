// SPDX-License-Identifier: Apache-2.0
//
// Forgetting by backtracking. Variables to remember are branched on before
// variables to forget; unit propagation is applied to variables to forget
// only. A clause is emitted at the highest node of the search tree that is
// unsatisfiable while its sibling is not, and contains only the remembered
// part of that node's assignment, negated.

#pragma once

#include <cstdint>
#include <vector>

#include "forget/logic.hpp"
#include "forget/meter.hpp"

namespace forget {

enum class Verdict { True, False, Undef };

struct Propagation {
  Verdict verdict = Verdict::Undef;
  PartialModel model;
  Formula formula;
};

/// Simplifies `f` under `i` (satisfied clauses dropped, falsified literals
/// deleted) and assigns the literal of every unit clause whose variable is in
/// `v`, until no such unit is left. The verdict is False when some clause is
/// empty, True when no clause is left. Each propagated literal charges one
/// unit when a meter is given.
[[nodiscard]] Propagation propagate(const PartialModel& i, const Formula& f, const VarSet& v,
                                    Meter* meter = nullptr);

struct SearchOutcome {
  enum class Tag { Sat, Unsat, Clauses };
  Tag tag = Tag::Sat;
  /// Meaningful only when tag == Clauses.
  std::vector<Clause> clauses;
};

struct BacktrackStats {
  std::uint64_t nodes = 0;
  std::size_t max_depth = 0;
  /// Branches on a variable to forget whose subtree produced clauses; always
  /// zero.
  std::uint64_t clauses_below_forget_branch = 0;
};

struct BacktrackOptions {
  BacktrackStats* stats = nullptr;
};

/// The recursive search from partial model `i`.
[[nodiscard]] SearchOutcome forget_backtrack(const PartialModel& i, const Formula& f,
                                             const VarSet& v, Meter& meter,
                                             const Deadline& deadline = {},
                                             const BacktrackOptions& options = {});

/// Search from the empty model; Sat maps to the empty formula and Unsat to
/// {⊥}.
[[nodiscard]] Formula forget_backtracking(const Formula& f, const VarSet& v, Meter& meter,
                                          const Deadline& deadline = {},
                                          const BacktrackOptions& options = {});

}  // namespace forget
