// SPDX-License-Identifier: Apache-2.0
//
// Forgetting by A-ordering linear resolution. A center clause is resolved on
// the maximal (under the A-ordering) of its variables to forget; resolution
// stops as soon as the center mentions no variable to forget, and the center
// is then part of the result. Only variables to forget are ever resolved on.
//
// Side clauses are input clauses, plus ancestor centers whose resolvent with
// the current center is contained in that center. A branch is cut when its
// center repeats or contains an ancestor, or contains a clause already found.

#pragma once

#include <cstdint>
#include <vector>

#include "forget/logic.hpp"
#include "forget/meter.hpp"
#include "forget/order.hpp"

namespace forget {

struct LinearStats {
  std::uint64_t resolutions = 0;
  /// Resolutions on a variable outside the forget set; always zero.
  std::uint64_t resolutions_off_forget_set = 0;
  std::uint64_t cycle_cuts = 0;
  std::uint64_t subsumption_cuts = 0;
  std::size_t max_line_length = 0;
};

struct LinearOptions {
  /// Ascending A-ordering; the default resolves first on the variable whose
  /// name comes first.
  VariableOrder order = VariableOrder::descending();
  LinearStats* stats = nullptr;
};

/// Clause-level search. `line` holds the center clauses of the current
/// branch (ancestors of `c`); it is restored before returning.
[[nodiscard]] Formula forget_linear_clause(const Clause& c, const Formula& s, const VarSet& v,
                                           std::vector<Clause>& line, Meter& meter,
                                           const Deadline& deadline = {},
                                           const LinearOptions& options = {});

/// The union of forget_linear_clause over every clause of `f`, with `f` as
/// the side-clause formula.
[[nodiscard]] Formula forget_linear(const Formula& f, const VarSet& v, Meter& meter,
                                    const Deadline& deadline = {},
                                    const LinearOptions& options = {});

}  // namespace forget
