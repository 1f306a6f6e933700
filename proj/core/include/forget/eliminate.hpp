// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "forget/logic.hpp"
#include "forget/meter.hpp"
#include "forget/order.hpp"

namespace forget {

struct EliminateOptions {
  VariableOrder order = VariableOrder::ascending();
  /// Minimize the clause set after each eliminated variable. Off by default.
  bool minimize_each_step = false;
};

/// Forgetting by variable elimination (directional resolution): for each x
/// of `v` in order, the clauses containing x and those containing ¬x are
/// replaced by all their non-tautological resolvents on x.
///
/// Only the pairs that resolve are charged, one unit each.
[[nodiscard]] Formula forget_eliminate(const Formula& f, const VarSet& v, Meter& meter,
                                       const Deadline& deadline = {},
                                       const EliminateOptions& options = {});

}  // namespace forget
