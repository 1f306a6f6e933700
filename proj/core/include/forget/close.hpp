// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "forget/logic.hpp"
#include "forget/meter.hpp"

namespace forget {

/// Forgetting by resolution closure.
///
/// Starting from `f`, every pair of clauses that clash on some variable is
/// resolved and the union of old clauses and resolvents is minimized; this
/// repeats until the clause set stops changing. The result is the set of
/// fixpoint clauses that mention no variable of `v`, which is minimized by
/// construction.
///
/// Charges one unit per resolution and one per subsumption comparison;
/// snapshots memory after every round. Throws TimeoutError once `deadline`
/// passes (checked before each resolution).
[[nodiscard]] Formula forget_close(const Formula& f, const VarSet& v, Meter& meter,
                                   const Deadline& deadline = {});

}  // namespace forget
