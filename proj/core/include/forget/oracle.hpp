// SPDX-License-Identifier: Apache-2.0
//
// Brute-force reference semantics. Exponential by construction; meant for
// checking the real algorithms on small inputs.

#pragma once

#include <cstddef>

#include "forget/logic.hpp"

namespace forget {

inline constexpr std::size_t kOracleVariableLimit = 20;

/// For every assignment J of the remembered variables (those of `f` outside
/// `v`) under which `f` is unsatisfiable, emits the clause ¬J. Throws
/// EnumerationLimitError with more than 20 remembered variables or more than
/// 30 variables overall.
[[nodiscard]] Formula oracle_forget(const Formula& f, const VarSet& v);

/// Same truth value under every assignment of `vars`. Throws
/// EnumerationLimitError past 20 variables and ContractError when a formula
/// mentions a variable outside `vars`.
[[nodiscard]] bool equivalent(const Formula& f, const Formula& g, const VarSet& vars);

}  // namespace forget
