// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>

#include "forget/logic.hpp"

namespace forget {

/// Identifier of the generation algorithm; changes whenever the same seed
/// would produce a different formula.
inline constexpr std::string_view kGeneratorId = "mt19937_64-rejection-3cnf-v1";

/// Random 3-CNF: `num_clauses` draws of a clause over three distinct
/// variables taken uniformly from the first `num_vars` letters, each with a
/// uniform polarity. Duplicate draws collapse. Throws ContractError unless
/// 3 <= num_vars <= 26 and num_clauses >= 1.
[[nodiscard]] Formula generate(unsigned num_vars, unsigned num_clauses, std::uint64_t seed);

/// The first `count` letters, as used by the generator.
[[nodiscard]] VarSet letters(unsigned count);

}  // namespace forget
