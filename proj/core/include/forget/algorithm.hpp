// SPDX-License-Identifier: Apache-2.0
//
// Uniform entry point over the four forgetting algorithms.

#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "forget/logic.hpp"
#include "forget/meter.hpp"
#include "forget/order.hpp"

namespace forget {

enum class Algorithm { Close, Eliminate, Linear, Backtrack };

inline constexpr std::array<Algorithm, 4> kAllAlgorithms = {
    Algorithm::Close, Algorithm::Eliminate, Algorithm::Linear, Algorithm::Backtrack};

[[nodiscard]] std::string_view algorithm_name(Algorithm a);
[[nodiscard]] std::optional<Algorithm> parse_algorithm(std::string_view name);

struct ForgetOptions {
  /// Elimination order or A-ordering; each algorithm's default when unset.
  std::optional<VariableOrder> order;
  /// Eliminate only: minimize after every variable.
  bool minimize_each_step = false;
};

[[nodiscard]] Formula run_forget(Algorithm algorithm, const Formula& f, const VarSet& v,
                                 Meter& meter, const Deadline& deadline = {},
                                 const ForgetOptions& options = {});

}  // namespace forget
