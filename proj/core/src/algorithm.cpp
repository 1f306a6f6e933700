// SPDX-License-Identifier: Apache-2.0

#include "forget/algorithm.hpp"

#include "forget/backtrack.hpp"
#include "forget/close.hpp"
#include "forget/eliminate.hpp"
#include "forget/linear.hpp"

namespace forget {

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Close:
      return "close";
    case Algorithm::Eliminate:
      return "eliminate";
    case Algorithm::Linear:
      return "linear";
    case Algorithm::Backtrack:
      return "backtrack";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms)
    if (algorithm_name(a) == name) return a;
  return std::nullopt;
}

Formula run_forget(Algorithm algorithm, const Formula& f, const VarSet& v, Meter& meter,
                   const Deadline& deadline, const ForgetOptions& options) {
  switch (algorithm) {
    case Algorithm::Close:
      return forget_close(f, v, meter, deadline);
    case Algorithm::Eliminate: {
      EliminateOptions opts;
      if (options.order) opts.order = *options.order;
      opts.minimize_each_step = options.minimize_each_step;
      return forget_eliminate(f, v, meter, deadline, opts);
    }
    case Algorithm::Linear: {
      LinearOptions opts;
      if (options.order) opts.order = *options.order;
      return forget_linear(f, v, meter, deadline, opts);
    }
    case Algorithm::Backtrack:
      return forget_backtracking(f, v, meter, deadline);
  }
  throw ContractError("unknown algorithm");
}

}  // namespace forget
