// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "forget/logic.hpp"

namespace forget {

/// A total order on variables, given as a sequence from first to last.
///
/// Elimination processes variables in sequence order. Linear resolution reads
/// the sequence as ascending, so the last listed variable of a clause is the
/// maximal one and is resolved first.
class VariableOrder {
 public:
  /// Ascending by name.
  static VariableOrder ascending() { return VariableOrder(Kind::Ascending, {}); }
  /// Descending by name.
  static VariableOrder descending() { return VariableOrder(Kind::Descending, {}); }
  /// The listed variables first, in the given order; any other variable
  /// follows in ascending name order.
  static VariableOrder sequence(std::vector<Variable> vars) {
    return VariableOrder(Kind::Explicit, std::move(vars));
  }

  /// The members of `vars` arranged in this order.
  [[nodiscard]] std::vector<Variable> arrange(const VarSet& vars) const;

 private:
  enum class Kind { Ascending, Descending, Explicit };
  VariableOrder(Kind kind, std::vector<Variable> vars) : kind_(kind), explicit_(std::move(vars)) {}

  Kind kind_;
  std::vector<Variable> explicit_;
};

}  // namespace forget
