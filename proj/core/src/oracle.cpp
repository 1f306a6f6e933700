// SPDX-License-Identifier: Apache-2.0

#include "forget/oracle.hpp"

#include <algorithm>

namespace forget {

namespace {

struct MaskClause {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
};

// Maps variables to bit positions in the given order.
class LocalNumbering {
 public:
  explicit LocalNumbering(const std::vector<Variable>& order) {
    for (std::uint32_t k = 0; k < order.size(); ++k) {
      const auto idx = order[k].index();
      if (idx >= bit_.size()) bit_.resize(idx + 1, -1);
      bit_[idx] = static_cast<int>(k);
    }
  }

  bool covers(const Formula& f) const {
    for (const Clause& c : f)
      for (Literal l : c)
        if (l.var_index() >= bit_.size() || bit_[l.var_index()] < 0) return false;
    return true;
  }

  std::vector<MaskClause> masks(const Formula& f) const {
    std::vector<MaskClause> out;
    out.reserve(f.size());
    for (const Clause& c : f) {
      MaskClause m;
      for (Literal l : c) (l.positive() ? m.pos : m.neg) |= 1u << bit_[l.var_index()];
      out.push_back(m);
    }
    return out;
  }

 private:
  std::vector<int> bit_;
};

bool satisfied(const MaskClause& m, std::uint32_t bits) {
  return ((m.pos & bits) | (m.neg & ~bits)) != 0;
}

}  // namespace

Formula oracle_forget(const Formula& f, const VarSet& v) {
  const VarSet all = f.variables();
  const std::vector<Variable> kept = all.minus(v).sorted_by_name();
  const std::vector<Variable> dropped = all.intersect(v).sorted_by_name();
  if (kept.size() > kOracleVariableLimit)
    throw EnumerationLimitError("oracle_forget: more than 20 variables to remember");
  if (kept.size() + dropped.size() > 30)
    throw EnumerationLimitError("oracle_forget: more than 30 variables");

  std::vector<Variable> order = kept;
  order.insert(order.end(), dropped.begin(), dropped.end());
  const LocalNumbering numbering(order);
  const auto masks = numbering.masks(f);
  const auto r = static_cast<std::uint32_t>(kept.size());
  const std::uint32_t kept_mask = r == 0 ? 0u : (r >= 32 ? ~0u : ((1u << r) - 1));

  std::vector<Clause> out;
  std::vector<MaskClause> residual;
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << r); ++j) {
    const auto bits = static_cast<std::uint32_t>(j);
    // Clauses not satisfied by J, reduced to their forgotten literals.
    residual.clear();
    bool dead = false;
    for (const MaskClause& m : masks) {
      if (satisfied(MaskClause{m.pos & kept_mask, m.neg & kept_mask}, bits)) continue;
      MaskClause rest{m.pos & ~kept_mask, m.neg & ~kept_mask};
      if (rest.pos == 0 && rest.neg == 0) {
        dead = true;
        break;
      }
      residual.push_back(rest);
    }
    bool consistent = false;
    if (!dead) {
      const std::uint64_t count = std::uint64_t{1} << dropped.size();
      for (std::uint64_t k = 0; k < count && !consistent; ++k) {
        const auto full = static_cast<std::uint32_t>(k << r);
        consistent = std::all_of(residual.begin(), residual.end(),
                                 [&](const MaskClause& m) { return satisfied(m, full); });
      }
    }
    if (consistent) continue;
    std::vector<Literal> lits;
    for (std::uint32_t b = 0; b < r; ++b) lits.emplace_back(kept[b], ((bits >> b) & 1u) == 0);
    out.emplace_back(std::move(lits));
  }
  return Formula(std::move(out));
}

bool equivalent(const Formula& f, const Formula& g, const VarSet& vars) {
  if (vars.size() > kOracleVariableLimit)
    throw EnumerationLimitError("equivalent: more than 20 variables");
  const LocalNumbering numbering(std::vector<Variable>(vars.begin(), vars.end()));
  if (!numbering.covers(f) || !numbering.covers(g))
    throw ContractError("equivalent: formula mentions a variable outside the given set");
  const auto fm = numbering.masks(f);
  const auto gm = numbering.masks(g);
  const std::uint64_t total = std::uint64_t{1} << vars.size();
  for (std::uint64_t a = 0; a < total; ++a) {
    const auto bits = static_cast<std::uint32_t>(a);
    auto sat = [&](const MaskClause& m) { return satisfied(m, bits); };
    if (std::all_of(fm.begin(), fm.end(), sat) != std::all_of(gm.begin(), gm.end(), sat))
      return false;
  }
  return true;
}

}  // namespace forget
