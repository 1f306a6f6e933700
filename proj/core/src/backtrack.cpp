// SPDX-License-Identifier: Apache-2.0

#include "forget/backtrack.hpp"

#include <algorithm>
#include <optional>

namespace forget {

namespace {

// Drops satisfied clauses and deletes falsified literals.
std::vector<Clause> simplify(std::span<const Clause> clauses, const PartialModel& model) {
  std::vector<Clause> out;
  out.reserve(clauses.size());
  for (const Clause& c : clauses) {
    bool satisfied = false;
    bool touched = false;
    for (Literal l : c) {
      if (model.satisfies(l)) {
        satisfied = true;
        break;
      }
      touched = touched || model.falsifies(l);
    }
    if (satisfied) continue;
    if (!touched) {
      out.push_back(c);
      continue;
    }
    std::vector<Literal> rest;
    for (Literal l : c)
      if (!model.falsifies(l)) rest.push_back(l);
    out.emplace_back(std::move(rest));
  }
  return out;
}

bool has_empty(std::span<const Clause> clauses) {
  return std::any_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.empty(); });
}

}  // namespace

Propagation propagate(const PartialModel& i, const Formula& f, const VarSet& v, Meter* meter) {
  Propagation out;
  out.model = i;
  std::vector<Clause> current = simplify(f.clauses(), out.model);
  for (;;) {
    if (has_empty(current)) {
      out.verdict = Verdict::False;
      break;
    }
    if (current.empty()) {
      out.verdict = Verdict::True;
      break;
    }
    const auto unit = std::find_if(current.begin(), current.end(), [&](const Clause& c) {
      return c.size() == 1 && v.contains(c.literals().front().variable());
    });
    if (unit == current.end()) {
      out.verdict = Verdict::Undef;
      break;
    }
    out.model.assign(unit->literals().front());
    if (meter) meter->tick(1);
    current = simplify(current, out.model);
  }
  out.formula = Formula(std::move(current));
  return out;
}

namespace {

class BacktrackSearch {
 public:
  BacktrackSearch(const VarSet& v, std::size_t depth_limit, Meter& meter, const Deadline& deadline,
                  BacktrackStats* stats)
      : forget_(v), depth_limit_(depth_limit), meter_(meter), deadline_(deadline), stats_(stats) {}

  SearchOutcome node(const PartialModel& i, const Formula& f, std::size_t depth) {
    deadline_.check(meter_);
    meter_.tick(1);
    if (depth > depth_limit_) throw ContractError("backtracking deeper than the variable count");
    if (stats_) {
      ++stats_->nodes;
      stats_->max_depth = std::max(stats_->max_depth, depth);
    }

    Propagation p = propagate(i, f, forget_, &meter_);
    const std::uint64_t cells = p.formula.literal_count();
    stack_cells_ += cells;
    meter_.snapshot_memory(stack_cells_ + p.model.size());
    struct Release {
      std::uint64_t& total;
      std::uint64_t amount;
      ~Release() { total -= amount; }
    } release{stack_cells_, cells};

    if (p.verdict == Verdict::True) return {SearchOutcome::Tag::Sat, {}};
    if (p.verdict == Verdict::False) return {SearchOutcome::Tag::Unsat, {}};

    const Variable branch = choose(p.formula);
    PartialModel with_true = p.model;
    with_true.assign(Literal(branch, true));
    PartialModel with_false = p.model;
    with_false.assign(Literal(branch, false));
    SearchOutcome t = node(with_true, p.formula, depth + 1);
    SearchOutcome u = node(with_false, p.formula, depth + 1);
    return combine(branch, p.model, std::move(t), std::move(u));
  }

 private:
  using Tag = SearchOutcome::Tag;

  // Remembered variable in a unit clause, else any remembered variable, else
  // a variable to forget; lowest name first within each tier.
  Variable choose(const Formula& f) const {
    std::optional<Variable> unit;
    std::optional<Variable> remembered;
    std::optional<Variable> forgotten;
    auto better = [](const std::optional<Variable>& cur, Variable cand) {
      return !cur || name_less(cand, *cur);
    };
    for (const Clause& c : f) {
      for (Literal l : c) {
        const Variable x = l.variable();
        if (forget_.contains(x)) {
          if (better(forgotten, x)) forgotten = x;
          continue;
        }
        if (better(remembered, x)) remembered = x;
        if (c.size() == 1 && better(unit, x)) unit = x;
      }
    }
    if (unit) return *unit;
    if (remembered) return *remembered;
    return *forgotten;
  }

  SearchOutcome combine(Variable branch, const PartialModel& model, SearchOutcome t,
                        SearchOutcome u) {
    if (t.tag == Tag::Unsat && u.tag == Tag::Unsat) return {Tag::Unsat, {}};
    if (forget_.contains(branch)) {
      if (stats_ && (t.tag == Tag::Clauses || u.tag == Tag::Clauses))
        ++stats_->clauses_below_forget_branch;
      return {Tag::Sat, {}};
    }
    SearchOutcome out{Tag::Clauses, {}};
    auto keep = [&](Variable x) { return !forget_.contains(x); };
    auto absorb = [&](SearchOutcome& child) {
      for (Clause& c : child.clauses) out.clauses.push_back(std::move(c));
    };
    if (t.tag == Tag::Unsat || u.tag == Tag::Unsat) {
      PartialModel failing = model;
      failing.assign(Literal(branch, t.tag == Tag::Unsat));
      out.clauses.push_back(failing.negation(keep));
    }
    absorb(t);
    absorb(u);
    return out;
  }

  const VarSet& forget_;
  std::size_t depth_limit_;
  Meter& meter_;
  const Deadline& deadline_;
  BacktrackStats* stats_;
  std::uint64_t stack_cells_ = 0;
};

}  // namespace

SearchOutcome forget_backtrack(const PartialModel& i, const Formula& f, const VarSet& v,
                               Meter& meter, const Deadline& deadline,
                               const BacktrackOptions& options) {
  BacktrackSearch search(v, f.variables().size(), meter, deadline, options.stats);
  SearchOutcome out = search.node(i, f, 0);
  meter.checkpoint();
  return out;
}

Formula forget_backtracking(const Formula& f, const VarSet& v, Meter& meter,
                            const Deadline& deadline, const BacktrackOptions& options) {
  SearchOutcome out = forget_backtrack(PartialModel{}, f, v, meter, deadline, options);
  switch (out.tag) {
    case SearchOutcome::Tag::Sat:
      return Formula{};
    case SearchOutcome::Tag::Unsat:
      return Formula{Clause{}};
    case SearchOutcome::Tag::Clauses:
      break;
  }
  Formula result(std::move(out.clauses));
  if (meter.tracing()) meter.note(std::to_string(result.size()) + " clauses from backtracking");
  return result;
}

}  // namespace forget
