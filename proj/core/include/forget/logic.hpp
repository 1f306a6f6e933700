// SPDX-License-Identifier: Apache-2.0
//
// Propositional value types: variables, literals, clauses, formulas, variable
// sets and partial models, plus the clause-level operations every forgetting
// algorithm shares (resolution, tautology and subsumption tests,
// minimization) and truth-table evaluation.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace forget {

class Meter;
class Deadline;

/// A precondition of an operation was violated by the caller.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A brute-force enumeration would exceed its variable guard.
class EnumerationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Variable

/// A propositional variable. Names are interned process-wide; the handle is a
/// dense index so that clauses stay cheap to compare and hash. The 26 lower
/// case letters are interned first, so for them index order is name order.
class Variable {
 public:
  constexpr Variable() = default;

  /// Interns `name`. Throws ContractError on an empty name.
  explicit Variable(std::string_view name);

  static Variable from_index(std::uint32_t index);

  [[nodiscard]] constexpr std::uint32_t index() const noexcept { return index_; }
  [[nodiscard]] const std::string& name() const;

  friend constexpr auto operator<=>(Variable, Variable) = default;

 private:
  constexpr explicit Variable(std::uint32_t index, int) : index_(index) {}
  std::uint32_t index_ = 0;
};

/// Canonical variable order: by name.
bool name_less(Variable a, Variable b);

// ---------------------------------------------------------------------------
// Literal

class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(Variable v, bool positive)
      : code_((v.index() << 1) | (positive ? 0u : 1u)) {}

  static constexpr Literal from_code(std::uint32_t code) {
    Literal l;
    l.code_ = code;
    return l;
  }

  [[nodiscard]] Variable variable() const { return Variable::from_index(code_ >> 1); }
  [[nodiscard]] constexpr std::uint32_t var_index() const noexcept { return code_ >> 1; }
  [[nodiscard]] constexpr bool positive() const noexcept { return (code_ & 1u) == 0; }
  [[nodiscard]] constexpr std::uint32_t code() const noexcept { return code_; }

  constexpr Literal operator~() const { return from_code(code_ ^ 1u); }

  friend constexpr auto operator<=>(Literal, Literal) = default;

 private:
  std::uint32_t code_ = 0;
};

// ---------------------------------------------------------------------------
// Clause

/// A set of literals read as a disjunction. The empty clause is ⊥. Literals
/// are kept sorted by (variable index, polarity) and duplicate-free; a 64-bit
/// abstraction of the literal codes speeds up subset tests.
class Clause {
 public:
  Clause() = default;
  Clause(std::initializer_list<Literal> lits);
  explicit Clause(std::vector<Literal> lits);

  [[nodiscard]] std::span<const Literal> literals() const noexcept { return lits_; }
  [[nodiscard]] std::size_t size() const noexcept { return lits_.size(); }
  [[nodiscard]] bool empty() const noexcept { return lits_.empty(); }
  [[nodiscard]] std::uint64_t abstraction() const noexcept { return abstraction_; }

  [[nodiscard]] bool contains(Literal l) const;
  [[nodiscard]] bool mentions(Variable v) const;
  /// The literal of `v` in this clause, if any (the positive one first).
  [[nodiscard]] std::optional<Literal> literal_of(Variable v) const;

  auto begin() const noexcept { return lits_.begin(); }
  auto end() const noexcept { return lits_.end(); }

  friend bool operator==(const Clause& a, const Clause& b) { return a.lits_ == b.lits_; }
  friend auto operator<=>(const Clause& a, const Clause& b) { return a.lits_ <=> b.lits_; }

 private:
  void normalize();

  std::vector<Literal> lits_;
  std::uint64_t abstraction_ = 0;
};

struct ClauseHash {
  std::size_t operator()(const Clause& c) const noexcept;
};

// ---------------------------------------------------------------------------
// VarSet

/// A set of variables with constant-time membership.
class VarSet {
 public:
  VarSet() = default;
  VarSet(std::initializer_list<Variable> vars);
  explicit VarSet(std::vector<Variable> vars);

  [[nodiscard]] bool contains(Variable v) const noexcept {
    return v.index() < member_.size() && member_[v.index()];
  }
  [[nodiscard]] std::size_t size() const noexcept { return vars_.size(); }
  [[nodiscard]] bool empty() const noexcept { return vars_.empty(); }
  /// Members sorted by index.
  [[nodiscard]] std::span<const Variable> variables() const noexcept { return vars_; }
  /// Members sorted by name.
  [[nodiscard]] std::vector<Variable> sorted_by_name() const;

  [[nodiscard]] VarSet minus(const VarSet& other) const;
  [[nodiscard]] VarSet intersect(const VarSet& other) const;
  [[nodiscard]] VarSet unite(const VarSet& other) const;

  auto begin() const noexcept { return vars_.begin(); }
  auto end() const noexcept { return vars_.end(); }

  friend bool operator==(const VarSet& a, const VarSet& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<Variable> vars_;
  std::vector<bool> member_;
};

// ---------------------------------------------------------------------------
// Formula

/// A set of clauses read as a conjunction. The empty formula is true.
/// Clauses are kept sorted and duplicate-free, so equality is set equality.
class Formula {
 public:
  Formula() = default;
  Formula(std::initializer_list<Clause> clauses);
  explicit Formula(std::vector<Clause> clauses);

  [[nodiscard]] std::span<const Clause> clauses() const noexcept { return clauses_; }
  [[nodiscard]] std::size_t size() const noexcept { return clauses_.size(); }
  [[nodiscard]] bool empty() const noexcept { return clauses_.empty(); }
  [[nodiscard]] bool contains(const Clause& c) const;
  /// True when ⊥ is one of the clauses.
  [[nodiscard]] bool has_empty_clause() const noexcept {
    return !clauses_.empty() && clauses_.front().empty();
  }
  /// Total number of literal occurrences.
  [[nodiscard]] std::size_t literal_count() const noexcept;
  /// The alphabet: every variable mentioned by some clause.
  [[nodiscard]] VarSet variables() const;

  auto begin() const noexcept { return clauses_.begin(); }
  auto end() const noexcept { return clauses_.end(); }

  friend bool operator==(const Formula& a, const Formula& b) { return a.clauses_ == b.clauses_; }

 private:
  std::vector<Clause> clauses_;
};

// ---------------------------------------------------------------------------
// PartialModel

/// A consistent set of literals, at most one per variable, remembered in
/// assignment order.
class PartialModel {
 public:
  PartialModel() = default;
  PartialModel(std::initializer_list<Literal> lits);

  /// Adds `l`. Assigning the opposite of an already assigned literal is a
  /// ContractError; re-assigning the same literal is a no-op.
  void assign(Literal l);

  [[nodiscard]] std::optional<bool> value(Variable v) const noexcept;
  [[nodiscard]] bool assigned(Variable v) const noexcept { return value(v).has_value(); }
  [[nodiscard]] bool satisfies(Literal l) const noexcept;
  [[nodiscard]] bool falsifies(Literal l) const noexcept;

  [[nodiscard]] std::span<const Literal> literals() const noexcept { return trail_; }
  [[nodiscard]] std::size_t size() const noexcept { return trail_.size(); }
  [[nodiscard]] bool empty() const noexcept { return trail_.empty(); }

  /// ¬I restricted to the variables `keep` accepts: the clause falsified
  /// exactly by those literals of the model.
  [[nodiscard]] Clause negation(const std::function<bool(Variable)>& keep) const;
  [[nodiscard]] Clause negation() const;

 private:
  std::vector<Literal> trail_;
  std::vector<std::int8_t> values_;  // 0 unassigned, 1 true, -1 false
};

// ---------------------------------------------------------------------------
// Occurrence index

/// For every literal, the ids of the clauses containing it. Ids are positions
/// in whatever clause store the owner keeps; removal is the owner's business
/// (entries may be left stale and skipped).
class OccurrenceIndex {
 public:
  OccurrenceIndex() = default;
  explicit OccurrenceIndex(std::span<const Clause> clauses);

  void add(std::uint32_t id, const Clause& c);
  [[nodiscard]] std::span<const std::uint32_t> occurrences(Literal l) const noexcept;

 private:
  std::vector<std::vector<std::uint32_t>> occ_;
};

// ---------------------------------------------------------------------------
// Operations

[[nodiscard]] bool is_tautology(const Clause& c);

/// c1 ⊆ c2.
[[nodiscard]] bool subsumes(const Clause& c1, const Clause& c2);

/// The resolvent of `c1` and `c2` on `x`, or nullopt when the resolvent is a
/// tautology. A premise holding both x and ¬x also gives nullopt: its
/// resolvent contains the other premise and adds nothing. Throws ContractError unless one clause contains x and the other
/// ¬x.
[[nodiscard]] std::optional<Clause> resolve(const Clause& c1, const Clause& c2, Variable x);

/// Drops every clause that strictly contains another one. Each clause is
/// compared only against strictly smaller kept clauses, smallest first. When
/// a meter is given it is charged one unit per subsumption comparison; when a
/// deadline is given it is checked once per clause.
[[nodiscard]] Formula minimize(const Formula& f);
[[nodiscard]] Formula minimize(const Formula& f, Meter& meter, const Deadline& deadline);

/// Truth value of `f` under a model assigning every variable of `f`. Throws
/// ContractError when some variable is unassigned.
[[nodiscard]] bool eval(const Formula& f, const PartialModel& assignment);

/// Maximum number of variables `entails` will enumerate.
inline constexpr std::size_t kEntailsVariableLimit = 24;

/// f ⊨ c, decided by enumerating the assignments of Var(f) ∪ Var(c).
[[nodiscard]] bool entails(const Formula& f, const Clause& c);

}  // namespace forget

template <>
struct std::hash<forget::Clause> : forget::ClauseHash {};
