// SPDX-License-Identifier: Apache-2.0

#include "forget/logic.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "forget/meter.hpp"

namespace forget {

namespace {

class NameTable {
 public:
  NameTable() {
    for (char c = 'a'; c <= 'z'; ++c) intern_locked(std::string(1, c));
  }

  std::uint32_t intern(std::string_view name) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    return intern_locked(std::string(name));
  }

  const std::string& name(std::uint32_t index) const {
    std::shared_lock lock(mutex_);
    if (index >= names_.size()) throw ContractError("unknown variable index");
    return names_[index];
  }

 private:
  std::uint32_t intern_locked(std::string name) {
    if (auto it = index_.find(name); it != index_.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(names_.size());
    names_.push_back(name);
    index_.emplace(std::move(name), id);
    return id;
  }

  mutable std::shared_mutex mutex_;
  std::deque<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

NameTable& names() {
  static NameTable table;
  return table;
}

}  // namespace

// ---------------------------------------------------------------------------

Variable::Variable(std::string_view name) {
  if (name.empty()) throw ContractError("variable name must be non-empty");
  index_ = names().intern(name);
}

Variable Variable::from_index(std::uint32_t index) { return Variable(index, 0); }

const std::string& Variable::name() const { return names().name(index_); }

bool name_less(Variable a, Variable b) {
  if (a == b) return false;
  return a.name() < b.name();
}

// ---------------------------------------------------------------------------

Clause::Clause(std::initializer_list<Literal> lits) : lits_(lits) { normalize(); }

Clause::Clause(std::vector<Literal> lits) : lits_(std::move(lits)) { normalize(); }

void Clause::normalize() {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
  abstraction_ = 0;
  for (Literal l : lits_) abstraction_ |= std::uint64_t{1} << (l.code() & 63u);
}

bool Clause::contains(Literal l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool Clause::mentions(Variable v) const { return literal_of(v).has_value(); }

std::optional<Literal> Clause::literal_of(Variable v) const {
  const Literal pos(v, true);
  auto it = std::lower_bound(lits_.begin(), lits_.end(), pos);
  if (it != lits_.end() && it->var_index() == v.index()) return *it;
  return std::nullopt;
}

std::size_t ClauseHash::operator()(const Clause& c) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ c.size();
  for (Literal l : c) {
    h ^= l.code() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------

VarSet::VarSet(std::initializer_list<Variable> vars) : VarSet(std::vector<Variable>(vars)) {}

VarSet::VarSet(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  if (!vars_.empty()) {
    member_.assign(vars_.back().index() + 1, false);
    for (Variable v : vars_) member_[v.index()] = true;
  }
}

std::vector<Variable> VarSet::sorted_by_name() const {
  std::vector<Variable> out = vars_;
  std::sort(out.begin(), out.end(), name_less);
  return out;
}

VarSet VarSet::minus(const VarSet& other) const {
  std::vector<Variable> out;
  for (Variable v : vars_)
    if (!other.contains(v)) out.push_back(v);
  return VarSet(std::move(out));
}

VarSet VarSet::intersect(const VarSet& other) const {
  std::vector<Variable> out;
  for (Variable v : vars_)
    if (other.contains(v)) out.push_back(v);
  return VarSet(std::move(out));
}

VarSet VarSet::unite(const VarSet& other) const {
  std::vector<Variable> out = vars_;
  out.insert(out.end(), other.vars_.begin(), other.vars_.end());
  return VarSet(std::move(out));
}

// ---------------------------------------------------------------------------

Formula::Formula(std::initializer_list<Clause> clauses)
    : Formula(std::vector<Clause>(clauses)) {}

Formula::Formula(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

bool Formula::contains(const Clause& c) const {
  return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

std::size_t Formula::literal_count() const noexcept {
  std::size_t n = 0;
  for (const Clause& c : clauses_) n += c.size();
  return n;
}

VarSet Formula::variables() const {
  std::vector<Variable> vars;
  for (const Clause& c : clauses_)
    for (Literal l : c) vars.push_back(l.variable());
  return VarSet(std::move(vars));
}

// ---------------------------------------------------------------------------

PartialModel::PartialModel(std::initializer_list<Literal> lits) {
  for (Literal l : lits) assign(l);
}

void PartialModel::assign(Literal l) {
  const auto idx = l.var_index();
  if (idx >= values_.size()) values_.resize(idx + 1, 0);
  const std::int8_t want = l.positive() ? 1 : -1;
  if (values_[idx] == want) return;
  if (values_[idx] != 0) throw ContractError("partial model would become inconsistent");
  values_[idx] = want;
  trail_.push_back(l);
}

std::optional<bool> PartialModel::value(Variable v) const noexcept {
  if (v.index() >= values_.size() || values_[v.index()] == 0) return std::nullopt;
  return values_[v.index()] > 0;
}

bool PartialModel::satisfies(Literal l) const noexcept {
  const auto idx = l.var_index();
  if (idx >= values_.size() || values_[idx] == 0) return false;
  return (values_[idx] > 0) == l.positive();
}

bool PartialModel::falsifies(Literal l) const noexcept { return satisfies(~l); }

Clause PartialModel::negation(const std::function<bool(Variable)>& keep) const {
  std::vector<Literal> lits;
  for (Literal l : trail_)
    if (keep(l.variable())) lits.push_back(~l);
  return Clause(std::move(lits));
}

Clause PartialModel::negation() const {
  return negation([](Variable) { return true; });
}

// ---------------------------------------------------------------------------

OccurrenceIndex::OccurrenceIndex(std::span<const Clause> clauses) {
  for (std::uint32_t id = 0; id < clauses.size(); ++id) add(id, clauses[id]);
}

void OccurrenceIndex::add(std::uint32_t id, const Clause& c) {
  for (Literal l : c) {
    if (l.code() >= occ_.size()) occ_.resize((l.code() | 1u) + 1);
    occ_[l.code()].push_back(id);
  }
}

std::span<const std::uint32_t> OccurrenceIndex::occurrences(Literal l) const noexcept {
  if (l.code() >= occ_.size()) return {};
  return occ_[l.code()];
}

// ---------------------------------------------------------------------------

bool is_tautology(const Clause& c) {
  // Sorted by code, so x and ¬x are adjacent.
  const auto lits = c.literals();
  for (std::size_t i = 1; i < lits.size(); ++i)
    if (lits[i - 1].var_index() == lits[i].var_index()) return true;
  return false;
}

bool subsumes(const Clause& c1, const Clause& c2) {
  if (c1.size() > c2.size()) return false;
  if ((c1.abstraction() & ~c2.abstraction()) != 0) return false;
  return std::includes(c2.begin(), c2.end(), c1.begin(), c1.end());
}

std::optional<Clause> resolve(const Clause& c1, const Clause& c2, Variable x) {
  const Literal pos(x, true);
  const Literal neg(x, false);
  const bool clash = (c1.contains(pos) && c2.contains(neg)) || (c1.contains(neg) && c2.contains(pos));
  if (!clash) throw ContractError("resolve: clauses do not clash on variable " + x.name());
  if ((c1.contains(pos) && c1.contains(neg)) || (c2.contains(pos) && c2.contains(neg))) return std::nullopt;
  std::vector<Literal> lits;
  lits.reserve(c1.size() + c2.size() - 2);
  std::set_union(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(lits));
  std::erase_if(lits, [&](Literal l) { return l.var_index() == x.index(); });
  for (std::size_t i = 1; i < lits.size(); ++i)
    if (lits[i - 1].var_index() == lits[i].var_index()) return std::nullopt;
  return Clause(std::move(lits));
}

namespace {

template <typename OnCompare, typename OnClause>
Formula minimize_impl(const Formula& f, OnCompare&& on_compare, OnClause&& on_clause) {
  std::vector<const Clause*> order;
  order.reserve(f.size());
  for (const Clause& c : f) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(),
                   [](const Clause* a, const Clause* b) { return a->size() < b->size(); });

  // kept[k] holds the surviving clauses of size k.
  std::vector<std::vector<const Clause*>> kept;
  std::vector<Clause> out;
  out.reserve(f.size());
  for (const Clause* c : order) {
    on_clause();
    bool redundant = false;
    const std::size_t limit = std::min(c->size(), kept.size());
    for (std::size_t k = 0; k < limit && !redundant; ++k) {
      for (const Clause* d : kept[k]) {
        on_compare();
        if (subsumes(*d, *c)) {
          redundant = true;
          break;
        }
      }
    }
    if (redundant) continue;
    if (kept.size() <= c->size()) kept.resize(c->size() + 1);
    kept[c->size()].push_back(c);
    out.push_back(*c);
  }
  return Formula(std::move(out));
}

}  // namespace

Formula minimize(const Formula& f) {
  return minimize_impl(f, [] {}, [] {});
}

Formula minimize(const Formula& f, Meter& meter, const Deadline& deadline) {
  return minimize_impl(
      f, [&] { meter.tick(1); }, [&] { deadline.check(meter); });
}

bool eval(const Formula& f, const PartialModel& assignment) {
  bool result = true;
  for (const Clause& c : f) {
    bool sat = false;
    for (Literal l : c) {
      if (!assignment.assigned(l.variable()))
        throw ContractError("eval: variable " + l.variable().name() + " is unassigned");
      sat = sat || assignment.satisfies(l);
    }
    result = result && sat;
  }
  return result;
}

namespace {

// Clauses as bitmasks over a local numbering of at most 32 variables.
struct MaskClause {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
};

}  // namespace

bool entails(const Formula& f, const Clause& c) {
  VarSet vars = f.variables().unite(Formula{c}.variables());
  if (vars.size() > kEntailsVariableLimit)
    throw EnumerationLimitError("entails: more than 24 variables");
  std::vector<std::uint32_t> local(vars.empty() ? 0 : vars.variables().back().index() + 1, 0);
  std::uint32_t next = 0;
  for (Variable v : vars) local[v.index()] = next++;
  auto to_mask = [&](const Clause& cl) {
    MaskClause m;
    for (Literal l : cl) (l.positive() ? m.pos : m.neg) |= 1u << local[l.var_index()];
    return m;
  };
  std::vector<MaskClause> masks;
  for (const Clause& cl : f) masks.push_back(to_mask(cl));
  const MaskClause goal = to_mask(c);
  const std::uint64_t total = std::uint64_t{1} << vars.size();
  for (std::uint64_t a = 0; a < total; ++a) {
    const auto bits = static_cast<std::uint32_t>(a);
    auto sat = [&](const MaskClause& m) { return ((m.pos & bits) | (m.neg & ~bits)) != 0; };
    if (sat(goal)) continue;
    if (std::all_of(masks.begin(), masks.end(), sat)) return false;
  }
  return true;
}

}  // namespace forget
