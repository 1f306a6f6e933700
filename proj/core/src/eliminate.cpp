// SPDX-License-Identifier: Apache-2.0

#include "forget/eliminate.hpp"

#include <string>
#include <unordered_set>

namespace forget {

namespace {

// Clause store with lazily cleaned occurrence lists.
class ClauseStore {
 public:
  explicit ClauseStore(const Formula& f) {
    for (const Clause& c : f) add(c);
  }

  void add(Clause c) {
    if (present_.contains(c)) return;
    const auto id = static_cast<std::uint32_t>(clauses_.size());
    index_.add(id, c);
    present_.insert(c);
    cells_ += c.size();
    clauses_.push_back(std::move(c));
    alive_.push_back(true);
  }

  void remove(std::uint32_t id) {
    if (!alive_[id]) return;
    alive_[id] = false;
    present_.erase(clauses_[id]);
    cells_ -= clauses_[id].size();
  }

  std::vector<std::uint32_t> live_occurrences(Literal l) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t id : index_.occurrences(l))
      if (alive_[id]) out.push_back(id);
    return out;
  }

  const Clause& operator[](std::uint32_t id) const { return clauses_[id]; }
  std::uint64_t cells() const noexcept { return cells_; }

  Formula snapshot() const {
    std::vector<Clause> out;
    for (std::size_t id = 0; id < clauses_.size(); ++id)
      if (alive_[id]) out.push_back(clauses_[id]);
    return Formula(std::move(out));
  }

 private:
  std::vector<Clause> clauses_;
  std::vector<bool> alive_;
  std::unordered_set<Clause> present_;
  OccurrenceIndex index_;
  std::uint64_t cells_ = 0;
};

}  // namespace

Formula forget_eliminate(const Formula& f, const VarSet& v, Meter& meter, const Deadline& deadline,
                         const EliminateOptions& options) {
  ClauseStore store(f);
  meter.snapshot_memory(store.cells());

  for (Variable x : options.order.arrange(v)) {
    const auto pos = store.live_occurrences(Literal(x, true));
    const auto neg = store.live_occurrences(Literal(x, false));
    std::vector<Clause> resolvents;
    for (std::uint32_t p : pos) {
      for (std::uint32_t n : neg) {
        deadline.check(meter);
        meter.tick(1);
        if (auto r = resolve(store[p], store[n], x)) resolvents.push_back(std::move(*r));
      }
    }
    for (std::uint32_t id : pos) store.remove(id);
    for (std::uint32_t id : neg) store.remove(id);
    for (Clause& r : resolvents) store.add(std::move(r));

    if (options.minimize_each_step) {
      Formula reduced = minimize(store.snapshot(), meter, deadline);
      store = ClauseStore(reduced);
    }
    meter.snapshot_memory(store.cells());
    meter.checkpoint();
    if (meter.tracing()) {
      meter.note("eliminated " + x.name() + ": " + std::to_string(pos.size()) + "x" +
                 std::to_string(neg.size()) + " pairs");
    }
  }
  return store.snapshot();
}

}  // namespace forget
