// SPDX-License-Identifier: Apache-2.0

#include "forget/close.hpp"

#include <string>
#include <unordered_set>

namespace forget {

Formula forget_close(const Formula& f, const VarSet& v, Meter& meter, const Deadline& deadline) {
  Formula previous;
  Formula current = f;
  meter.snapshot_memory(current.literal_count());
  std::size_t round = 0;
  while (current != previous) {
    previous = std::move(current);
    const auto clauses = previous.clauses();
    const OccurrenceIndex index(clauses);

    std::vector<Clause> next(clauses.begin(), clauses.end());
    std::unordered_set<Clause> added;
    std::uint64_t resolutions = 0;
    for (Variable x : previous.variables()) {
      const auto with_pos = index.occurrences(Literal(x, true));
      const auto with_neg = index.occurrences(Literal(x, false));
      for (std::uint32_t p : with_pos) {
        for (std::uint32_t n : with_neg) {
          deadline.check(meter);
          meter.tick(1);
          ++resolutions;
          auto r = resolve(clauses[p], clauses[n], x);
          if (!r || previous.contains(*r) || added.contains(*r)) continue;
          added.insert(*r);
          next.push_back(std::move(*r));
        }
      }
    }

    current = minimize(Formula(std::move(next)), meter, deadline);
    meter.snapshot_memory(current.literal_count());
    meter.checkpoint();
    if (meter.tracing()) {
      meter.note("round " + std::to_string(++round) + ": " + std::to_string(resolutions) +
                 " resolutions, " + std::to_string(current.size()) + " minimal clauses");
    }
  }

  std::vector<Clause> out;
  for (const Clause& c : previous) {
    bool keep = true;
    for (Literal l : c) keep = keep && !v.contains(l.variable());
    if (keep) out.push_back(c);
  }
  return Formula(std::move(out));
}

}  // namespace forget
