// SPDX-License-Identifier: Apache-2.0

#include "forget/linear.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace forget {

namespace {

class LinearSearch {
 public:
  LinearSearch(const Formula& s, const VarSet& v, Meter& meter, const Deadline& deadline,
               const LinearOptions& options)
      : side_(s.clauses()),
        index_(side_),
        forget_(v),
        meter_(meter),
        deadline_(deadline),
        stats_(options.stats),
        base_cells_(s.literal_count()) {
    const auto order = options.order.arrange(v);
    for (std::size_t k = 0; k < order.size(); ++k) {
      const auto idx = order[k].index();
      if (idx >= rank_.size()) rank_.resize(idx + 1, 0);
      rank_[idx] = k + 1;
    }
  }

  void expand(const Clause& center, std::vector<Clause>& line) {
    deadline_.check(meter_);
    meter_.snapshot_memory(base_cells_ + line_cells_ + result_cells_);

    const auto selected = select(center);
    if (!selected) {
      if (result_.insert(center).second) result_cells_ += center.size();
      return;
    }
    if (std::find(line.begin(), line.end(), center) != line.end()) {
      if (stats_) ++stats_->cycle_cuts;
      return;
    }
    // A center that contains an ancestor, or a clause already in the result,
    // cannot lead to anything new.
    const auto covers = [&](const Clause& d) { return subsumes(d, center); };
    if (std::any_of(line.begin(), line.end(), covers) ||
        std::any_of(result_.begin(), result_.end(), covers)) {
      if (stats_) ++stats_->subsumption_cuts;
      return;
    }

    const Literal l = *selected;
    const Variable x = l.variable();
    line.push_back(center);
    line_cells_ += center.size();
    if (stats_) stats_->max_line_length = std::max(stats_->max_line_length, line.size());

    for (std::uint32_t id : index_.occurrences(~l)) step(center, side_[id], x, line);
    // Earlier centers on this branch may serve as side clauses too.
    const std::size_t ancestors = line.size() - 1;
    for (std::size_t k = 0; k < ancestors; ++k) {
      if (!line[k].contains(~l)) continue;
      // Only ancestors whose resolvent merges back into the center.
      const Clause side = line[k];
      const auto merged = resolve(center, side, x);
      if (!merged || !subsumes(*merged, center)) continue;
      step(center, side, x, line);
    }

    line_cells_ -= center.size();
    line.pop_back();
  }

  void step(const Clause& center, const Clause& side, Variable x, std::vector<Clause>& line) {
    deadline_.check(meter_);
    meter_.tick(1);
    if (stats_) {
      ++stats_->resolutions;
      if (!forget_.contains(x)) ++stats_->resolutions_off_forget_set;
    }
    if (auto r = resolve(center, side, x)) expand(*r, line);
  }

  Formula result() const { return Formula(std::vector<Clause>(result_.begin(), result_.end())); }

 private:
  std::optional<Literal> select(const Clause& c) const {
    std::optional<Literal> best;
    std::size_t best_rank = 0;
    for (Literal l : c) {
      const auto idx = l.var_index();
      const std::size_t r = idx < rank_.size() ? rank_[idx] : 0;
      if (r > best_rank) {
        best_rank = r;
        best = l;
      }
    }
    return best;
  }

  std::span<const Clause> side_;
  OccurrenceIndex index_;
  const VarSet& forget_;
  Meter& meter_;
  const Deadline& deadline_;
  LinearStats* stats_;
  std::vector<std::size_t> rank_;
  std::unordered_set<Clause> result_;
  std::uint64_t base_cells_;
  std::uint64_t line_cells_ = 0;
  std::uint64_t result_cells_ = 0;
};

}  // namespace

Formula forget_linear_clause(const Clause& c, const Formula& s, const VarSet& v,
                             std::vector<Clause>& line, Meter& meter, const Deadline& deadline,
                             const LinearOptions& options) {
  LinearSearch search(s, v, meter, deadline, options);
  search.expand(c, line);
  meter.checkpoint();
  return search.result();
}

Formula forget_linear(const Formula& f, const VarSet& v, Meter& meter, const Deadline& deadline,
                      const LinearOptions& options) {
  LinearSearch search(f, v, meter, deadline, options);
  std::vector<Clause> line;
  for (const Clause& c : f) {
    search.expand(c, line);
    meter.checkpoint();
  }
  Formula out = search.result();
  if (meter.tracing()) meter.note(std::to_string(out.size()) + " clauses from linear resolution");
  return out;
}

}  // namespace forget
