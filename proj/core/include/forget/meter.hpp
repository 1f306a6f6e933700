// SPDX-License-Identifier: Apache-2.0
//
// Idealized resource accounting. Time is a count of abstract operations
// (resolutions, subsumption comparisons, search nodes, propagations); memory
// is the number of literal occurrences held in live clause sets. Total time
// is the sum of all charges, memory is the maximum over all snapshots.

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace forget {

class TraceSink;

class Meter {
 public:
  Meter() = default;
  /// Meter that reports "#T=" and "#M=" lines (and "# " notes) to `sink`.
  explicit Meter(TraceSink* sink) : sink_(sink) {}

  void tick(std::uint64_t cost = 1) noexcept {
    time_total_ += cost;
    pending_ += cost;
  }

  /// Records the current number of live cells. A "#M=" line is reported only
  /// when the peak grows, which keeps the maximum of all reported lines equal
  /// to the peak.
  void snapshot_memory(std::uint64_t live_cells);

  /// Reports the time charged since the previous checkpoint as one "#T="
  /// line. The reported lines always sum to time_total() after a final
  /// checkpoint.
  void checkpoint();

  /// "# text" line, when a sink is attached.
  void note(std::string_view text);
  [[nodiscard]] bool tracing() const noexcept { return sink_ != nullptr; }

  /// Adds another meter's totals: times add, peaks take the maximum.
  void merge(const Meter& other) noexcept;

  [[nodiscard]] std::uint64_t time_total() const noexcept { return time_total_; }
  [[nodiscard]] std::uint64_t mem_peak() const noexcept { return mem_peak_; }
  [[nodiscard]] std::uint64_t mem_current() const noexcept { return mem_current_; }

 private:
  TraceSink* sink_ = nullptr;
  std::uint64_t time_total_ = 0;
  std::uint64_t pending_ = 0;
  std::uint64_t mem_peak_ = 0;
  std::uint64_t mem_current_ = 0;
  bool snapshotted_ = false;
};

/// Self-reported statistics of a run.
struct MeterStats {
  std::uint64_t time_total = 0;
  std::uint64_t mem_peak = 0;
};

/// Thrown when a run exceeds its deadline; carries the partial meter.
class TimeoutError : public std::runtime_error {
 public:
  explicit TimeoutError(MeterStats partial)
      : std::runtime_error("deadline exceeded"), partial_(partial) {}
  [[nodiscard]] const MeterStats& partial() const noexcept { return partial_; }

 private:
  MeterStats partial_;
};

/// An optional point in time after which cooperative checks throw.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(Clock::time_point at) : at_(at) {}

  static Deadline none() { return {}; }
  static Deadline after(std::chrono::nanoseconds budget) { return Deadline(Clock::now() + budget); }
  static Deadline after_seconds(double seconds);

  [[nodiscard]] bool expired() const { return at_ && Clock::now() >= *at_; }

  /// Throws TimeoutError (with the meter's current totals) when expired.
  void check(const Meter& meter) const {
    if (expired()) throw TimeoutError({meter.time_total(), meter.mem_peak()});
  }

  [[nodiscard]] bool bounded() const noexcept { return at_.has_value(); }

 private:
  std::optional<Clock::time_point> at_;
};

}  // namespace forget
