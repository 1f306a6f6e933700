// SPDX-License-Identifier: Apache-2.0

#include "forget/meter.hpp"

#include <algorithm>
#include <cmath>

#include "forget/trace.hpp"

namespace forget {

void Meter::snapshot_memory(std::uint64_t live_cells) {
  mem_current_ = live_cells;
  const bool first = !snapshotted_;
  snapshotted_ = true;
  if (live_cells > mem_peak_ || first) {
    mem_peak_ = std::max(mem_peak_, live_cells);
    if (sink_) emit_trace(*sink_, TraceKind::Memory, mem_peak_);
  }
}

void Meter::checkpoint() {
  if (pending_ == 0) return;
  if (sink_) emit_trace(*sink_, TraceKind::Time, pending_);
  pending_ = 0;
}

void Meter::note(std::string_view text) {
  if (sink_) emit_trace(*sink_, TraceKind::Trace, text);
}

void Meter::merge(const Meter& other) noexcept {
  time_total_ += other.time_total_;
  pending_ += other.pending_;
  mem_peak_ = std::max(mem_peak_, other.mem_peak_);
}

Deadline Deadline::after_seconds(double seconds) {
  const auto ns = std::chrono::nanoseconds(static_cast<std::int64_t>(std::llround(seconds * 1e9)));
  return after(ns);
}

}  // namespace forget
