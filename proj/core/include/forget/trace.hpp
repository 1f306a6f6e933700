// SPDX-License-Identifier: Apache-2.0
//
// Line-oriented output of a forgetting run. Result lines are bare serialized
// clauses; every other line starts with '#': "# text" for tracing,
// "#T=<n>" for an ideal duration and "#M=<n>" for an ideal memory level.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace forget {

enum class TraceKind { Trace, Time, Memory, Result };

/// Receives complete output lines (without the newline).
class TraceSink {
 public:
  virtual ~TraceSink() = default;
  virtual void line(std::string_view text) = 0;
};

/// Writes lines to a stream; throws std::ios_base::failure when the stream
/// goes bad.
class StreamSink final : public TraceSink {
 public:
  explicit StreamSink(std::ostream& out) : out_(out) {}
  void line(std::string_view text) override;

 private:
  std::ostream& out_;
};

/// Collects lines in memory.
class VectorSink final : public TraceSink {
 public:
  void line(std::string_view text) override { lines_.emplace_back(text); }
  [[nodiscard]] const std::vector<std::string>& lines() const noexcept { return lines_; }

 private:
  std::vector<std::string> lines_;
};

/// Formats one line of the given kind. `payload` is the trace text or the
/// serialized clause; `value` is the time or memory amount.
[[nodiscard]] std::string format_trace_line(TraceKind kind, std::string_view payload,
                                            std::uint64_t value = 0);

void emit_trace(TraceSink& sink, TraceKind kind, std::string_view payload);
void emit_trace(TraceSink& sink, TraceKind kind, std::uint64_t value);

/// True for "#T=<digits>" and "#M=<digits>" exactly.
[[nodiscard]] bool is_meter_line(std::string_view line);

}  // namespace forget
