// SPDX-License-Identifier: Apache-2.0

#include "forget/trace.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace forget {

void StreamSink::line(std::string_view text) {
  out_ << text << '\n';
  if (!out_) throw std::ios_base::failure("trace sink: write failed");
}

std::string format_trace_line(TraceKind kind, std::string_view payload, std::uint64_t value) {
  switch (kind) {
    case TraceKind::Trace:
      return "# " + std::string(payload);
    case TraceKind::Time:
      return "#T=" + std::to_string(value);
    case TraceKind::Memory:
      return "#M=" + std::to_string(value);
    case TraceKind::Result:
      return std::string(payload);
  }
  return {};
}

void emit_trace(TraceSink& sink, TraceKind kind, std::string_view payload) {
  sink.line(format_trace_line(kind, payload));
}

void emit_trace(TraceSink& sink, TraceKind kind, std::uint64_t value) {
  sink.line(format_trace_line(kind, {}, value));
}

bool is_meter_line(std::string_view line) {
  if (line.size() < 4 || line[0] != '#' || (line[1] != 'T' && line[1] != 'M') || line[2] != '=')
    return false;
  return std::all_of(line.begin() + 3, line.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace forget
