// SPDX-License-Identifier: Apache-2.0
//
// Experiment grid over random 3-CNF formulas.
//
// For every number of variables n, every number k of variables to forget
// (0..n, always the first k letters), every clause multiplier m and every
// repetition, one formula with m*n clause draws is generated and given to
// each selected algorithm. Each run produces one BenchRecord.
//
// By default every run happens in a forked child process. The child enforces
// the timeout cooperatively and reports its self metrics through a pipe; the
// parent reads the child's peak resident set from wait4() and kills a child
// that overstays the timeout by more than the grace period.

#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "forget/algorithm.hpp"

namespace forget {

struct GridSpec {
  unsigned vars_min = 3;
  unsigned vars_max = 10;
  unsigned multiplier_min = 1;
  unsigned multiplier_max = 5;
  unsigned reps = 10;
  std::chrono::duration<double> timeout{10.0};
  /// Extra time a child gets past the timeout before it is killed.
  std::chrono::duration<double> grace{1.0};
  std::vector<Algorithm> algorithms{kAllAlgorithms.begin(), kAllAlgorithms.end()};
  std::uint64_t base_seed = 0;
  /// Concurrent child processes. Leave at 1 when real times are compared.
  unsigned workers = 1;
  /// Run in forked children. When false, runs happen in this process, real
  /// memory is left empty and there is no kill safety net.
  bool isolate = true;
  /// Check that the completed outputs at each grid point are equivalent.
  bool verify = true;

  /// Throws ContractError when a range is empty or out of bounds.
  void validate() const;
  /// Number of records run_grid produces.
  [[nodiscard]] std::uint64_t run_count() const;
};

struct BenchRecord {
  std::string algorithm;
  unsigned vars = 0;
  unsigned forget_vars = 0;
  /// Clause draws (multiplier * vars); duplicates may collapse.
  unsigned clauses = 0;
  std::uint64_t seed = 0;
  double real_time_s = 0.0;
  std::optional<std::uint64_t> real_mem_kb;
  /// Partial values for timed-out runs; empty when the run was killed or
  /// failed.
  std::optional<std::uint64_t> self_time;
  std::optional<std::uint64_t> self_mem;
  /// Empty unless the run completed.
  std::optional<std::uint64_t> output_clauses;
  std::optional<std::uint64_t> output_literals;
  bool timed_out = false;

  /// A run that neither completed nor timed out (crash or error). In CSV
  /// form: timed_out false and no output size.
  [[nodiscard]] bool failed() const { return !timed_out && !output_clauses.has_value(); }

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

inline constexpr std::array<const char*, 12> kCsvColumns = {
    "algorithm", "vars",           "forget_vars",     "clauses",
    "seed",      "real_time_s",    "real_mem_kb",     "self_time",
    "self_mem",  "output_clauses", "output_literals", "timed_out"};

class RecordSink {
 public:
  virtual ~RecordSink() = default;
  virtual void write(const BenchRecord& record) = 0;
};

/// CSV with a header row; empty fields for absent values. Throws
/// std::ios_base::failure when the stream goes bad.
class CsvRecordWriter final : public RecordSink {
 public:
  explicit CsvRecordWriter(std::ostream& out);
  void write(const BenchRecord& record) override;

 private:
  std::ostream& out_;
};

class VectorRecordSink final : public RecordSink {
 public:
  void write(const BenchRecord& record) override { records_.push_back(record); }
  [[nodiscard]] const std::vector<BenchRecord>& records() const noexcept { return records_; }

 private:
  std::vector<BenchRecord> records_;
};

/// Parses CSV written by CsvRecordWriter. Throws std::runtime_error on a
/// header mismatch or a malformed row.
[[nodiscard]] std::vector<BenchRecord> read_csv(std::istream& in);

/// RFC 4180 quoting of one field.
[[nodiscard]] std::string csv_field(const std::string& text);

/// Seed of the formula at one grid point.
[[nodiscard]] std::uint64_t grid_seed(std::uint64_t base_seed, unsigned vars, unsigned forget,
                                      unsigned multiplier, unsigned rep);

struct GridSummary {
  std::uint64_t runs = 0;
  std::uint64_t completed = 0;
  std::uint64_t timeouts = 0;
  std::uint64_t failures = 0;
  /// Grid points where two completed outputs disagree, one line each.
  std::vector<std::string> mismatches;
};

/// Called after each record is written, with the number written so far.
using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

[[nodiscard]] GridSummary run_grid(const GridSpec& spec, RecordSink& out,
                                   const ProgressFn& progress = {});

struct TimeoutCounts {
  std::uint64_t runs = 0;
  std::uint64_t timeouts = 0;
  [[nodiscard]] double percent() const {
    return runs == 0 ? 0.0 : 100.0 * static_cast<double>(timeouts) / static_cast<double>(runs);
  }
};

struct TimeoutSummary {
  std::map<unsigned, TimeoutCounts> by_vars;
  /// Index k covers forget fractions in [k/10 - 0.05, k/10 + 0.05).
  std::array<TimeoutCounts, 11> by_fraction{};
};

/// Bucket index of forget/vars; vars must be positive.
[[nodiscard]] unsigned fraction_bucket(unsigned forget, unsigned vars);

/// Counts over the records of `algorithm`, or over all records when it is
/// empty.
[[nodiscard]] TimeoutSummary summarize_timeouts(const std::vector<BenchRecord>& records,
                                                const std::string& algorithm = {});

}  // namespace forget
