// SPDX-License-Identifier: Apache-2.0

#include "forget/bench.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/resource.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "forget/formula_io.hpp"
#include "forget/oracle.hpp"
#include "forget/randgen.hpp"

namespace forget {

void GridSpec::validate() const {
  if (vars_min < 3 || vars_max > 26 || vars_min > vars_max)
    throw ContractError("grid: variable range must lie within 3..26 and be non-empty");
  if (multiplier_min < 1 || multiplier_min > multiplier_max)
    throw ContractError("grid: clause multiplier range must be non-empty and start at 1 or more");
  if (reps < 1) throw ContractError("grid: at least one repetition is needed");
  if (!(timeout.count() > 0)) throw ContractError("grid: timeout must be positive");
  if (grace.count() < 0) throw ContractError("grid: grace must not be negative");
  if (algorithms.empty()) throw ContractError("grid: no algorithm selected");
  if (workers < 1) throw ContractError("grid: at least one worker is needed");
}

std::uint64_t GridSpec::run_count() const {
  std::uint64_t formulas = 0;
  for (unsigned n = vars_min; n <= vars_max; ++n) formulas += n + 1;
  formulas *= static_cast<std::uint64_t>(multiplier_max - multiplier_min + 1) * reps;
  return formulas * algorithms.size();
}

// ---------------------------------------------------------------------------
// CSV

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

std::string optional_text(const std::optional<std::uint64_t>& value) {
  return value ? std::to_string(*value) : std::string();
}

std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c != '"') {
        fields.back() += c;
      } else if (i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else {
        quoted = false;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw std::runtime_error("csv line " + std::to_string(line_no) + ": unterminated quote");
  return fields;
}

std::uint64_t parse_u64(const std::string& text, std::size_t line_no) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last)
    throw std::runtime_error("csv line " + std::to_string(line_no) + ": bad integer '" + text + "'");
  return value;
}

std::optional<std::uint64_t> parse_optional(const std::string& text, std::size_t line_no) {
  if (text.empty()) return std::nullopt;
  return parse_u64(text, line_no);
}

unsigned parse_unsigned(const std::string& text, std::size_t line_no) {
  const auto value = parse_u64(text, line_no);
  if (value > 0xffffffffu)
    throw std::runtime_error("csv line " + std::to_string(line_no) + ": value out of range");
  return static_cast<unsigned>(value);
}

}  // namespace

CsvRecordWriter::CsvRecordWriter(std::ostream& out) : out_(out) {
  for (std::size_t i = 0; i < kCsvColumns.size(); ++i) out_ << (i ? "," : "") << kCsvColumns[i];
  out_ << '\n';
  if (!out_) throw std::ios_base::failure("csv: cannot write header");
}

void CsvRecordWriter::write(const BenchRecord& r) {
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.6f", r.real_time_s);
  out_ << csv_field(r.algorithm) << ',' << r.vars << ',' << r.forget_vars << ',' << r.clauses << ','
       << r.seed << ',' << seconds << ',' << optional_text(r.real_mem_kb) << ','
       << optional_text(r.self_time) << ',' << optional_text(r.self_mem) << ','
       << optional_text(r.output_clauses) << ',' << optional_text(r.output_literals) << ','
       << (r.timed_out ? "true" : "false") << '\n';
  out_.flush();
  if (!out_) throw std::ios_base::failure("csv: write failed");
}

std::vector<BenchRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_csv_line(line, 1);
  if (!std::equal(header.begin(), header.end(), kCsvColumns.begin(), kCsvColumns.end()))
    throw std::runtime_error("csv: header does not match the bench schema");

  std::vector<BenchRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_csv_line(line, line_no);
    if (f.size() != kCsvColumns.size())
      throw std::runtime_error("csv line " + std::to_string(line_no) + ": expected " +
                               std::to_string(kCsvColumns.size()) + " fields");
    BenchRecord r;
    r.algorithm = f[0];
    r.vars = parse_unsigned(f[1], line_no);
    r.forget_vars = parse_unsigned(f[2], line_no);
    r.clauses = parse_unsigned(f[3], line_no);
    r.seed = parse_u64(f[4], line_no);
    try {
      std::size_t used = 0;
      r.real_time_s = std::stod(f[5], &used);
      if (used != f[5].size()) throw std::invalid_argument(f[5]);
    } catch (const std::logic_error&) {
      throw std::runtime_error("csv line " + std::to_string(line_no) + ": bad real_time_s");
    }
    r.real_mem_kb = parse_optional(f[6], line_no);
    r.self_time = parse_optional(f[7], line_no);
    r.self_mem = parse_optional(f[8], line_no);
    r.output_clauses = parse_optional(f[9], line_no);
    r.output_literals = parse_optional(f[10], line_no);
    if (f[11] != "true" && f[11] != "false")
      throw std::runtime_error("csv line " + std::to_string(line_no) + ": bad timed_out");
    r.timed_out = f[11] == "true";
    records.push_back(std::move(r));
  }
  return records;
}

// ---------------------------------------------------------------------------
// Grid

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t grid_seed(std::uint64_t base_seed, unsigned vars, unsigned forget,
                        unsigned multiplier, unsigned rep) {
  std::uint64_t h = splitmix64(base_seed);
  for (std::uint64_t coordinate : {vars, forget, multiplier, rep}) h = splitmix64(h ^ coordinate);
  return h;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Point {
  unsigned vars;
  unsigned forget;
  unsigned multiplier;
  unsigned rep;
  std::uint64_t seed;
  Formula formula;
  VarSet to_forget;
};

struct Job {
  std::size_t point;
  Algorithm algorithm;
};

enum class Status { Ok, Timeout, Error };

struct Outcome {
  Status status = Status::Error;
  std::uint64_t self_time = 0;
  std::uint64_t self_mem = 0;
  std::uint64_t real_ns = 0;
  std::uint64_t output_clauses = 0;
  std::uint64_t output_literals = 0;
  Formula output;
  std::string message;
};

Outcome run_here(const Point& p, Algorithm algorithm, std::chrono::duration<double> timeout) {
  Outcome out;
  Meter meter;
  const auto start = Clock::now();
  const auto elapsed = [&] {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
  };
  try {
    const auto deadline = Deadline::after(std::chrono::duration_cast<std::chrono::nanoseconds>(timeout));
    out.output = run_forget(algorithm, p.formula, p.to_forget, meter, deadline);
    out.real_ns = elapsed();
    out.status = Status::Ok;
    out.self_time = meter.time_total();
    out.self_mem = meter.mem_peak();
    out.output_clauses = out.output.size();
    out.output_literals = out.output.literal_count();
  } catch (const TimeoutError& e) {
    out.real_ns = elapsed();
    out.status = Status::Timeout;
    out.self_time = e.partial().time_total;
    out.self_mem = e.partial().mem_peak;
  } catch (const std::exception& e) {
    out.real_ns = elapsed();
    out.message = e.what();
  }
  return out;
}

// Wire format from child to parent: one header line, then the serialized
// output formula or an error message.
std::string encode(const Outcome& o) {
  static constexpr const char* kStatus[] = {"ok", "timeout", "error"};
  std::ostringstream s;
  s << kStatus[static_cast<int>(o.status)] << ' ' << o.self_time << ' ' << o.self_mem << ' '
    << o.real_ns << ' ' << o.output_clauses << ' ' << o.output_literals << '\n';
  if (o.status == Status::Ok) s << serialize_formula(o.output);
  if (o.status == Status::Error) s << o.message;
  return s.str();
}

Outcome decode(const std::string& wire) {
  Outcome o;
  const auto eol = wire.find('\n');
  if (eol == std::string::npos) {
    o.message = "child produced no report";
    return o;
  }
  std::istringstream head(wire.substr(0, eol));
  std::string status;
  head >> status >> o.self_time >> o.self_mem >> o.real_ns >> o.output_clauses >> o.output_literals;
  const std::string body = wire.substr(eol + 1);
  if (!head || (status != "ok" && status != "timeout" && status != "error")) {
    o.status = Status::Error;
    o.message = "malformed child report";
  } else if (status == "ok") {
    o.status = Status::Ok;
    o.output = parse_formula(body);
  } else if (status == "timeout") {
    o.status = Status::Timeout;
  } else {
    o.status = Status::Error;
    o.message = body;
  }
  return o;
}

void write_all(int fd, const std::string& data) {
  std::size_t done = 0;
  while (done < data.size()) {
    const ssize_t n = ::write(fd, data.data() + done, data.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      return;
    }
    done += static_cast<std::size_t>(n);
  }
}

struct Child {
  pid_t pid = -1;
  int fd = -1;
  std::size_t job = 0;
  Clock::time_point start;
  std::string wire;
};

class GridRunner {
 public:
  GridRunner(const GridSpec& spec, RecordSink& sink, const ProgressFn& progress)
      : spec_(spec), sink_(sink), progress_(progress) {}

  GridSummary run() {
    build_jobs();
    outcomes_.resize(jobs_.size());
    real_mem_.resize(jobs_.size());
    if (spec_.isolate) {
      run_isolated();
    } else {
      for (std::size_t j = 0; j < jobs_.size(); ++j) {
        outcomes_[j] = run_here(points_[jobs_[j].point], jobs_[j].algorithm, spec_.timeout);
        finished(j);
      }
    }
    return summary_;
  }

 private:
  void build_jobs() {
    for (unsigned n = spec_.vars_min; n <= spec_.vars_max; ++n)
      for (unsigned k = 0; k <= n; ++k)
        for (unsigned m = spec_.multiplier_min; m <= spec_.multiplier_max; ++m)
          for (unsigned rep = 0; rep < spec_.reps; ++rep) {
            const auto seed = grid_seed(spec_.base_seed, n, k, m, rep);
            points_.push_back({n, k, m, rep, seed, generate(n, m * n, seed), letters(k)});
            for (Algorithm a : spec_.algorithms) jobs_.push_back({points_.size() - 1, a});
          }
  }

  void run_isolated() {
    std::deque<std::size_t> queue;
    for (std::size_t j = 0; j < jobs_.size(); ++j) queue.push_back(j);
    std::vector<Child> running;
    const auto kill_after = std::chrono::duration_cast<Clock::duration>(spec_.timeout + spec_.grace);

    while (!queue.empty() || !running.empty()) {
      while (!queue.empty() && running.size() < spec_.workers) {
        running.push_back(spawn(queue.front()));
        queue.pop_front();
      }

      std::vector<pollfd> fds;
      auto wait = Clock::duration::max();
      const auto now = Clock::now();
      for (const Child& c : running) {
        fds.push_back({c.fd, POLLIN, 0});
        wait = std::min(wait, c.start + kill_after - now);
      }
      const auto wait_ms = std::max<std::int64_t>(
          0, std::chrono::duration_cast<std::chrono::milliseconds>(wait).count() + 1);
      const int ready = ::poll(fds.data(), fds.size(), static_cast<int>(std::min<std::int64_t>(wait_ms, 60000)));
      if (ready < 0 && errno != EINTR) throw std::system_error(errno, std::generic_category(), "poll");

      for (std::size_t i = running.size(); i-- > 0;) {
        Child& c = running[i];
        bool done = false;
        if (ready > 0 && (fds[i].revents & (POLLIN | POLLHUP | POLLERR)) != 0) done = drain(c);
        if (!done && Clock::now() >= c.start + kill_after) {
          ::kill(c.pid, SIGKILL);
          reap(c, true);
          done = true;
        } else if (done) {
          reap(c, false);
        }
        if (done) running.erase(running.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  Child spawn(std::size_t j) {
    int fds[2];
    if (::pipe(fds) != 0) throw std::system_error(errno, std::generic_category(), "pipe");
    const pid_t pid = ::fork();
    if (pid < 0) throw std::system_error(errno, std::generic_category(), "fork");
    if (pid == 0) {
      ::close(fds[0]);
      const Outcome o = run_here(points_[jobs_[j].point], jobs_[j].algorithm, spec_.timeout);
      write_all(fds[1], encode(o));
      ::close(fds[1]);
      ::_exit(0);
    }
    ::close(fds[1]);
    ::fcntl(fds[0], F_SETFL, ::fcntl(fds[0], F_GETFL) | O_NONBLOCK);
    return {pid, fds[0], j, Clock::now(), {}};
  }

  // Reads what is available; true at end of stream.
  static bool drain(Child& c) {
    char buf[65536];
    for (;;) {
      const ssize_t n = ::read(c.fd, buf, sizeof buf);
      if (n > 0) {
        c.wire.append(buf, static_cast<std::size_t>(n));
        if (static_cast<std::size_t>(n) < sizeof buf) return false;
        continue;
      }
      if (n == 0) return true;
      if (errno == EINTR) continue;
      return errno != EAGAIN && errno != EWOULDBLOCK;
    }
  }

  void reap(Child& c, bool killed) {
    ::close(c.fd);
    int status = 0;
    rusage usage{};
    while (::wait4(c.pid, &status, 0, &usage) < 0 && errno == EINTR) {
    }
    real_mem_[c.job] = static_cast<std::uint64_t>(usage.ru_maxrss);
    Outcome o;
    if (killed) {
      o.status = Status::Timeout;
      o.real_ns = static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - c.start).count());
      killed_.push_back(c.job);
    } else if (WIFEXITED(status) && WEXITSTATUS(status) == 0) {
      try {
        o = decode(c.wire);
      } catch (const std::exception& e) {
        o.status = Status::Error;
        o.message = e.what();
      }
    } else {
      o.status = Status::Error;
      o.message = WIFSIGNALED(status) ? "child killed by signal " + std::to_string(WTERMSIG(status))
                                      : "child exited with status " + std::to_string(WEXITSTATUS(status));
    }
    outcomes_[c.job] = std::move(o);
    finished(c.job);
  }

  // Records are written in job order; a point is verified once all of its
  // jobs are in.
  void finished(std::size_t j) {
    done_.resize(jobs_.size(), false);
    done_[j] = true;
    while (next_ < jobs_.size() && done_[next_]) {
      const std::size_t point = jobs_[next_].point;
      std::size_t last = next_;
      while (last < jobs_.size() && jobs_[last].point == point) ++last;
      if (!std::all_of(done_.begin() + static_cast<std::ptrdiff_t>(next_),
                       done_.begin() + static_cast<std::ptrdiff_t>(last), [](bool b) { return b; }))
        return;
      if (spec_.verify) verify(next_, last);
      for (std::size_t k = next_; k < last; ++k) emit(k);
      next_ = last;
    }
  }

  void verify(std::size_t first, std::size_t last) {
    const Point& p = points_[jobs_[first].point];
    if (p.vars > kOracleVariableLimit) return;
    const VarSet remembered = letters(p.vars).minus(p.to_forget);
    std::optional<std::size_t> reference;
    for (std::size_t k = first; k < last; ++k) {
      if (outcomes_[k].status != Status::Ok) continue;
      if (!reference) {
        reference = k;
        continue;
      }
      bool same = false;
      try {
        same = equivalent(outcomes_[*reference].output, outcomes_[k].output, remembered);
      } catch (const ContractError&) {
        same = false;
      }
      if (!same) {
        summary_.mismatches.push_back(
            "vars=" + std::to_string(p.vars) + " forget=" + std::to_string(p.forget) +
            " clauses=" + std::to_string(p.multiplier * p.vars) + " seed=" + std::to_string(p.seed) +
            ": " + std::string(algorithm_name(jobs_[*reference].algorithm)) + " and " +
            std::string(algorithm_name(jobs_[k].algorithm)) + " disagree");
      }
    }
  }

  void emit(std::size_t j) {
    const Point& p = points_[jobs_[j].point];
    Outcome& o = outcomes_[j];
    const bool killed = std::find(killed_.begin(), killed_.end(), j) != killed_.end();
    BenchRecord r;
    r.algorithm = std::string(algorithm_name(jobs_[j].algorithm));
    r.vars = p.vars;
    r.forget_vars = p.forget;
    r.clauses = p.multiplier * p.vars;
    r.seed = p.seed;
    r.real_time_s = static_cast<double>(o.real_ns) / 1e9;
    r.real_mem_kb = real_mem_[j];
    r.timed_out = o.status == Status::Timeout;
    if (o.status != Status::Error && !killed) {
      r.self_time = o.self_time;
      r.self_mem = o.self_mem;
    }
    if (o.status == Status::Ok) {
      r.output_clauses = o.output_clauses;
      r.output_literals = o.output_literals;
    }
    ++summary_.runs;
    if (o.status == Status::Ok) ++summary_.completed;
    if (o.status == Status::Timeout) ++summary_.timeouts;
    if (o.status == Status::Error) ++summary_.failures;
    o.output = Formula();
    sink_.write(r);
    if (progress_) progress_(summary_.runs, jobs_.size());
  }

  const GridSpec& spec_;
  RecordSink& sink_;
  const ProgressFn& progress_;
  std::vector<Point> points_;
  std::vector<Job> jobs_;
  std::vector<Outcome> outcomes_;
  std::vector<std::optional<std::uint64_t>> real_mem_;
  std::vector<std::size_t> killed_;
  std::vector<bool> done_;
  std::size_t next_ = 0;
  GridSummary summary_;
};

}  // namespace

GridSummary run_grid(const GridSpec& spec, RecordSink& out, const ProgressFn& progress) {
  spec.validate();
  return GridRunner(spec, out, progress).run();
}

// ---------------------------------------------------------------------------
// Summaries

unsigned fraction_bucket(unsigned forget, unsigned vars) {
  if (vars == 0) throw ContractError("fraction_bucket: vars must be positive");
  // floor(10 * forget / vars + 0.5) in exact integer arithmetic.
  return (20 * forget + vars) / (2 * vars);
}

TimeoutSummary summarize_timeouts(const std::vector<BenchRecord>& records,
                                  const std::string& algorithm) {
  TimeoutSummary s;
  for (const BenchRecord& r : records) {
    if (!algorithm.empty() && r.algorithm != algorithm) continue;
    if (r.vars == 0 || r.forget_vars > r.vars) continue;
    auto& by_vars = s.by_vars[r.vars];
    auto& by_fraction = s.by_fraction[fraction_bucket(r.forget_vars, r.vars)];
    ++by_vars.runs;
    ++by_fraction.runs;
    if (r.timed_out) {
      ++by_vars.timeouts;
      ++by_fraction.timeouts;
    }
  }
  return s;
}

}  // namespace forget
