// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "forget/algorithm.hpp"
#include "forget/bench.hpp"
#include "forget/formula_io.hpp"
#include "forget/logic.hpp"
#include "forget/meter.hpp"
#include "forget/oracle.hpp"
#include "forget/randgen.hpp"
#include "forget/trace.hpp"

namespace forget::cli {

namespace {

// Errors that map straight to an exit status.
struct Failure {
  int status;
  std::string message;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) throw Failure{kIoError, "cannot read standard input"};
    return text;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Failure{kIoError, "cannot open " + path};
  std::ostringstream text;
  text << file.rdbuf();
  if (file.bad()) throw Failure{kIoError, "cannot read " + path};
  return text.str();
}

Formula parse_input(const std::string& path, std::istream& in) {
  const std::string text = read_input(path, in);
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    throw Failure{kParseError, (path.empty() || path == "-" ? "<stdin>" : path) + ": " + e.what()};
  }
}

VarSet parse_forget_set(const std::string& text) {
  try {
    return parse_variables(text);
  } catch (const ParseError& e) {
    throw Failure{kParseError, std::string("--forget: ") + e.what()};
  }
}

// "3..10" or "7".
std::pair<unsigned, unsigned> parse_range(const std::string& text, const std::string& flag) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const unsigned long v = std::stoul(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {static_cast<unsigned>(v), static_cast<unsigned>(v)};
    }
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    const unsigned long a = std::stoul(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    const unsigned long b = std::stoul(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
    return {static_cast<unsigned>(a), static_cast<unsigned>(b)};
  } catch (const std::logic_error&) {
    throw Failure{kUsage, flag + ": expected N or LO..HI, got '" + text + "'"};
  }
}

// --- forget ----------------------------------------------------------------

struct ForgetArgs {
  std::string algorithm;
  std::string forget;
  std::string order;
  bool minimize = false;
  double timeout = 0;
  bool quiet = false;
  std::string input;
};

int cmd_forget(const ForgetArgs& a, std::istream& in, std::ostream& out) {
  const auto algorithm = parse_algorithm(a.algorithm);
  if (!algorithm) throw Failure{kUsage, "unknown algorithm '" + a.algorithm + "'"};
  if (a.minimize && *algorithm != Algorithm::Eliminate)
    throw Failure{kUsage, "--minimize applies to the eliminate algorithm only"};

  const Formula f = parse_input(a.input, in);
  const VarSet v = parse_forget_set(a.forget);
  ForgetOptions options;
  options.minimize_each_step = a.minimize;
  if (!a.order.empty()) {
    try {
      options.order = VariableOrder::sequence(parse_variable_sequence(a.order));
    } catch (const ParseError& e) {
      throw Failure{kParseError, std::string("--order: ") + e.what()};
    }
  }

  StreamSink sink(out);
  Meter meter(a.quiet ? nullptr : &sink);
  if (!a.quiet) {
    std::string names;
    for (Variable x : v.sorted_by_name()) names += x.name().size() == 1 ? x.name() : "&" + x.name() + ";";
    meter.note(std::string(algorithm_name(*algorithm)) + ": forgetting {" + names + "} from " +
               std::to_string(f.size()) + " clauses");
  }
  const Deadline deadline = a.timeout > 0 ? Deadline::after_seconds(a.timeout) : Deadline::none();
  Formula result;
  try {
    result = run_forget(*algorithm, f, v, meter, deadline, options);
  } catch (const TimeoutError& e) {
    meter.checkpoint();
    meter.note("timed out after " + std::to_string(e.partial().time_total) + " time units");
    throw Failure{kTimeout, "timed out"};
  }
  meter.checkpoint();
  for (const std::string& line : [&] {
         std::vector<std::string> lines;
         std::istringstream text(serialize_formula(result));
         for (std::string l; std::getline(text, l);) lines.push_back(l);
         return lines;
       }())
    emit_trace(sink, TraceKind::Result, line);
  if (!a.quiet)
    meter.note("total time " + std::to_string(meter.time_total()) + ", peak memory " +
               std::to_string(meter.mem_peak()));
  return kOk;
}

// --- gen -------------------------------------------------------------------

int cmd_gen(unsigned vars, unsigned clauses, std::uint64_t seed, std::ostream& out) {
  const Formula f = generate(vars, clauses, seed);
  out << "# " << kGeneratorId << " vars=" << vars << " clauses=" << clauses << " seed=" << seed
      << '\n'
      << serialize_formula(f);
  return kOk;
}

// --- check -----------------------------------------------------------------

int cmd_check(const std::string& forget, const std::string& input, double timeout,
              std::istream& in, std::ostream& out) {
  const Formula f = parse_input(input, in);
  const VarSet v = parse_forget_set(forget);
  const VarSet remembered = f.variables().minus(v);
  const Formula reference = oracle_forget(f, v);
  out << "oracle     " << reference.size() << " clauses\n";

  bool mismatch = false;
  bool timed_out = false;
  for (Algorithm a : kAllAlgorithms) {
    out << std::left << std::setw(11) << algorithm_name(a);
    Meter meter;
    try {
      const Deadline deadline = timeout > 0 ? Deadline::after_seconds(timeout) : Deadline::none();
      const Formula g = run_forget(a, f, v, meter, deadline);
      bool same = false;
      try {
        same = equivalent(reference, g, remembered);
      } catch (const ContractError&) {
        same = false;  // mentions a forgotten variable
      }
      out << (same ? "equivalent" : "DIFFERENT") << " (" << g.size() << " clauses, time "
          << meter.time_total() << ", memory " << meter.mem_peak() << ")\n";
      mismatch = mismatch || !same;
    } catch (const TimeoutError&) {
      out << "timeout\n";
      timed_out = true;
    }
  }
  if (mismatch) return kMismatch;
  return timed_out ? kTimeout : kOk;
}

// --- bench -----------------------------------------------------------------

struct BenchArgs {
  std::string vars = "3..10";
  std::string multipliers = "1..5";
  unsigned reps = 10;
  double timeout = 10;
  double grace = 1;
  std::vector<std::string> algorithms;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  bool in_process = false;
  bool no_verify = false;
  bool progress = false;
  std::string output = "-";
};

void print_timeouts(const TimeoutSummary& s, std::ostream& out) {
  out << "vars  runs  timeouts  percent\n";
  for (const auto& [vars, c] : s.by_vars)
    out << std::setw(4) << vars << std::setw(6) << c.runs << std::setw(10) << c.timeouts
        << std::setw(9) << std::fixed << std::setprecision(1) << c.percent() << '\n';
  out << "fraction  runs  timeouts  percent\n";
  for (std::size_t k = 0; k < s.by_fraction.size(); ++k) {
    const auto& c = s.by_fraction[k];
    out << std::setw(8) << std::fixed << std::setprecision(1) << static_cast<double>(k) / 10.0
        << std::setw(6) << c.runs << std::setw(10) << c.timeouts << std::setw(9) << c.percent()
        << '\n';
  }
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  GridSpec spec;
  std::tie(spec.vars_min, spec.vars_max) = parse_range(a.vars, "--vars");
  std::tie(spec.multiplier_min, spec.multiplier_max) = parse_range(a.multipliers, "--multipliers");
  spec.reps = a.reps;
  spec.timeout = std::chrono::duration<double>(a.timeout);
  spec.grace = std::chrono::duration<double>(a.grace);
  spec.base_seed = a.seed;
  spec.workers = a.workers;
  spec.isolate = !a.in_process;
  spec.verify = !a.no_verify;
  if (!a.algorithms.empty()) {
    spec.algorithms.clear();
    for (const std::string& name : a.algorithms) {
      const auto alg = parse_algorithm(name);
      if (!alg) throw Failure{kUsage, "unknown algorithm '" + name + "'"};
      spec.algorithms.push_back(*alg);
    }
  }
  try {
    spec.validate();
  } catch (const ContractError& e) {
    throw Failure{kUsage, e.what()};
  }

  std::ofstream file;
  std::ostream* csv = &out;
  if (a.output != "-") {
    file.open(a.output, std::ios::binary | std::ios::trunc);
    if (!file) throw Failure{kIoError, "cannot write " + a.output};
    csv = &file;
  }
  CsvRecordWriter writer(*csv);
  VectorRecordSink kept;
  struct Tee final : RecordSink {
    RecordSink& a;
    RecordSink& b;
    Tee(RecordSink& x, RecordSink& y) : a(x), b(y) {}
    void write(const BenchRecord& r) override {
      a.write(r);
      b.write(r);
    }
  } tee(writer, kept);

  ProgressFn progress;
  if (a.progress)
    progress = [&err](std::uint64_t done, std::uint64_t total) {
      err << "\r" << done << "/" << total << std::flush;
      if (done == total) err << '\n';
    };
  const GridSummary summary = run_grid(spec, tee, progress);

  err << summary.runs << " runs: " << summary.completed << " completed, " << summary.timeouts
      << " timed out, " << summary.failures << " failed\n";
  for (Algorithm alg : spec.algorithms) {
    const auto s = summarize_timeouts(kept.records(), std::string(algorithm_name(alg)));
    TimeoutCounts total;
    for (const auto& [vars, c] : s.by_vars) {
      total.runs += c.runs;
      total.timeouts += c.timeouts;
    }
    err << "  " << algorithm_name(alg) << ": " << total.timeouts << " timeouts of " << total.runs
        << '\n';
  }
  for (const std::string& m : summary.mismatches) err << "mismatch: " << m << '\n';
  return summary.mismatches.empty() ? kOk : kMismatch;
}

// --- timeouts --------------------------------------------------------------

int cmd_timeouts(const std::string& path, const std::string& algorithm, std::istream& in,
                 std::ostream& out) {
  std::istringstream text(read_input(path, in));
  std::vector<BenchRecord> records;
  try {
    records = read_csv(text);
  } catch (const std::runtime_error& e) {
    throw Failure{kParseError, e.what()};
  }
  print_timeouts(summarize_timeouts(records, algorithm), out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Propositional forgetting: remove variables from a CNF formula while keeping its "
               "consequences over the other variables.",
               "forget"};
  app.require_subcommand(0, 1);
  app.footer(
      "Without a subcommand, forgets variables from the formula in FILE (or standard input).\n"
      "Exit status: 0 ok, 1 mismatch, 2 usage, 3 parse error, 4 I/O error, 5 timeout,\n"
      "6 contract violation or enumeration limit.");

  ForgetArgs fa;
  app.add_option("-a,--algorithm", fa.algorithm, "close, eliminate, linear or backtrack");
  app.add_option("-f,--forget", fa.forget, "Variables to forget, e.g. bd or &v1;&v2;");
  app.add_option("--order", fa.order,
                 "Variable order: elimination sequence, or ascending A-ordering for linear");
  app.add_flag("--minimize", fa.minimize, "Eliminate: minimize after each variable");
  app.add_option("-t,--timeout", fa.timeout, "Seconds before giving up (default: none)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("-q,--quiet", fa.quiet, "Print result clauses only");
  app.add_option("file", fa.input, "Formula file; - or absent for standard input");

  auto* gen = app.add_subcommand("gen", "Print a random 3-CNF formula");
  unsigned gen_vars = 3;
  unsigned gen_clauses = 1;
  std::uint64_t gen_seed = 0;
  gen->add_option("-n,--vars", gen_vars, "Number of variables (3..26)")->required();
  gen->add_option("-m,--clauses", gen_clauses, "Number of clause draws")->required();
  gen->add_option("-s,--seed", gen_seed, "Seed");

  auto* check = app.add_subcommand("check", "Compare every algorithm with the brute-force oracle");
  std::string check_forget;
  std::string check_input;
  double check_timeout = 0;
  check->add_option("-f,--forget", check_forget, "Variables to forget")->required();
  check->add_option("-t,--timeout", check_timeout, "Seconds per algorithm (default: none)")
      ->check(CLI::NonNegativeNumber);
  check->add_option("file", check_input, "Formula file; - or absent for standard input");

  auto* bench = app.add_subcommand("bench", "Run the random-formula experiment grid, write CSV");
  BenchArgs ba;
  bench->add_option("--vars", ba.vars, "Variable counts, LO..HI")->capture_default_str();
  bench->add_option("--multipliers", ba.multipliers, "Clauses per variable, LO..HI")
      ->capture_default_str();
  bench->add_option("--reps", ba.reps, "Formulas per grid point")->capture_default_str();
  bench->add_option("-t,--timeout", ba.timeout, "Seconds per run")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--grace", ba.grace, "Seconds past the timeout before a run is killed")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--algorithms", ba.algorithms, "Subset of algorithms (default: all)")
      ->delimiter(',');
  bench->add_option("-s,--seed", ba.seed, "Base seed")->capture_default_str();
  bench->add_option("-j,--workers", ba.workers, "Concurrent runs; keep 1 to compare real times")
      ->capture_default_str();
  bench->add_flag("--in-process", ba.in_process, "Run without forking (no real memory figures)");
  bench->add_flag("--no-verify", ba.no_verify, "Skip the cross-algorithm equivalence check");
  bench->add_flag("--progress", ba.progress, "Report progress on standard error");
  bench->add_option("-o,--output", ba.output, "CSV file; - for standard output")
      ->capture_default_str();

  auto* timeouts = app.add_subcommand("timeouts", "Summarize timeouts in a bench CSV");
  std::string timeouts_input;
  std::string timeouts_algorithm = "linear";
  timeouts->add_option("file", timeouts_input, "CSV file; - or absent for standard input");
  timeouts->add_option("-a,--algorithm", timeouts_algorithm,
                       "Algorithm to count; empty for all")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_vars, gen_clauses, gen_seed, out);
    if (*check) return cmd_check(check_forget, check_input, check_timeout, in, out);
    if (*bench) return cmd_bench(ba, out, err);
    if (*timeouts) return cmd_timeouts(timeouts_input, timeouts_algorithm, in, out);
    if (fa.algorithm.empty()) throw Failure{kUsage, "--algorithm is required"};
    return cmd_forget(fa, in, out);
  } catch (const Failure& f) {
    err << "forget: " << f.message << '\n';
    return f.status;
  } catch (const std::ios_base::failure& e) {
    err << "forget: output error: " << e.what() << '\n';
    return kIoError;
  } catch (const ContractError& e) {
    err << "forget: " << e.what() << '\n';
    return kContractError;
  } catch (const EnumerationLimitError& e) {
    err << "forget: " << e.what() << '\n';
    return kContractError;
  } catch (const std::exception& e) {
    err << "forget: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace forget::cli
