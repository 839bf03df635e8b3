#include "sclab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "sclab/errors.hpp"
#include "sclab/minimization.hpp"
#include "sclab/text_format.hpp"
#include "sclab/witnesses.hpp"

namespace sclab::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CombinedOp op_from(const std::string& name) {
  auto op = parse_combined_op(name);
  if (!op) {
    throw UsageError("unknown operation '" + name +
                     "' (expected star-union, star-intersection, reversal-union or reversal-intersection)");
  }
  return *op;
}

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

std::size_t parse_size(std::string_view tok, const std::string& what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw UsageError("bad " + what + " '" + std::string(tok) + "'");
  return v;
}

// "a..b" or "a".
Range parse_range(const std::string& text, std::size_t max, const std::string& what) {
  Range r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_size(text, what);
  } else {
    r.lo = parse_size(std::string_view(text).substr(0, dots), what);
    r.hi = parse_size(std::string_view(text).substr(dots + 2), what);
  }
  if (r.lo < 2 || r.hi < r.lo || r.hi > max) {
    throw UsageError(what + " range '" + text + "' must lie within 2.." + std::to_string(max));
  }
  return r;
}

unsigned worker_count(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

std::string format_record(const SweepRecord& r) {
  std::ostringstream out;
  out << "op=" << to_string(r.op) << " m=" << r.m << " n=" << r.n << " k=" << r.k << " measured=" << r.measured
      << " predicted=" << r.predicted << " match=" << (r.match ? "true" : "false") << " elapsed_ms=" << r.elapsed_ms;
  return out.str();
}

Alphabet first_letters(std::size_t sigma) {
  if (sigma < 1 || sigma > 26) throw UsageError("sigma must lie within 1..26");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < sigma; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return Alphabet(std::move(names));
}

struct Options {
  // shared
  std::string op_name;
  std::size_t m = 0;
  std::size_t n = 0;
  bool json = false;
  bool no_timing = false;
  // witness
  std::string family;
  std::size_t size = 0;
  bool dot = false;
  // verify
  std::string file_m;
  std::string file_n;
  // sweep
  std::string m_range;
  std::string n_range;
  std::string format = "csv";
  unsigned jobs = 0;
  // search
  std::size_t sigma = 0;
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string json_path;
  bool cross_check = false;
};

int cmd_sc(const Options& o, std::ostream& out) {
  const CombinedOp op = op_from(o.op_name);
  if (o.m < 2 || o.n < 2) throw UsageError("sc needs --m >= 2 and --n >= 2");
  SweepRecord r = measure_cell(op, o.m, o.n);
  if (o.no_timing) r.elapsed_ms = 0;
  if (o.json) {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << format_record(r) << '\n';
  }
  return r.match ? kSuccess : kMismatch;
}

int cmd_witness(const Options& o, std::ostream& out) {
  Dfa d;
  const std::size_t size = o.size != 0 ? o.size : (o.m != 0 ? o.m : o.n);
  if (size < 2) throw UsageError("witness needs a size >= 2 (--m, --n or --size)");
  if (o.family == "star-m") {
    d = star_witness_m(size);
  } else if (o.family == "star-n") {
    d = star_witness_n(size);
  } else if (o.family == "star-n0") {
    d = star_witness_n_start_final(size);
  } else if (o.family == "reversal-m") {
    d = reversal_witness_m(size);
  } else if (o.family == "reversal-n") {
    d = reversal_witness_n(size);
  } else {
    throw UsageError("unknown witness family '" + o.family +
                     "' (expected star-m, star-n, star-n0, reversal-m or reversal-n)");
  }
  out << (o.dot ? emit_dot(d, o.family) : emit_dfa(d));
  return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const CombinedOp op = op_from(o.op_name);
  const Dfa dm = read_dfa_file(o.file_m);
  const Dfa dn = read_dfa_file(o.file_n);
  if (!(dm.alphabet == dn.alphabet)) throw UsageError("alphabet mismatch between the two machines");
  const std::size_t k = nonstart_final_count(dm);
  const std::uint64_t measured = state_complexity(dm, dn, op);
  const std::uint64_t bound = applicable_bound(op, dm, dn);
  const bool holds = measured <= bound;
  if (o.json) {
    nlohmann::json j{{"op", to_string(op)}, {"m", dm.state_count}, {"n", dn.state_count}, {"k", k},
                     {"measured", measured}, {"bound", bound}, {"holds", holds}};
    out << j.dump(2) << '\n';
  } else {
    out << "op=" << to_string(op) << " m=" << dm.state_count << " n=" << dn.state_count << " k=" << k
        << " measured=" << measured << " bound=" << bound << " holds=" << (holds ? "true" : "false") << '\n';
  }
  return holds ? kSuccess : kMismatch;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const CombinedOp op = op_from(o.op_name);
  const std::size_t max_m = is_star_op(op) ? kMaxSweepMStar : kMaxSweepMReversal;
  const Range mr = o.m_range.empty() ? Range{2, max_m} : parse_range(o.m_range, max_m, "m");
  const Range nr = o.n_range.empty() ? Range{2, kMaxSweepN} : parse_range(o.n_range, kMaxSweepN, "n");
  if (o.format != "csv" && o.format != "json") throw UsageError("format must be csv or json");

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t m = mr.lo; m <= mr.hi; ++m) {
    for (std::size_t n = nr.lo; n <= nr.hi; ++n) cells.emplace_back(m, n);
  }
  std::vector<SweepRecord> records(cells.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < cells.size(); i = cursor++) {
      records[i] = measure_cell(op, cells[i].first, cells[i].second);
    }
  };
  const unsigned jobs = std::min<unsigned>(worker_count(o.jobs), static_cast<unsigned>(cells.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  bool all_match = true;
  for (auto& r : records) {
    if (o.no_timing) r.elapsed_ms = 0;
    all_match = all_match && r.match;
  }
  if (o.format == "csv") {
    out << kSweepCsvHeader << '\n';
    for (const auto& r : records) out << csv_row(r) << '\n';
  } else {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
  }
  return all_match ? kSuccess : kMismatch;
}

int cmd_search(const Options& o, std::ostream& out) {
  const CombinedOp op = op_from(o.op_name);
  if (o.m < 2 || o.n < 2) throw UsageError("search needs --m >= 2 and --n >= 2");
  const Alphabet alphabet = first_letters(o.sigma);
  if (o.exhaustive == (o.samples != 0)) throw UsageError("choose exactly one of --exhaustive or --samples N");
  SearchOptions opts;
  opts.mode = o.exhaustive ? SearchMode::Exhaustive : SearchMode::Sampled;
  opts.samples = o.samples;
  opts.seed = o.seed;
  opts.pair_budget = pair_budget_from_env();
  opts.threads = worker_count(o.jobs);
  opts.cross_check = o.cross_check;
  const SearchReport r = search_max(op, o.m, o.n, alphabet, opts);

  out << "op=" << to_string(r.op) << " m=" << r.m << " n=" << r.n << " sigma=" << r.sigma
      << " mode=" << to_string(r.mode);
  if (r.mode == SearchMode::Sampled) out << " samples=" << r.samples << " seed=" << r.seed;
  out << "\nmachines_examined=" << r.machines_examined << "\nobserved_max=" << r.observed_max
      << "\npredicted_bound=" << r.predicted_bound << "\nbound_violations=" << r.bound_violations;
  if (o.cross_check) out << "\noracle_disagreements=" << r.oracle_disagreements;
  out << "\n# achieving M\n" << emit_dfa(r.achieving_m) << "# achieving N\n" << emit_dfa(r.achieving_n);
  if (!o.json_path.empty()) {
    std::ofstream file(o.json_path);
    if (!file) throw UsageError("cannot write '" + o.json_path + "'");
    file << to_json(r).dump(2) << '\n';
  }
  return r.bound_violations == 0 && r.oracle_disagreements == 0 ? kSuccess : kMismatch;
}

}  // namespace

SweepRecord measure_cell(CombinedOp op, std::size_t m, std::size_t n) {
  const auto begin = std::chrono::steady_clock::now();
  const auto [dm, dn] = witness_pair(op, m, n);
  SweepRecord r;
  r.op = op;
  r.m = m;
  r.n = n;
  r.k = nonstart_final_count(dm);
  r.measured = state_complexity(dm, dn, op);
  r.predicted = predicted_bound(op, m, n);
  r.match = r.measured == r.predicted;
  r.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - begin).count());
  return r;
}

std::string csv_row(const SweepRecord& r) {
  std::ostringstream out;
  out << to_string(r.op) << ',' << r.m << ',' << r.n << ',' << r.k << ',' << r.measured << ',' << r.predicted << ','
      << (r.match ? "true" : "false") << ',' << r.elapsed_ms;
  return out.str();
}

nlohmann::json to_json(const SweepRecord& r) {
  return {{"op", to_string(r.op)}, {"m", r.m},           {"n", r.n},         {"k", r.k},
          {"measured", r.measured}, {"predicted", r.predicted}, {"match", r.match}, {"elapsed_ms", r.elapsed_ms}};
}

nlohmann::json to_json(const Dfa& d) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t q = 0; q < d.state_count; ++q) {
    rows.push_back(std::vector<State>(d.delta.begin() + static_cast<std::ptrdiff_t>(q * d.sigma()),
                                      d.delta.begin() + static_cast<std::ptrdiff_t>((q + 1) * d.sigma())));
  }
  return {{"alphabet", d.alphabet.names()}, {"states", d.state_count}, {"start", d.start},
          {"finals", d.finals},             {"delta", rows}};
}

nlohmann::json to_json(const SearchReport& r) {
  nlohmann::json mode{{"kind", to_string(r.mode)}};
  if (r.mode == SearchMode::Sampled) {
    mode["count"] = r.samples;
    mode["seed"] = r.seed;
  }
  return {{"op", to_string(r.op)},
          {"m", r.m},
          {"n", r.n},
          {"sigma", r.sigma},
          {"mode", mode},
          {"observed_max", r.observed_max},
          {"achieving_pair", nlohmann::json::array({to_json(r.achieving_m), to_json(r.achieving_n)})},
          {"machines_examined", r.machines_examined},
          {"predicted_bound", r.predicted_bound},
          {"bound_violations", r.bound_violations},
          {"oracle_disagreements", r.oracle_disagreements}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"State-complexity laboratory for star/reversal combined with union/intersection", "sclab"};
  app.require_subcommand(1);
  Options o;

  auto* sc = app.add_subcommand("sc", "Measure one (m, n) cell of the witness family against the tight bound");
  sc->add_option("op", o.op_name, "Combined operation")->required();
  sc->add_option("--m", o.m, "Size of M")->required();
  sc->add_option("--n", o.n, "Size of N")->required();
  sc->add_flag("--json", o.json, "Print the record as JSON");
  sc->add_flag("--no-timing", o.no_timing, "Report elapsed_ms as 0 for byte-reproducible output");

  auto* witness = app.add_subcommand("witness", "Emit a witness DFA (text format, or DOT with --dot)");
  witness->add_option("family", o.family, "star-m | star-n | star-n0 | reversal-m | reversal-n")->required();
  witness->add_option("--m", o.m, "Size (for the *-m families)");
  witness->add_option("--n", o.n, "Size (for the *-n families)");
  witness->add_option("--size", o.size, "Size, for any family");
  witness->add_flag("--dot", o.dot, "Emit Graphviz DOT instead of the text format");

  auto* verify = app.add_subcommand("verify", "Check two DFA files against the applicable upper bound");
  verify->add_option("op", o.op_name, "Combined operation")->required();
  verify->add_option("fileM", o.file_m, "DFA text file for M")->required();
  verify->add_option("fileN", o.file_n, "DFA text file for N")->required();
  verify->add_flag("--json", o.json, "Print the report as JSON");

  auto* sweep = app.add_subcommand("sweep", "Measure a grid of witness cells against the tight bound");
  sweep->add_option("op", o.op_name, "Combined operation")->required();
  sweep->add_option("--m", o.m_range, "m range, 'lo..hi' or a single value (default 2..max)");
  sweep->add_option("--n", o.n_range, "n range, 'lo..hi' or a single value (default 2..8)");
  sweep->add_option("--format", o.format, "csv | json");
  sweep->add_option("--jobs", o.jobs, "Worker threads (default: hardware concurrency)");
  sweep->add_flag("--no-timing", o.no_timing, "Report elapsed_ms as 0 for byte-reproducible output");

  auto* search = app.add_subcommand("search", "Maximize state complexity over enumerated or sampled DFA pairs");
  search->add_option("op", o.op_name, "Combined operation")->required();
  search->add_option("--m", o.m, "Size of M")->required();
  search->add_option("--n", o.n, "Size of N")->required();
  search->add_option("--sigma", o.sigma, "Alphabet size (symbols a, b, c, ...)")->required();
  search->add_flag("--exhaustive", o.exhaustive, "Enumerate every pair (start state fixed at 0)");
  search->add_option("--samples", o.samples, "Number of random pairs");
  search->add_option("--seed", o.seed, "Seed for sampled mode");
  search->add_option("--json", o.json_path, "Also write the report as JSON to this file");
  search->add_option("--jobs", o.jobs, "Worker threads (default: hardware concurrency)");
  search->add_flag("--cross-check", o.cross_check, "Also run the table-filling minimizer on every product");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (sc->parsed()) return cmd_sc(o, out);
    if (witness->parsed()) return cmd_witness(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
    if (search->parsed()) return cmd_search(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise " << kPairBudgetEnv << " to allow it)\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace sclab::cli
