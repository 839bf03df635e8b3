#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "sclab/constructions.hpp"
#include "sclab/search.hpp"

namespace sclab::cli {

/// Process exit statuses shared by every command.
enum ExitStatus : int {
  kSuccess = 0,   // success / bound matched / bound held
  kMismatch = 1,  // measured != predicted, or an upper bound was violated
  kUsage = 2,     // bad arguments, parse errors, budget refusal
};

inline constexpr std::size_t kMaxSweepMStar = 12;
inline constexpr std::size_t kMaxSweepMReversal = 10;
inline constexpr std::size_t kMaxSweepN = 8;

/// One measured (op, m, n) cell against its predicted tight bound.
struct SweepRecord {
  CombinedOp op{};
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t measured = 0;
  std::uint64_t predicted = 0;
  bool match = false;
  std::uint64_t elapsed_ms = 0;
};

/// Measures the witness pair of op at (m, n).
SweepRecord measure_cell(CombinedOp op, std::size_t m, std::size_t n);

inline constexpr const char* kSweepCsvHeader = "op,m,n,k,measured,predicted,match,elapsed_ms";

std::string csv_row(const SweepRecord& r);
nlohmann::json to_json(const SweepRecord& r);
nlohmann::json to_json(const Dfa& d);
nlohmann::json to_json(const SearchReport& r);

/// Runs one command line (without the program name). Never throws; errors are
/// written to `err` and reflected in the returned ExitStatus.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sclab::cli
