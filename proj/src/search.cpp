#include "sclab/search.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>

#include "sclab/errors.hpp"
#include "sclab/minimization.hpp"
#include "sclab/witnesses.hpp"

namespace sclab {

std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::Exhaustive ? "exhaustive" : "sampled";
}

std::uint64_t pair_budget_from_env() {
  const char* raw = std::getenv(kPairBudgetEnv);
  if (raw == nullptr) return kDefaultEnumerationBudget;
  std::uint64_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) return kDefaultEnumerationBudget;
  return value;
}

namespace {

struct Best {
  std::size_t size = 0;
  std::uint64_t index = UINT64_MAX;  // position in pair order
  std::uint64_t violations = 0;
  std::uint64_t disagreements = 0;

  void offer(std::size_t s, std::uint64_t idx) {
    if (s > size || (s == size && idx < index)) {
      size = s;
      index = idx;
    }
  }
  void merge(const Best& other) {
    if (other.index != UINT64_MAX) offer(other.size, other.index);
    violations += other.violations;
    disagreements += other.disagreements;
  }
};

/// Pairs are numbered 0..count-1; pair_at(i) returns the two machines.
template <typename PairAt>
Best run_pairs(CombinedOp op, std::uint64_t count, const PairAt& pair_at, const SearchOptions& options) {
  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::uint64_t>(count, 1))));

  constexpr std::uint64_t kChunk = 256;
  std::atomic<std::uint64_t> cursor{0};
  std::vector<Best> partial(threads);
  auto worker = [&](unsigned id) {
    Best& best = partial[id];
    while (true) {
      const std::uint64_t begin = cursor.fetch_add(kChunk);
      if (begin >= count) break;
      const std::uint64_t end = std::min(count, begin + kChunk);
      for (std::uint64_t i = begin; i < end; ++i) {
        const auto& [dm, dn] = pair_at(i);
        const Dfa product = combined(dm, dn, op).product.dfa;
        const Dfa minimal = minimize(product);
        const std::size_t size = minimal.state_count;
        best.offer(size, i);
        if (size > applicable_bound(op, dm, dn)) ++best.violations;
        if (options.cross_check && !(table_filling_minimize(product) == minimal)) ++best.disagreements;
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }
  Best total;
  for (const auto& b : partial) total.merge(b);
  return total;
}

}  // namespace

SearchReport search_max(CombinedOp op, std::size_t m, std::size_t n, const Alphabet& alphabet,
                        const SearchOptions& options) {
  if (m < 2 || n < 2) throw DomainError("search needs m >= 2 and n >= 2");
  SearchReport report;
  report.op = op;
  report.m = m;
  report.n = n;
  report.sigma = alphabet.size();
  report.mode = options.mode;
  report.predicted_bound = predicted_bound(op, m, n);

  if (options.mode == SearchMode::Exhaustive) {
    const auto count_m = dfa_count(m, alphabet.size());
    const auto count_n = dfa_count(n, alphabet.size());
    if (!count_m || !count_n || *count_m > UINT64_MAX / *count_n) {
      throw BudgetExceeded(UINT64_MAX, options.pair_budget);
    }
    const std::uint64_t pairs = *count_m * *count_n;
    if (pairs > options.pair_budget) throw BudgetExceeded(pairs, options.pair_budget);

    std::vector<Dfa> lefts, rights;
    enumerate_dfas(m, alphabet, [&](const Dfa& d) { lefts.push_back(d); }, options.pair_budget);
    enumerate_dfas(n, alphabet, [&](const Dfa& d) { rights.push_back(d); }, options.pair_budget);
    const std::uint64_t width = rights.size();
    auto pair_at = [&](std::uint64_t i) {
      return std::pair<const Dfa&, const Dfa&>(lefts[i / width], rights[i % width]);
    };
    const Best best = run_pairs(op, pairs, pair_at, options);
    report.observed_max = best.size;
    report.achieving_m = lefts[best.index / width];
    report.achieving_n = rights[best.index % width];
    report.machines_examined = pairs;
    report.bound_violations = best.violations;
    report.oracle_disagreements = best.disagreements;
    return report;
  }

  report.samples = options.samples;
  report.seed = options.seed;
  if (options.samples == 0) throw DomainError("sampled search needs at least one sample");
  std::vector<std::pair<Dfa, Dfa>> pairs;
  pairs.reserve(options.samples);
  SplitMix64 master(options.seed);
  for (std::uint64_t i = 0; i < options.samples; ++i) {
    const std::uint64_t seed_m = master.next();
    const std::uint64_t seed_n = master.next();
    pairs.emplace_back(random_dfa(m, alphabet, seed_m), random_dfa(n, alphabet, seed_n));
  }
  auto pair_at = [&](std::uint64_t i) {
    return std::pair<const Dfa&, const Dfa&>(pairs[i].first, pairs[i].second);
  };
  const Best best = run_pairs(op, options.samples, pair_at, options);
  report.observed_max = best.size;
  report.achieving_m = pairs[best.index].first;
  report.achieving_n = pairs[best.index].second;
  report.machines_examined = options.samples;
  report.bound_violations = best.violations;
  report.oracle_disagreements = best.disagreements;
  return report;
}

}  // namespace sclab
