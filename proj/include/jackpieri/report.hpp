#pragma once

// Verification reports and the case runner shared by all suites.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "jackpieri/combinatorics.hpp"
#include "jackpieri/error.hpp"

namespace jackpieri {

struct CaseOutcome {
  bool passed = true;
  std::string residual;  // rendered LHS - RHS, or the error text

  static CaseOutcome pass() { return {}; }
  static CaseOutcome fail(std::string residual) { return {false, std::move(residual)}; }
};

struct CaseFailure {
  std::string parameters;
  std::string residual;
};

struct VerificationReport {
  std::string suite;
  std::vector<std::string> covers;
  long cases = 0;
  long passed = 0;
  std::optional<CaseFailure> first_failure;
  double millis = 0;

  long failed() const noexcept { return cases - passed; }
  bool ok() const noexcept { return cases == passed; }
};

/// Ordered list of named, independent checks.
class CaseList {
 public:
  void add(std::string parameters, std::function<CaseOutcome()> check) {
    cases_.push_back({std::move(parameters), std::move(check)});
  }
  std::size_t size() const noexcept { return cases_.size(); }

  struct Case {
    std::string parameters;
    std::function<CaseOutcome()> check;
  };
  const std::vector<Case>& cases() const noexcept { return cases_; }

  /// Keeps an object referenced by the checks alive as long as the list.
  void retain(std::shared_ptr<const void> object) { retained_.push_back(std::move(object)); }

 private:
  std::vector<Case> cases_;
  std::vector<std::shared_ptr<const void>> retained_;
};

/// Worker count from JACKPIERI_THREADS; 0 or 1 means serial, unset means
/// the hardware concurrency.
inline unsigned configured_threads() {
  if (const char* env = std::getenv("JACKPIERI_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 0) return v == 0 ? 1u : static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

/// Runs fn(i) for i in [0, n) on up to `threads` workers.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) fn(i);
  };
  std::vector<std::thread> pool;
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

/// Runs every case; the report does not depend on scheduling.
inline VerificationReport run_cases(std::string suite, std::vector<std::string> covers, const CaseList& list,
                                    unsigned threads = configured_threads()) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CaseOutcome> outcomes(list.size());
  parallel_for(list.size(), threads, [&](std::size_t i) {
    try {
      outcomes[i] = list.cases()[i].check();
    } catch (const std::exception& e) {
      outcomes[i] = CaseOutcome::fail(std::string("error: ") + e.what());
    }
  });
  VerificationReport report{std::move(suite), std::move(covers)};
  report.cases = static_cast<long>(list.size());
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].passed) {
      ++report.passed;
    } else if (!report.first_failure) {
      report.first_failure = CaseFailure{list.cases()[i].parameters, outcomes[i].residual};
    }
  }
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// FNV-1a, stable across platforms (unlike std::hash).
inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 14695981039346656037ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Generator for one case, determined by the seed and the case identity.
inline std::mt19937_64 case_rng(std::uint64_t seed, std::string_view suite, std::string_view key) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(fnv1a(suite)), static_cast<std::uint32_t>(fnv1a(key))};
  return std::mt19937_64(seq);
}

/// Integer vector with entries uniform in [lo, hi].
inline IntVector random_int_vector(std::mt19937_64& rng, int rank, int lo = -20, int hi = 20) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntVector v;
  for (int i = 0; i < rank; ++i) v.entries.push_back(dist(rng));
  return v;
}

}  // namespace jackpieri
