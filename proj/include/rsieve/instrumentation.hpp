#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "rsieve/work_meter.hpp"

namespace rsieve {

/// Work and space observed while the rolling sieve classifies [start, n).
struct RollingWorkReport {
    std::uint64_t start = 0;
    std::uint64_t n = 0;
    WorkMeter meter;
    std::uint64_t peak_nodes = 0;
    std::uint64_t final_delta = 0;
    /// Largest delta / (4 sqrt(m) + 8) seen over the run; <= 1 means the delta bound held.
    double peak_delta_ratio = 0.0;
};

RollingWorkReport count_rolling_work(std::uint64_t start, std::uint64_t n);

/// Pushes the rolling sieve performs while classifying [start, n), computed
/// arithmetically: a prime p contributes one push per multiple of p in [a, n),
/// where a = start for the primes placed at initialization and a = p^2 for a
/// prime activated on reaching its square.
std::uint64_t expected_pushes(std::uint64_t start, std::uint64_t n);

/// Cost of finding one prime after the previous one.
struct IncrementalCostReport {
    std::uint64_t gap_start = 0;   // last integer already classified
    std::uint64_t gap_length = 0;  // next prime minus gap_start
    std::uint64_t work = 0;        // work units spent on the gap
    double normalized = 0.0;       // work / gap_length
};

using CostSink = std::function<void(const IncrementalCostReport&)>;

/// Per-gap rolling-sieve costs for every prime in [start, n].
void incremental_profile(std::uint64_t start, std::uint64_t n, const CostSink& sink);
std::vector<IncrementalCostReport> incremental_profile(std::uint64_t start, std::uint64_t n);

struct ProfileSummary {
    std::uint64_t start = 0;
    std::uint64_t n = 0;
    std::uint64_t gaps = 0;
    double max_normalized = 0.0;
    double mean_normalized = 0.0;
    /// max_normalized / (ln n / ln ln n)
    double windowed_constant = 0.0;
};

ProfileSummary summarize_profile(std::uint64_t start, std::uint64_t n);

/// sum_{p <= x} 1/p - ln ln x.
double mertens_check(std::uint64_t x);
/// pi(x) ln x / x.
double pnt_check(std::uint64_t x);
/// (sum_{p <= x} ln p) / x.
double chebyshev_check(std::uint64_t x);

void write_bench_csv(std::ostream& out, const std::vector<RollingWorkReport>& rows);
void write_profile_csv(std::ostream& out, const std::vector<IncrementalCostReport>& rows);
void write_summary_csv(std::ostream& out, const std::vector<ProfileSummary>& rows);

} // namespace rsieve
