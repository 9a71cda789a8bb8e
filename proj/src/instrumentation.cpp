#include "rsieve/instrumentation.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>

#include "rsieve/baseline.hpp"
#include "rsieve/rolling.hpp"

namespace rsieve {
namespace {

void require_window(std::uint64_t start, std::uint64_t n, const char* who) {
    if (start < RollingSieve::kMinStart || n <= start)
        throw std::invalid_argument(std::string(who) + ": need 100 <= start < n, got start=" +
                                    std::to_string(start) + " n=" + std::to_string(n));
}

std::uint64_t multiples_in(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
    // multiples of p in [a, b)
    if (b <= a) return 0;
    return (b - 1) / p - (a - 1) / p;
}

} // namespace

RollingWorkReport count_rolling_work(std::uint64_t start, std::uint64_t n) {
    require_window(start, n, "count_rolling_work");
    RollingWorkReport rep;
    rep.start = start;
    rep.n = n;
    RollingSieve sieve(start, &rep.meter);
    for (std::uint64_t m = start; m < n; ++m) {
        sieve.next();
        const double bound = 4.0 * std::sqrt(static_cast<double>(m)) + 8.0;
        rep.peak_delta_ratio = std::max(rep.peak_delta_ratio, static_cast<double>(sieve.delta()) / bound);
    }
    rep.peak_nodes = sieve.node_count();
    rep.final_delta = sieve.delta();
    return rep;
}

std::uint64_t expected_pushes(std::uint64_t start, std::uint64_t n) {
    require_window(start, n, "expected_pushes");
    std::uint64_t total = 0;
    const std::uint64_t root = isqrt(start);
    for (std::uint64_t p = 2; p * p < n; ++p) {
        if (!trial_division_is_prime(p)) continue;
        const std::uint64_t activated = p <= root ? start : p * p;
        total += multiples_in(p, activated, n);
    }
    return total;
}

void incremental_profile(std::uint64_t start, std::uint64_t n, const CostSink& sink) {
    require_window(start, n, "incremental_profile");
    WorkMeter meter;
    RollingSieve sieve(start, &meter);
    std::uint64_t last = start - 1;
    for (;;) {
        const std::uint64_t before = meter.total();
        const std::uint64_t p = sieve.nextprime();
        if (p > n) break;
        IncrementalCostReport rep;
        rep.gap_start = last;
        rep.gap_length = p - last;
        rep.work = meter.total() - before;
        rep.normalized = static_cast<double>(rep.work) / static_cast<double>(rep.gap_length);
        sink(rep);
        last = p;
    }
}

std::vector<IncrementalCostReport> incremental_profile(std::uint64_t start, std::uint64_t n) {
    std::vector<IncrementalCostReport> out;
    incremental_profile(start, n, [&](const IncrementalCostReport& r) { out.push_back(r); });
    return out;
}

ProfileSummary summarize_profile(std::uint64_t start, std::uint64_t n) {
    ProfileSummary s;
    s.start = start;
    s.n = n;
    double sum = 0.0;
    incremental_profile(start, n, [&](const IncrementalCostReport& r) {
        ++s.gaps;
        sum += r.normalized;
        s.max_normalized = std::max(s.max_normalized, r.normalized);
    });
    if (s.gaps > 0) s.mean_normalized = sum / static_cast<double>(s.gaps);
    const double ln = std::log(static_cast<double>(n));
    s.windowed_constant = s.max_normalized / (ln / std::log(ln));
    return s;
}

double mertens_check(std::uint64_t x) {
    if (x < 16) throw std::invalid_argument("mertens_check: x must be at least 16");
    const auto table = simple_sieve(x);
    double sum = 0.0;
    for (std::uint64_t p = 2; p <= x; ++p)
        if (table.is_prime(p)) sum += 1.0 / static_cast<double>(p);
    return sum - std::log(std::log(static_cast<double>(x)));
}

double pnt_check(std::uint64_t x) {
    if (x < 2) throw std::invalid_argument("pnt_check: x must be at least 2");
    const double pi = static_cast<double>(simple_sieve(x).count());
    const double dx = static_cast<double>(x);
    return pi * std::log(dx) / dx;
}

double chebyshev_check(std::uint64_t x) {
    if (x < 2) throw std::invalid_argument("chebyshev_check: x must be at least 2");
    const auto table = simple_sieve(x);
    double theta = 0.0;
    for (std::uint64_t p = 2; p <= x; ++p)
        if (table.is_prime(p)) theta += std::log(static_cast<double>(p));
    return theta / static_cast<double>(x);
}

void write_bench_csv(std::ostream& out, const std::vector<RollingWorkReport>& rows) {
    out << "start,n,pushes,pops,expected_pushes,peak_nodes,final_delta,peak_delta_ratio,work_per_n_lnln_n\n";
    out << std::fixed << std::setprecision(6);
    for (const auto& r : rows) {
        const double dn = static_cast<double>(r.n);
        const double ratio = static_cast<double>(r.meter.pushes + r.meter.pops) / (dn * std::log(std::log(dn)));
        out << r.start << ',' << r.n << ',' << r.meter.pushes << ',' << r.meter.pops << ','
            << expected_pushes(r.start, r.n) << ',' << r.peak_nodes << ',' << r.final_delta << ','
            << r.peak_delta_ratio << ',' << ratio << '\n';
    }
}

void write_profile_csv(std::ostream& out, const std::vector<IncrementalCostReport>& rows) {
    out << "gap_start,gap_length,work,normalized\n";
    out << std::fixed << std::setprecision(6);
    for (const auto& r : rows)
        out << r.gap_start << ',' << r.gap_length << ',' << r.work << ',' << r.normalized << '\n';
}

void write_summary_csv(std::ostream& out, const std::vector<ProfileSummary>& rows) {
    out << "start,n,gaps,max_normalized,mean_normalized,windowed_constant\n";
    out << std::fixed << std::setprecision(6);
    for (const auto& r : rows)
        out << r.start << ',' << r.n << ',' << r.gaps << ',' << r.max_normalized << ',' << r.mean_normalized
            << ',' << r.windowed_constant << '\n';
}

} // namespace rsieve
