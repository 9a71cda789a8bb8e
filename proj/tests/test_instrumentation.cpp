#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "oracle.hpp"
#include "rsieve/instrumentation.hpp"
#include "rsieve/rolling.hpp"

using namespace rsieve;

namespace {

// Pushes recounted by brute force: classifying m moves every prime p <= sqrt(m)
// that divides m (the activation push at m = p^2 included).
std::uint64_t brute_pushes(std::uint64_t start, std::uint64_t n) {
    std::uint64_t total = 0;
    for (std::uint64_t m = start; m < n; ++m)
        for (std::uint64_t p = 2; p * p <= m; ++p)
            total += m % p == 0 && oracle::is_prime(p);
    return total;
}

} // namespace

TEST_SUITE("instrumentation") {

TEST_CASE("expected pushes: single prime arithmetic") {
    // Only the prime 2 contributes to even multiples; its share at n = 1e4 from 100 is 4950.
    std::uint64_t twos = 0;
    for (std::uint64_t m = 100; m < 10000; ++m) twos += m % 2 == 0;
    CHECK(twos == 4950);
    CHECK(twos == (10000 - 100) / 2);
}

TEST_CASE("expected pushes equal measured pushes at n = 1e4") {
    const auto rep = count_rolling_work(100, 10000);
    CHECK(rep.meter.pushes == expected_pushes(100, 10000));
    CHECK(rep.meter.pushes == brute_pushes(100, 10000));
    CHECK(rep.peak_nodes == 25);
    CHECK(rep.peak_nodes == oracle::primes_between(2, 100).size());
}

TEST_CASE("activation at 121 is inside the window only once 121 is classified") {
    const auto without = expected_pushes(100, 121);
    const auto with = expected_pushes(100, 122);
    CHECK(with - without == 1);  // the stack at 121 is empty; only the activation push of 11
    CHECK(count_rolling_work(100, 122).meter.pushes == with);
    CHECK(count_rolling_work(100, 121).meter.pushes == without);
}

TEST_CASE("expected pushes are exact on random windows") {
    for (int i = 0; i < 20; ++i) {
        const auto start = oracle::uniform(100, 9000);
        const auto n = oracle::uniform(start + 1, 10000);
        const auto measured = count_rolling_work(start, n).meter.pushes;
        CHECK_MESSAGE(measured == expected_pushes(start, n), "start=" << start << " n=" << n);
        CHECK(measured == brute_pushes(start, n));
    }
}

TEST_CASE("window preconditions") {
    CHECK_THROWS_AS(count_rolling_work(99, 1000), std::invalid_argument);
    CHECK_THROWS_AS(count_rolling_work(1000, 1000), std::invalid_argument);
    CHECK_THROWS_AS(expected_pushes(500, 400), std::invalid_argument);
    CHECK_THROWS_AS(incremental_profile(100, 100), std::invalid_argument);
}

TEST_CASE("meter does not change sieve output") {
    WorkMeter meter;
    RollingSieve metered(100, &meter), plain(100);
    for (int i = 0; i < 100000; ++i) REQUIRE(metered.next() == plain.next());
    CHECK(metered == plain);
    CHECK(meter.total() == meter.pushes + meter.pops);
}

TEST_CASE("incremental profile") {
    const auto rows = incremental_profile(100, 10000);
    REQUIRE(!rows.empty());
    CHECK(rows.front().gap_start == 99);
    CHECK(rows.front().gap_length == 2);  // 101
    std::uint64_t covered = 99;
    for (const auto& r : rows) {
        CHECK(r.gap_start == covered);
        CHECK(r.gap_length >= 1);
        CHECK(oracle::is_prime(r.gap_start + r.gap_length));
        covered = r.gap_start + r.gap_length;
    }
    CHECK(rows.size() == oracle::primes_between(100, 10000).size());
    // twin primes 101, 103: 102 = 2 * 3 * 17, and only 2 and 3 are below sqrt(102).
    CHECK(rows[1].gap_start == 101);
    CHECK(rows[1].work == 4);

    const auto summary = summarize_profile(100, 10000);
    CHECK(summary.gaps == rows.size());
    CHECK(summary.max_normalized >= summary.mean_normalized);
    CHECK(summary.windowed_constant > 0);
}

TEST_CASE("number-theory estimates") {
    const double sixteen = 1.0 / 2 + 1.0 / 3 + 1.0 / 5 + 1.0 / 7 + 1.0 / 11 + 1.0 / 13;
    CHECK(mertens_check(16) == doctest::Approx(sixteen - std::log(std::log(16.0))).epsilon(1e-12));
    CHECK(mertens_check(100000) == mertens_check(100000));
    CHECK_THROWS_AS(mertens_check(15), std::invalid_argument);

    const double pnt = pnt_check(1000000);
    CHECK(pnt == doctest::Approx(78498.0 * std::log(1e6) / 1e6));
    CHECK(pnt > 0.9);
    CHECK(pnt < 1.2);
    const double cheb = chebyshev_check(1000000);
    CHECK(cheb > 0.9);
    CHECK(cheb < 1.2);
}

TEST_CASE("csv output") {
    std::ostringstream os;
    write_bench_csv(os, {count_rolling_work(100, 10000)});
    const auto text = os.str();
    CHECK(text.rfind("start,n,pushes,pops,expected_pushes,", 0) == 0);
    std::istringstream lines(text);
    std::string header, row, extra;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK_FALSE(std::getline(lines, extra));
    const auto pushes = std::to_string(expected_pushes(100, 10000));
    CHECK(row.rfind("100,10000," + pushes + ",", 0) == 0);
    CHECK(row.find(',' + pushes + ",25,") != std::string::npos);
}

}
