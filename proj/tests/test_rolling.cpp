#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "oracle.hpp"
#include "rsieve/baseline.hpp"
#include "rsieve/errors.hpp"
#include "rsieve/rolling.hpp"

using namespace rsieve;

namespace {

std::uint64_t slot_of(const RollingSieve& s, std::uint64_t prime) {
    for (std::uint64_t i = 0; i < s.delta(); ++i)
        for (auto p : s.stacks()[i])
            if (p == prime) return i;
    return ~std::uint64_t{0};
}

void advance_to(RollingSieve& s, std::uint64_t n) {
    while (s.current() < n) s.next();
}

} // namespace

TEST_SUITE("rolling") {

TEST_CASE("initialization at 100") {
    RollingSieve s(100);
    CHECK(s.current() == 100);
    CHECK(s.position() == 0);
    CHECK(s.root_bound() == 11);
    CHECK(s.root_square() == 121);
    CHECK(s.delta() == 13);
    CHECK(slot_of(s, 7) == 5);  // 105
    CHECK(slot_of(s, 2) == 0);  // 100
    CHECK(slot_of(s, 3) == 2);  // 102
    CHECK(s.active_primes() == std::vector<std::uint64_t>{2, 3, 5, 7});
    s.audit();
}

TEST_CASE("initialization at 1e6") {
    RollingSieve s(1000000);
    CHECK(s.root_bound() == 1001);
    CHECK(s.delta() == 1003);
    CHECK(s.node_count() == oracle::primes_between(2, 1000).size());
    CHECK(s.node_count() == 168);
    s.audit();
}

TEST_CASE("start bounds") {
    CHECK_THROWS_AS(RollingSieve(99), std::invalid_argument);
    CHECK_THROWS_AS(RollingSieve(0), std::invalid_argument);
    CHECK_THROWS_AS(RollingSieve(RollingSieve::kMaxStart + 1), std::invalid_argument);
    RollingSieve big(1000000000000ull);
    big.audit();
    std::uint64_t first = 1000000000000ull;
    while (!oracle::is_prime(first)) ++first;
    CHECK(big.nextprime() == first);
}

TEST_CASE("first classifications from 100") {
    RollingSieve s(100);
    std::vector<bool> got;
    for (int i = 0; i < 6; ++i) got.push_back(s.next());
    CHECK(got == std::vector<bool>{false, true, false, true, false, false});
    for (std::uint64_t v = 100; v < 106; ++v) CHECK(got[v - 100] == oracle::is_prime(v));
}

TEST_CASE("square of a prime activates it") {
    RollingSieve s(100);
    advance_to(s, 121);
    CHECK(s.root_square() == 121);
    CHECK(s.stacks()[s.position()].empty());
    CHECK(slot_of(s, 11) == ~std::uint64_t{0});
    const auto pos = s.position();
    const auto delta = s.delta();
    CHECK_FALSE(s.next());
    CHECK(slot_of(s, 11) == (pos + 11) % delta);  // 132
    CHECK(s.root_bound() == 12);
    s.audit();
}

TEST_CASE("square of a composite does not activate anything") {
    RollingSieve s(100);
    advance_to(s, 144);
    const auto before = s.node_count();
    CHECK_FALSE(s.next());
    CHECK(s.node_count() == before);
    CHECK(s.root_bound() == 13);
}

TEST_CASE("delta grows by two when the cursor wraps") {
    RollingSieve s(100);
    for (int i = 0; i < 12; ++i) {
        s.next();
        CHECK(s.delta() == 13);
    }
    CHECK(s.current() == 112);
    s.next();
    CHECK(s.current() == 113);
    CHECK(s.position() == 0);
    CHECK(s.delta() == 15);
    CHECK(s.stacks().size() == 15);
    s.audit();
}

TEST_CASE("nextprime") {
    RollingSieve s(100);
    CHECK(s.nextprime() == 101);
    RollingSieve t(100);
    advance_to(t, 114);
    CHECK(t.nextprime() == 127);
    CHECK(t.current() == 128);
}

TEST_CASE("prime stream from 100 to 1e6 matches simple_sieve") {
    const auto table = simple_sieve(1000000);
    RollingSieve s(100);
    std::uint64_t mismatches = 0;
    for (std::uint64_t v = 100; v <= 1000000; ++v) mismatches += s.next() != table.is_prime(v);
    CHECK(mismatches == 0);

    RollingSieve t(100);
    std::vector<std::uint64_t> got;
    for (std::uint64_t p = t.nextprime(); p <= 1000000; p = t.nextprime()) got.push_back(p);
    std::vector<std::uint64_t> want;
    for (std::uint64_t v = 101; v <= 1000000; ++v)
        if (table.is_prime(v)) want.push_back(v);
    CHECK(got == want);
}

TEST_CASE("boolean stream matches trial division for 1e5 calls") {
    RollingSieve s(100);
    std::uint64_t bad = 0;
    for (std::uint64_t v = 100; v < 100100; ++v) bad += s.next() != oracle::is_prime(v);
    CHECK(bad == 0);
}

TEST_CASE("arbitrary start values") {
    for (const std::uint64_t start : {100ull, 101ull, 120ull, 121ull, 9999ull, 10000ull, 123457ull}) {
        RollingSieve s(start);
        s.audit();
        std::uint64_t bad = 0;
        for (std::uint64_t v = start; v < start + 3000; ++v) bad += s.next() != oracle::is_prime(v);
        CHECK_MESSAGE(bad == 0, "start=" << start);
        s.audit();
    }
}

TEST_CASE("factored form") {
    RollingSieve s(100);
    const auto f100 = s.next_factored();
    CHECK(f100.value == 100);
    CHECK(f100.factors == std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 2}, {5, 2}});
    const auto f101 = s.next_factored();
    CHECK(f101.factors == std::vector<std::pair<std::uint64_t, std::uint32_t>>{{101, 1}});
    advance_to(s, 121);
    const auto f121 = s.next_factored();
    CHECK(f121.value == 121);
    CHECK(f121.factors == std::vector<std::pair<std::uint64_t, std::uint32_t>>{{11, 2}});
}

TEST_CASE("factored stream is sound up to 1e5") {
    RollingSieve s(100);
    std::uint64_t bad = 0;
    for (std::uint64_t v = 100; v <= 100000; ++v) {
        const auto f = s.next_factored();
        bad += f.value != v;
        bad += f.factors != oracle::factorize(v);
        std::uint64_t product = 1;
        for (auto [p, e] : f.factors) {
            bad += !oracle::is_prime(p) || e == 0;
            for (std::uint32_t i = 0; i < e; ++i) product *= p;
        }
        bad += product != v;
    }
    CHECK(bad == 0);
}

TEST_CASE("next and next_factored move the stacks identically") {
    RollingSieve a(100), b(100);
    for (int i = 0; i < 20000; ++i) {
        const bool pa = a.next();
        const auto fb = b.next_factored();
        REQUIRE(pa == (fb.factors.size() == 1 && fb.factors[0].second == 1));
    }
    CHECK(a == b);
}

TEST_CASE("audit after every call up to 1e4") {
    RollingSieve s(100);
    std::uint64_t last_r = s.root_bound();
    std::vector<std::uint64_t> expected = oracle::primes_between(2, last_r - 1);
    while (s.current() <= 10000) {
        s.next();
        s.audit();
        if (s.root_bound() != last_r) {
            last_r = s.root_bound();
            expected = oracle::primes_between(2, last_r - 1);
        }
        REQUIRE(s.active_primes() == expected);
        REQUIRE(s.delta() * s.delta() > s.current());
        REQUIRE(s.root_bound() < s.delta());
    }
}

TEST_CASE("audit at random checkpoints up to 1e6") {
    std::vector<std::uint64_t> points;
    for (int i = 0; i < 100; ++i) points.push_back(oracle::uniform(101, 1000000));
    std::sort(points.begin(), points.end());
    RollingSieve s(100);
    for (const auto point : points) {
        advance_to(s, point);
        s.audit();
        CHECK(s.active_primes() == oracle::primes_between(2, s.root_bound() - 1));
        const double bound = 4.0 * std::sqrt(static_cast<double>(s.current())) + 8.0;
        CHECK(static_cast<double>(s.delta()) <= bound);
        CHECK(s.delta() * s.delta() > s.current());
    }
}

TEST_CASE("pushes balance pops while r is fixed") {
    WorkMeter meter;
    RollingSieve s(100, &meter);
    std::uint64_t activations = 0;
    for (int i = 0; i < 50000; ++i) {
        const auto r = s.root_bound();
        const auto nodes = s.node_count();
        const auto before_push = meter.pushes, before_pop = meter.pops;
        s.next();
        if (s.root_bound() == r) REQUIRE(meter.pushes - before_push == meter.pops - before_pop);
        activations += s.node_count() - nodes;
    }
    CHECK(meter.pushes - meter.pops == activations);
    CHECK(s.node_count() == oracle::primes_between(2, s.root_bound() - 1).size());
}

TEST_CASE("a corrupted state fails the audit") {
    RollingSieve s(1000);
    auto bytes = s.save();
    // Overwrite n with n + 1: every stored prime is now one slot off.
    bytes[4] = static_cast<std::uint8_t>(bytes[4] + 1);
    CHECK_THROWS_AS(RollingSieve::load(bytes), std::invalid_argument);
}

}
