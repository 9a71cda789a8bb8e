#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rsieve/bit_vector.hpp"
#include "rsieve/work_meter.hpp"

namespace rsieve {

/// Primality of every integer in 0..limit.
struct PrimalityTable {
    std::uint64_t limit = 0;
    BitVector bits;

    bool is_prime(std::uint64_t i) const { return bits.test(static_cast<std::size_t>(i)); }
    std::uint64_t count() const { return bits.count(); }
};

/// All primes up to and including limit, ascending.
struct PrimeList {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes;
};

/// Primality of the closed interval [left, right]; bit j describes left + j.
struct SegmentBuffer {
    std::uint64_t left = 0;
    std::uint64_t right = 0;
    BitVector bits;

    std::uint64_t size() const noexcept { return right - left + 1; }
    bool is_prime(std::uint64_t value) const { return bits.test(static_cast<std::size_t>(value - left)); }
};

/// floor(sqrt(n)), exact for all 64-bit n.
std::uint64_t isqrt(std::uint64_t n) noexcept;

bool trial_division_is_prime(std::uint64_t m) noexcept;

/// Unsegmented sieve of Eratosthenes over 0..n. Crossings are counted into meter.
PrimalityTable simple_sieve(std::uint64_t n, WorkMeter* meter = nullptr);

PrimeList base_primes(std::uint64_t limit);

/// Sieves [left, right] with the given base primes, which must reach floor(sqrt(right)).
SegmentBuffer sieve_segment(std::uint64_t left, std::uint64_t right, const PrimeList& base,
                            WorkMeter* meter = nullptr);

using PrimeSink = std::function<void(std::uint64_t)>;

/// Streams every prime <= n: the base primes up to floor(sqrt(n)) first, then each
/// segment of width delta in order. delta = 0 selects floor(sqrt(n)).
void segmented_sieve(std::uint64_t n, std::uint64_t delta, const PrimeSink& emit);
std::vector<std::uint64_t> segmented_sieve(std::uint64_t n, std::uint64_t delta = 0);

/// Streams the primes in [lo, hi] using segments of width delta (0 selects floor(sqrt(hi))).
void segmented_range(std::uint64_t lo, std::uint64_t hi, std::uint64_t delta, const PrimeSink& emit);

} // namespace rsieve
