#include "rsieve/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rsieve {

std::uint64_t isqrt(std::uint64_t n) noexcept {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    // Correct the floating-point estimate; r*r cannot overflow once r < 2^32.
    r = std::min<std::uint64_t>(r, 0xFFFFFFFFull);
    while (r * r > n) --r;
    while (r < 0xFFFFFFFFull && (r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool trial_division_is_prime(std::uint64_t m) noexcept {
    if (m < 2) return false;
    for (std::uint64_t d = 2; d <= m / d; ++d)
        if (m % d == 0) return false;
    return true;
}

PrimalityTable simple_sieve(std::uint64_t n, WorkMeter* meter) {
    if (n < 2) throw std::invalid_argument("simple_sieve: n must be at least 2, got " + std::to_string(n));
    PrimalityTable table{n, BitVector(static_cast<std::size_t>(n) + 1, true)};
    auto& s = table.bits;
    s.reset(0);
    s.reset(1);
    std::uint64_t crossed = 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (!s.test(p)) continue;
        for (std::uint64_t q = 2 * p; q <= n; q += p) {
            s.reset(q);
            ++crossed;
        }
    }
    if (meter) meter->crossings += crossed;
    return table;
}

PrimeList base_primes(std::uint64_t limit) {
    if (limit < 1) throw std::invalid_argument("base_primes: limit must be at least 1");
    PrimeList list{limit, {}};
    if (limit < 2) return list;
    const auto table = simple_sieve(limit);
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (table.bits.test(i)) list.primes.push_back(i);
    return list;
}

SegmentBuffer sieve_segment(std::uint64_t left, std::uint64_t right, const PrimeList& base,
                            WorkMeter* meter) {
    if (left < 2 || right < left)
        throw std::invalid_argument("sieve_segment: need 2 <= left <= right");
    if (base.limit < isqrt(right))
        throw std::invalid_argument("sieve_segment: base primes reach " + std::to_string(base.limit) +
                                    " but floor(sqrt(right)) = " + std::to_string(isqrt(right)));
    SegmentBuffer seg{left, right, BitVector(static_cast<std::size_t>(right - left + 1), true)};
    std::uint64_t crossed = 0;
    for (const auto p : base.primes) {
        if (p > right / p) break;
        std::uint64_t first = left + ((p - left % p) % p);
        if (first == p) first = 2 * p;
        for (std::uint64_t q = first; q <= right; q += p) {
            seg.bits.reset(q - left);
            ++crossed;
        }
    }
    if (meter) meter->crossings += crossed;
    return seg;
}

void segmented_range(std::uint64_t lo, std::uint64_t hi, std::uint64_t delta, const PrimeSink& emit) {
    lo = std::max<std::uint64_t>(lo, 2);
    if (hi < lo) return;
    if (delta == 0) delta = std::max<std::uint64_t>(isqrt(hi), 1);
    const auto base = base_primes(std::max<std::uint64_t>(isqrt(hi), 1));
    for (std::uint64_t left = lo; left <= hi;) {
        const std::uint64_t right = std::min(hi, left + delta - 1);
        const auto seg = sieve_segment(left, right, base);
        for (std::uint64_t v = left; v <= right; ++v)
            if (seg.bits.test(v - left)) emit(v);
        if (right == hi) break;
        left = right + 1;
    }
}

void segmented_sieve(std::uint64_t n, std::uint64_t delta, const PrimeSink& emit) {
    if (n < 4) throw std::invalid_argument("segmented_sieve: n must be at least 4");
    const std::uint64_t root = isqrt(n);
    if (delta == 0) delta = root;
    const auto base = base_primes(root);
    for (const auto p : base.primes) emit(p);
    for (std::uint64_t left = root + 1; left <= n; left += delta) {
        const std::uint64_t right = std::min(left + delta - 1, n);
        const auto seg = sieve_segment(left, right, base);
        for (std::uint64_t v = left; v <= right; ++v)
            if (seg.bits.test(v - left)) emit(v);
        if (right == n) break;
    }
}

std::vector<std::uint64_t> segmented_sieve(std::uint64_t n, std::uint64_t delta) {
    std::vector<std::uint64_t> out;
    segmented_sieve(n, delta, [&](std::uint64_t p) { out.push_back(p); });
    return out;
}

} // namespace rsieve
