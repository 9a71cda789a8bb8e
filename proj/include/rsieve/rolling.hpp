#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "rsieve/work_meter.hpp"

namespace rsieve {

/// An integer together with its complete factorization, primes ascending.
struct FactoredInteger {
    std::uint64_t value = 0;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;

    friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;
};

/// Incremental sieve over a circular array of stacks.
///
/// Slot `pos` of the array corresponds to the integer `n` currently being
/// classified and slot (pos + k) mod delta to n + k. Every sieving prime p sits
/// in the slot of its least multiple >= n. Classifying n pops each prime from
/// slot pos (those are exactly the prime divisors of n up to sqrt(n)) and moves
/// it p slots ahead. An empty slot at n == r*r reveals that r is prime, and r
/// joins the sieving set.
///
/// Stacks are growable arrays, so the array costs one slot header per position
/// plus one word per sieving prime.
class RollingSieve {
public:
    static constexpr std::uint64_t kMinStart = 100;
    static constexpr std::uint64_t kMaxStart = std::uint64_t{1} << 60;

    /// Prepares the sieve so the first call to next() classifies `start`.
    explicit RollingSieve(std::uint64_t start = kMinStart, WorkMeter* meter = nullptr);

    /// Classifies the current integer and advances to the following one.
    bool next();

    /// Advances past the smallest prime >= the current integer and returns it.
    std::uint64_t nextprime();

    /// Like next(), but also returns the full factorization of the integer classified.
    FactoredInteger next_factored();

    std::uint64_t current() const noexcept { return n_; }
    std::uint64_t position() const noexcept { return pos_; }
    std::uint64_t root_bound() const noexcept { return r_; }
    std::uint64_t root_square() const noexcept { return s_; }
    std::uint64_t delta() const noexcept { return delta_; }
    std::uint64_t node_count() const noexcept { return nodes_; }
    const std::vector<std::vector<std::uint64_t>>& stacks() const noexcept { return stacks_; }

    /// The sieving primes currently stored, ascending.
    std::vector<std::uint64_t> active_primes() const;

    void attach_meter(WorkMeter* meter) noexcept { meter_ = meter; }
    WorkMeter* meter() const noexcept { return meter_; }

    /// Checks every structural invariant; throws InvariantViolation on the first failure.
    /// O(delta + nodes).
    void audit() const;

    /// Serializes the state as an "RSV1" record (the meter is not part of it).
    std::vector<std::uint8_t> save() const;
    void save(std::ostream& out) const;

    /// Rebuilds a state from an "RSV1" record; throws std::invalid_argument on a
    /// malformed or inconsistent record.
    static RollingSieve load(std::span<const std::uint8_t> bytes);
    static RollingSieve load(std::istream& in);

    friend bool operator==(const RollingSieve& a, const RollingSieve& b) noexcept {
        return a.n_ == b.n_ && a.pos_ == b.pos_ && a.r_ == b.r_ && a.s_ == b.s_ &&
               a.delta_ == b.delta_ && a.stacks_ == b.stacks_;
    }

private:
    struct Raw {};
    explicit RollingSieve(Raw) {}

    template <bool Factor>
    bool step(FactoredInteger* out);

    std::uint64_t n_ = 0;
    std::uint64_t pos_ = 0;
    std::uint64_t r_ = 0;
    std::uint64_t s_ = 0;
    std::uint64_t delta_ = 0;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<std::uint64_t>> stacks_;
    WorkMeter* meter_ = nullptr;
};

} // namespace rsieve
