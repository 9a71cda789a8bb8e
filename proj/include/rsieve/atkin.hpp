#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "rsieve/bit_vector.hpp"
#include "rsieve/work_meter.hpp"

namespace rsieve {

/// Ascending primes up to limit(), extendable in small budgeted increments so
/// that growth can be folded into a bounded-work step.
class BasePrimeCache {
public:
    explicit BasePrimeCache(std::uint64_t limit = 3);

    std::uint64_t limit() const noexcept { return limit_; }
    const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }

    /// Trial-divides candidates above limit() until limit() >= target or `budget`
    /// divisions have been spent. Returns the number of divisions spent.
    std::uint64_t extend(std::uint64_t target, std::uint64_t budget);

    std::size_t live_words() const noexcept { return primes_.size() + 3; }

private:
    std::vector<std::uint64_t> primes_;
    std::uint64_t limit_ = 0;
    std::size_t divisor_index_ = 0;
};

enum class AtkinPhase : std::uint8_t { Form1, Form2, Form3, Squarefree, SmallPrime, Done };

const char* to_string(AtkinPhase phase) noexcept;

/// A finished interval: primality bits for [lo, lo + delta) and its primes.
struct ReadyInterval {
    std::uint64_t lo = 0;
    std::uint64_t delta = 0;
    BitVector bits;
    std::vector<std::uint64_t> primes;
    std::size_t cursor = 0;

    std::uint64_t end() const noexcept { return lo + delta; }
    bool is_prime(std::uint64_t value) const { return bits.test(static_cast<std::size_t>(value - lo)); }
    std::size_t live_words() const noexcept { return bits.word_count() + primes.size() + 4; }
};

/// Segmented sieve of Atkin over [lo, lo + delta) that can be paused after any
/// number of work units and resumed later with identical results.
///
/// Phases run in order. The three form phases toggle a parity bit for each
/// representation m = 4x^2 + y^2 (m mod 12 in {1, 5}), m = 3x^2 + y^2 (m mod 12 = 7)
/// and m = 3x^2 - y^2 with x > y (m mod 12 = 11); the squarefree phase then clears
/// every multiple of p^2 for primes p >= 5. A column of fixed x costs one unit to
/// set up and one unit per lattice point; the squarefree phase costs one unit per
/// prime examined and one per cleared multiple.
class PendingInterval {
public:
    static constexpr std::uint64_t kMinLo = 7;
    static constexpr std::uint64_t kMaxEnd = std::uint64_t{1} << 31;

    struct StepResult {
        bool completed = false;
        std::uint64_t used = 0;
    };

    /// Without a shared cache the interval builds its own base primes up front.
    PendingInterval(std::uint64_t lo, std::uint64_t delta, std::shared_ptr<BasePrimeCache> base = nullptr);

    /// Performs at most `budget` work units.
    StepResult step(std::uint64_t budget, WorkMeter* meter = nullptr);

    /// Runs to completion regardless of budget.
    std::uint64_t run(WorkMeter* meter = nullptr);

    std::uint64_t lo() const noexcept { return lo_; }
    std::uint64_t delta() const noexcept { return hi_ - lo_; }
    std::uint64_t end() const noexcept { return hi_; }
    AtkinPhase phase() const noexcept { return phase_; }
    bool done() const noexcept { return phase_ == AtkinPhase::Done; }
    std::uint64_t spent() const noexcept { return spent_; }
    const BitVector& parity() const noexcept { return parity_; }
    std::size_t live_words() const noexcept { return parity_.word_count() + 12; }

    /// Converts a completed interval into its ready form. Throws std::logic_error
    /// unless the interval is done.
    ReadyInterval finish() &&;
    ReadyInterval finish() const&;

private:
    bool column_in_range() const noexcept;
    void open_column() noexcept;
    void visit(std::uint64_t count) noexcept;
    void next_phase() noexcept;

    std::uint64_t lo_;
    std::uint64_t hi_;
    BitVector parity_;
    std::shared_ptr<BasePrimeCache> base_;
    AtkinPhase phase_ = AtkinPhase::Form1;
    std::uint64_t spent_ = 0;

    // Form phases: column x, next y to visit and last y (inclusive) of the open column.
    std::uint64_t x_ = 1;
    std::uint64_t y_ = 0;
    std::uint64_t y_last_ = 0;
    bool in_column_ = false;

    // Squarefree phase: index of the current base prime and its next multiple of p^2.
    std::size_t prime_index_ = 0;
    std::uint64_t multiple_ = 0;
    bool in_prime_ = false;
};

ReadyInterval finish(PendingInterval&& pending);

/// Sieves [lo, lo + delta) in one go.
ReadyInterval atkin_segment_primes(std::uint64_t lo, std::uint64_t delta, WorkMeter* meter = nullptr);

} // namespace rsieve
