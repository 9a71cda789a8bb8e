#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>

#include "rsieve/atkin.hpp"
#include "rsieve/work_meter.hpp"

namespace rsieve {

/// Incremental generator built from two consecutive Atkin intervals.
///
/// The ready interval answers queries from its bit vector and prime list. The
/// pending interval that follows it is sieved a few work units at a time inside
/// each query, at a per-integer rate calibrated from the previous interval, so
/// that it is complete by the time the ready interval runs out. The two are then
/// swapped and a new pending interval of width floor(sqrt(n)) + 2 is started.
///
/// A pending interval that is not complete at swap time means the calibration
/// was wrong; that is reported as InvariantViolation.
class IncrementalSieve {
public:
    static constexpr std::uint64_t kMinStart = 100;

    /// budget_override > 0 fixes the per-call budget instead of calibrating it.
    explicit IncrementalSieve(std::uint64_t start = kMinStart, WorkMeter* meter = nullptr,
                              std::uint64_t budget_override = 0);

    /// Primality of the current integer; advances by one.
    bool next();

    /// Smallest prime >= the current integer; advances past it.
    std::uint64_t nextprime();

    std::uint64_t current() const noexcept { return n_; }
    const ReadyInterval& ready() const noexcept { return ready_; }
    const PendingInterval& pending() const noexcept { return *pending_; }

    /// Work units invested per integer consumed.
    std::uint64_t budget_per_call() const noexcept { return budget_; }
    std::uint64_t budget_per_gap_unit() const noexcept { return gap_budget_; }

    std::uint64_t swaps() const noexcept { return swaps_; }
    std::uint64_t last_call_work() const noexcept { return last_call_work_; }
    bool last_call_swapped() const noexcept { return last_call_swapped_; }

    /// Words held by both intervals, the shared base primes and the bookkeeping.
    std::size_t live_words() const noexcept;

    WorkMeter* meter() const noexcept { return meter_; }

private:
    std::uint64_t invest(std::uint64_t units);
    void swap_intervals();
    void recalibrate(std::uint64_t units, std::uint64_t width);

    std::shared_ptr<BasePrimeCache> base_;
    ReadyInterval ready_;
    std::unique_ptr<PendingInterval> pending_;
    std::uint64_t n_ = 0;
    std::uint64_t budget_ = 1;
    std::uint64_t gap_budget_ = 1;
    std::uint64_t budget_override_ = 0;
    std::uint64_t swaps_ = 0;
    std::uint64_t last_call_work_ = 0;
    bool last_call_swapped_ = false;
    WorkMeter* meter_ = nullptr;
};

} // namespace rsieve
