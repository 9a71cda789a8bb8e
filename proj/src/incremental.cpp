#include "rsieve/incremental.hpp"

#include <stdexcept>
#include <string>

#include "rsieve/baseline.hpp"
#include "rsieve/errors.hpp"

namespace rsieve {

IncrementalSieve::IncrementalSieve(std::uint64_t start, WorkMeter* meter, std::uint64_t budget_override)
    : budget_override_(budget_override), meter_(meter) {
    if (start < kMinStart)
        throw std::invalid_argument("IncrementalSieve: start must be at least 100, got " + std::to_string(start));
    const std::uint64_t width = isqrt(start) + 2;
    if (start > PendingInterval::kMaxEnd || PendingInterval::kMaxEnd - start < 2 * width)
        throw std::invalid_argument("IncrementalSieve: start too large for 2^31 interval range");
    base_ = std::make_shared<BasePrimeCache>(isqrt(start + 2 * width - 1));

    PendingInterval first(start, width, base_);
    const std::uint64_t units = first.run(meter_);
    ready_ = std::move(first).finish();
    recalibrate(units, width);
    pending_ = std::make_unique<PendingInterval>(ready_.end(), width, base_);
    n_ = start;
}

void IncrementalSieve::recalibrate(std::uint64_t units, std::uint64_t width) {
    if (budget_override_ > 0) {
        budget_ = budget_override_;
    } else {
        // Twice the observed per-integer rate, plus one.
        budget_ = (2 * units + width - 1) / width + 1;
    }
    gap_budget_ = budget_;
}

std::uint64_t IncrementalSieve::invest(std::uint64_t units) {
    if (pending_->done() || units == 0) return 0;
    return pending_->step(units, meter_).used;
}

void IncrementalSieve::swap_intervals() {
    if (!pending_->done())
        throw InvariantViolation("incremental sieve: pending interval [" + std::to_string(pending_->lo()) + ", " +
                                 std::to_string(pending_->end()) + ") at phase " + to_string(pending_->phase()) +
                                 " when the ready interval ran out (budget " + std::to_string(budget_) + ")");
    const std::uint64_t units = pending_->spent();
    const std::uint64_t width = pending_->delta();
    ready_ = std::move(*pending_).finish();
    recalibrate(units, width);
    ++swaps_;

    const std::uint64_t next_width = isqrt(n_) + 2;
    if (PendingInterval::kMaxEnd - ready_.end() < next_width) {
        pending_.reset();
        throw std::out_of_range("incremental sieve: range exhausted near 2^31");
    }
    pending_ = std::make_unique<PendingInterval>(ready_.end(), next_width, base_);
}

bool IncrementalSieve::next() {
    if (!pending_) throw std::out_of_range("incremental sieve: range exhausted near 2^31");
    const bool prime = ready_.is_prime(n_);
    if (prime) ++ready_.cursor;
    ++n_;
    last_call_work_ = invest(budget_);
    last_call_swapped_ = false;
    if (n_ == ready_.end()) {
        swap_intervals();
        last_call_swapped_ = true;
    }
    if (meter_) meter_->record_call(last_call_work_);
    return prime;
}

std::uint64_t IncrementalSieve::nextprime() {
    if (!pending_) throw std::out_of_range("incremental sieve: range exhausted near 2^31");
    last_call_work_ = 0;
    last_call_swapped_ = false;
    for (;;) {
        if (ready_.cursor < ready_.primes.size()) {
            const std::uint64_t p = ready_.primes[ready_.cursor++];
            const std::uint64_t consumed = p - n_ + 1;
            n_ = p + 1;
            last_call_work_ += invest(consumed * gap_budget_);
            if (n_ == ready_.end()) {
                swap_intervals();
                last_call_swapped_ = true;
            }
            if (meter_) meter_->record_call(last_call_work_);
            return p;
        }
        last_call_work_ += invest((ready_.end() - n_) * gap_budget_);
        n_ = ready_.end();
        swap_intervals();
        last_call_swapped_ = true;
    }
}

std::size_t IncrementalSieve::live_words() const noexcept {
    std::size_t words = ready_.live_words() + base_->live_words() + 12;
    if (pending_) words += pending_->live_words();
    return words;
}

} // namespace rsieve
