#include "rsieve/atkin.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "rsieve/baseline.hpp"

namespace rsieve {
namespace {

std::uint64_t ceil_sqrt(std::uint64_t v) noexcept {
    const auto t = isqrt(v);
    return t * t < v ? t + 1 : t;
}

} // namespace

BasePrimeCache::BasePrimeCache(std::uint64_t limit) : limit_(std::max<std::uint64_t>(limit, 3)) {
    primes_ = base_primes(limit_).primes;
}

std::uint64_t BasePrimeCache::extend(std::uint64_t target, std::uint64_t budget) {
    std::uint64_t used = 0;
    while (limit_ < target && used < budget) {
        const std::uint64_t candidate = limit_ + 1;
        // limit_ >= 3 keeps sqrt(candidate) <= limit_, so primes_ always holds the divisors needed.
        const std::uint64_t p = primes_[divisor_index_];
        ++used;
        if (candidate % p == 0) {
            limit_ = candidate;
            divisor_index_ = 0;
        } else if (divisor_index_ + 1 == primes_.size() || primes_[divisor_index_ + 1] > candidate / primes_[divisor_index_ + 1]) {
            primes_.push_back(candidate);
            limit_ = candidate;
            divisor_index_ = 0;
        } else {
            ++divisor_index_;
        }
    }
    return used;
}

const char* to_string(AtkinPhase phase) noexcept {
    switch (phase) {
    case AtkinPhase::Form1: return "FORM1";
    case AtkinPhase::Form2: return "FORM2";
    case AtkinPhase::Form3: return "FORM3";
    case AtkinPhase::Squarefree: return "SQUAREFREE";
    case AtkinPhase::SmallPrime: return "SMALLPRIME";
    case AtkinPhase::Done: return "DONE";
    }
    return "?";
}

PendingInterval::PendingInterval(std::uint64_t lo, std::uint64_t delta, std::shared_ptr<BasePrimeCache> base)
    : lo_(lo), hi_(lo + delta), base_(std::move(base)) {
    if (lo < kMinLo || delta < 1 || delta > kMaxEnd || lo > kMaxEnd - delta)
        throw std::invalid_argument("PendingInterval: need lo >= 7, delta >= 1, lo + delta <= 2^31; got lo=" +
                                    std::to_string(lo) + " delta=" + std::to_string(delta));
    parity_ = BitVector(static_cast<std::size_t>(delta));
    if (!base_) base_ = std::make_shared<BasePrimeCache>(isqrt(hi_ - 1));
}

bool PendingInterval::column_in_range() const noexcept {
    const std::uint64_t x2 = x_ * x_;
    switch (phase_) {
    case AtkinPhase::Form1: return 4 * x2 + 1 < hi_;
    case AtkinPhase::Form2: return 3 * x2 + 4 < hi_;
    case AtkinPhase::Form3: return 2 * x2 + 2 * x_ - 1 < hi_;
    default: return false;
    }
}

void PendingInterval::open_column() noexcept {
    const std::uint64_t x2 = x_ * x_;
    std::uint64_t y_lo = 1;
    std::uint64_t y_hi = 0;
    switch (phase_) {
    case AtkinPhase::Form1: {
        // y odd, lo <= 4x^2 + y^2 < hi
        const std::uint64_t base = 4 * x2;
        y_lo = lo_ > base ? ceil_sqrt(lo_ - base) : 1;
        if (y_lo % 2 == 0) ++y_lo;
        y_hi = isqrt(hi_ - 1 - base);
        break;
    }
    case AtkinPhase::Form2: {
        // x odd (columns step by 2), y even, lo <= 3x^2 + y^2 < hi
        const std::uint64_t base = 3 * x2;
        y_lo = lo_ > base ? std::max<std::uint64_t>(ceil_sqrt(lo_ - base), 2) : 2;
        if (y_lo % 2 == 1) ++y_lo;
        y_hi = isqrt(hi_ - 1 - base);
        break;
    }
    case AtkinPhase::Form3: {
        // 1 <= y < x with x + y odd, lo <= 3x^2 - y^2 < hi
        const std::uint64_t base = 3 * x2;
        if (base < lo_) break;
        y_lo = base >= hi_ ? isqrt(base - hi_) + 1 : 1;
        if ((x_ + y_lo) % 2 == 0) ++y_lo;
        y_hi = std::min(x_ - 1, isqrt(base - lo_));
        break;
    }
    default: break;
    }
    if (y_lo <= y_hi) {
        y_ = y_lo;
        y_last_ = y_hi;
        in_column_ = true;
    } else {
        x_ += phase_ == AtkinPhase::Form2 ? 2 : 1;
    }
}

void PendingInterval::visit(std::uint64_t count) noexcept {
    const std::uint64_t x2 = x_ * x_;
    for (std::uint64_t k = 0; k < count; ++k, y_ += 2) {
        const std::uint64_t y2 = y_ * y_;
        std::uint64_t m = 0;
        bool hit = false;
        switch (phase_) {
        case AtkinPhase::Form1:
            m = 4 * x2 + y2;
            hit = m % 12 == 1 || m % 12 == 5;
            break;
        case AtkinPhase::Form2:
            m = 3 * x2 + y2;
            hit = m % 12 == 7;
            break;
        default:
            m = 3 * x2 - y2;
            hit = m % 12 == 11;
            break;
        }
        if (hit) parity_.flip(static_cast<std::size_t>(m - lo_));
    }
    if (y_ > y_last_) {
        in_column_ = false;
        x_ += phase_ == AtkinPhase::Form2 ? 2 : 1;
    }
}

void PendingInterval::next_phase() noexcept {
    switch (phase_) {
    case AtkinPhase::Form1:
        phase_ = AtkinPhase::Form2;
        x_ = 1;
        break;
    case AtkinPhase::Form2:
        phase_ = AtkinPhase::Form3;
        // First x whose largest value 3x^2 - 1 can reach lo.
        x_ = std::max<std::uint64_t>(2, isqrt((lo_ + 1) / 3));
        break;
    case AtkinPhase::Form3:
        phase_ = AtkinPhase::Squarefree;
        prime_index_ = 0;
        in_prime_ = false;
        break;
    case AtkinPhase::Squarefree:
        phase_ = AtkinPhase::SmallPrime;
        break;
    case AtkinPhase::SmallPrime:
    case AtkinPhase::Done:
        phase_ = AtkinPhase::Done;
        break;
    }
    in_column_ = false;
}

PendingInterval::StepResult PendingInterval::step(std::uint64_t budget, WorkMeter* meter) {
    if (budget == 0) throw std::invalid_argument("PendingInterval::step: budget must be positive");
    std::uint64_t used = 0;
    std::uint64_t lattice = 0;
    std::uint64_t crossed = 0;
    const std::uint64_t root = isqrt(hi_ - 1);

    while (phase_ != AtkinPhase::Done) {
        if (phase_ == AtkinPhase::Form1 || phase_ == AtkinPhase::Form2 || phase_ == AtkinPhase::Form3) {
            if (!in_column_) {
                if (!column_in_range()) {
                    next_phase();
                    continue;
                }
                if (used == budget) break;
                open_column();
                ++used;
                ++lattice;
                continue;
            }
            if (used == budget) break;
            const std::uint64_t k = std::min(budget - used, (y_last_ - y_) / 2 + 1);
            visit(k);
            used += k;
            lattice += k;
        } else if (phase_ == AtkinPhase::Squarefree) {
            if (base_->limit() < root) {
                if (used == budget) break;
                const auto k = base_->extend(root, budget - used);
                used += k;
                crossed += k;
                continue;
            }
            const auto& primes = base_->primes();
            while (prime_index_ < primes.size() && primes[prime_index_] < 5) ++prime_index_;
            if (prime_index_ == primes.size() || primes[prime_index_] > root) {
                next_phase();
                continue;
            }
            const std::uint64_t p2 = primes[prime_index_] * primes[prime_index_];
            if (used == budget) break;
            if (!in_prime_) {
                ++used;
                ++crossed;
                multiple_ = (lo_ + p2 - 1) / p2 * p2;
                in_prime_ = multiple_ < hi_;
                if (!in_prime_) ++prime_index_;
                continue;
            }
            const std::uint64_t k = std::min(budget - used, (hi_ - 1 - multiple_) / p2 + 1);
            for (std::uint64_t i = 0; i < k; ++i, multiple_ += p2)
                parity_.reset(static_cast<std::size_t>(multiple_ - lo_));
            used += k;
            crossed += k;
            if (multiple_ >= hi_) {
                in_prime_ = false;
                ++prime_index_;
            }
        } else {
            // The residue filter never marks 2 or 3; they only matter if the interval reaches below 7.
            for (const std::uint64_t p : {2u, 3u})
                if (p >= lo_ && p < hi_) parity_.set(static_cast<std::size_t>(p - lo_));
            next_phase();
        }
    }

    spent_ += used;
    if (meter) {
        meter->lattice_visits += lattice;
        meter->crossings += crossed;
    }
    return {phase_ == AtkinPhase::Done, used};
}

std::uint64_t PendingInterval::run(WorkMeter* meter) {
    return step(std::numeric_limits<std::uint64_t>::max(), meter).used;
}

ReadyInterval PendingInterval::finish() const& {
    PendingInterval copy = *this;
    return std::move(copy).finish();
}

ReadyInterval PendingInterval::finish() && {
    if (phase_ != AtkinPhase::Done)
        throw std::logic_error(std::string("PendingInterval::finish: interval is at phase ") + to_string(phase_));
    ReadyInterval ready{lo_, hi_ - lo_, std::move(parity_), {}, 0};
    for (std::uint64_t v = lo_; v < hi_; ++v)
        if (ready.bits.test(static_cast<std::size_t>(v - lo_))) ready.primes.push_back(v);
    return ready;
}

ReadyInterval finish(PendingInterval&& pending) { return std::move(pending).finish(); }

ReadyInterval atkin_segment_primes(std::uint64_t lo, std::uint64_t delta, WorkMeter* meter) {
    PendingInterval pending(lo, delta);
    pending.run(meter);
    return std::move(pending).finish();
}

} // namespace rsieve
