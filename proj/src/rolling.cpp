#include "rsieve/rolling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rsieve/baseline.hpp"
#include "rsieve/errors.hpp"

namespace rsieve {

RollingSieve::RollingSieve(std::uint64_t start, WorkMeter* meter) : meter_(meter) {
    if (start < kMinStart || start > kMaxStart)
        throw std::invalid_argument("RollingSieve: start must lie in [100, 2^60], got " + std::to_string(start));
    r_ = isqrt(start) + 1;
    s_ = r_ * r_;
    delta_ = r_ + 2;
    stacks_.resize(delta_);
    const auto base = base_primes(r_ - 1);
    for (const auto p : base.primes)
        stacks_[(p - start % p) % p].push_back(p);
    nodes_ = base.primes.size();
    pos_ = 0;
    n_ = start;
}

template <bool Factor>
bool RollingSieve::step(FactoredInteger* out) {
    bool is_prime = true;
    std::uint64_t rest = n_;
    std::uint64_t moved = 0;
    auto& here = stacks_[pos_];
    while (!here.empty()) {
        const std::uint64_t p = here.back();
        here.pop_back();
        // p < delta, so the target slot is never `here`.
        stacks_[(pos_ + p) % delta_].push_back(p);
        ++moved;
        is_prime = false;
        if constexpr (Factor) {
            std::uint32_t e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            out->factors.emplace_back(p, e);
        }
    }
    if (meter_) {
        meter_->pops += moved;
        meter_->pushes += moved;
    }
    if (n_ == s_) {
        if (is_prime) {
            // Nothing divides r*r below r, so r is prime and starts sieving here.
            stacks_[(pos_ + r_) % delta_].push_back(r_);
            ++nodes_;
            if (meter_) ++meter_->pushes;
            is_prime = false;
            if constexpr (Factor) {
                rest /= r_;
                rest /= r_;
                out->factors.emplace_back(r_, 2);
            }
        }
        ++r_;
        s_ = r_ * r_;
    }
    if constexpr (Factor) {
        std::sort(out->factors.begin(), out->factors.end());
        if (rest > 1) out->factors.emplace_back(rest, 1);
        out->value = n_;
    }
    ++n_;
    if (++pos_ == delta_) {
        // Slot i now stands for n + i throughout, so appending at the tail
        // cannot misplace any pending multiple.
        pos_ = 0;
        delta_ += 2;
        stacks_.resize(delta_);
    }
    return is_prime;
}

bool RollingSieve::next() { return step<false>(nullptr); }

std::uint64_t RollingSieve::nextprime() {
    while (!next()) {
    }
    return n_ - 1;
}

FactoredInteger RollingSieve::next_factored() {
    FactoredInteger f;
    step<true>(&f);
    return f;
}

std::vector<std::uint64_t> RollingSieve::active_primes() const {
    std::vector<std::uint64_t> out;
    out.reserve(nodes_);
    for (const auto& st : stacks_) out.insert(out.end(), st.begin(), st.end());
    std::sort(out.begin(), out.end());
    return out;
}

void RollingSieve::audit() const {
    auto fail = [this](const std::string& what) {
        throw InvariantViolation("rolling sieve at n=" + std::to_string(n_) + ": " + what);
    };
    if (s_ != r_ * r_) fail("s != r^2");
    if ((r_ - 1) * (r_ - 1) > n_ || n_ > s_) fail("n outside [(r-1)^2, r^2]");
    if (r_ >= delta_) fail("r >= delta");
    if (delta_ * delta_ <= n_) fail("delta^2 <= n");
    if (stacks_.size() != delta_) fail("stack array length != delta");
    if (pos_ >= delta_) fail("cursor out of range");
    std::uint64_t seen = 0;
    for (std::uint64_t i = 0; i < delta_; ++i) {
        const std::uint64_t value = n_ + (i + delta_ - pos_) % delta_;
        for (const auto p : stacks_[i]) {
            if (p < 2 || p >= r_) fail("stored prime " + std::to_string(p) + " outside [2, r)");
            if (value % p != 0 || value - n_ >= p)
                fail("prime " + std::to_string(p) + " not at its least multiple >= n");
            ++seen;
        }
    }
    if (seen != nodes_) fail("node count mismatch");
    const auto primes = active_primes();
    if (std::adjacent_find(primes.begin(), primes.end()) != primes.end()) fail("duplicate sieving prime");
}


} // namespace rsieve
