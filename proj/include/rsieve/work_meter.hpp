#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rsieve {

/// Unit-cost operation counters shared by every sieve in the library.
///
/// Each counter is bumped at exactly one kind of site:
///   pushes          a prime placed on a rolling-sieve stack
///   pops            a prime removed from a rolling-sieve stack
///   lattice_visits  an Atkin form column set up, or one (x, y) point examined
///   crossings       an Eratosthenes multiple crossed off, an Atkin square-multiple
///                   cleared, a base prime examined for its first multiple, or one
///                   trial division while extending the Atkin base-prime list
///
/// A meter is attached to one sieve at a time and is never shared across threads.
struct WorkMeter {
    static constexpr std::size_t kRecentCalls = 64;

    std::uint64_t pushes = 0;
    std::uint64_t pops = 0;
    std::uint64_t lattice_visits = 0;
    std::uint64_t crossings = 0;

    std::uint64_t total() const noexcept { return pushes + pops + lattice_visits + crossings; }

    /// Appends the cost of one public call to the ring of recent call costs.
    void record_call(std::uint64_t cost) noexcept {
        recent_[calls_ % kRecentCalls] = cost;
        ++calls_;
    }

    std::uint64_t calls() const noexcept { return calls_; }

    /// Recent call costs, oldest first.
    std::vector<std::uint64_t> recent_calls() const {
        std::vector<std::uint64_t> out;
        const std::size_t n = calls_ < kRecentCalls ? static_cast<std::size_t>(calls_) : kRecentCalls;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(recent_[(calls_ - n + i) % kRecentCalls]);
        return out;
    }

private:
    std::array<std::uint64_t, kRecentCalls> recent_{};
    std::uint64_t calls_ = 0;
};

} // namespace rsieve
