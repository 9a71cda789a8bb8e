#pragma once

#include <array>
#include <cstdint>

namespace rsieve {

/// The primes below 100. Incremental engines begin sieving at 100 and answer
/// smaller values from this table.
inline constexpr std::uint64_t kPreludeLimit = 100;
inline constexpr std::array<std::uint64_t, 25> kPreludePrimes = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

} // namespace rsieve
