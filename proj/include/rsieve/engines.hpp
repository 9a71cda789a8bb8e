#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rsieve/baseline.hpp"
#include "rsieve/bit_vector.hpp"

namespace rsieve {

enum class Engine { Simple, Segmented, Rolling, Atkin };

std::optional<Engine> parse_engine(std::string_view name) noexcept;
std::string_view to_string(Engine engine) noexcept;

struct EngineOptions {
    std::uint64_t segment = 0;        // segmented engine width; 0 selects floor(sqrt(end))
    std::uint64_t atkin_budget = 0;   // incremental wrapper budget override; 0 calibrates
};

/// Largest end value each engine accepts.
std::uint64_t engine_limit(Engine engine) noexcept;

/// Streams every prime in [start, end] in ascending order. The incremental
/// engines answer values below 100 from the prelude table.
void for_each_prime(std::uint64_t start, std::uint64_t end, Engine engine, const PrimeSink& emit,
                    const EngineOptions& options = {});

std::vector<std::uint64_t> primes_in_range(std::uint64_t start, std::uint64_t end, Engine engine,
                                           const EngineOptions& options = {});

/// pi(n).
std::uint64_t count_primes(std::uint64_t n, Engine engine, const EngineOptions& options = {});

/// "PBM1" bitmap: magic, u64 LE lo, u64 LE count, then ceil(count/8) bytes where
/// bit (i mod 8) of byte (i div 8) is the primality of lo + i.
struct Bitmap {
    std::uint64_t lo = 0;
    BitVector bits;

    friend bool operator==(const Bitmap&, const Bitmap&) = default;
};

std::vector<std::uint8_t> encode_bitmap(const Bitmap& bitmap);
Bitmap decode_bitmap(std::span<const std::uint8_t> bytes);

} // namespace rsieve
