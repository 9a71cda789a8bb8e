#include "rsieve/engines.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rsieve/incremental.hpp"
#include "rsieve/prelude.hpp"
#include "rsieve/rolling.hpp"

namespace rsieve {

std::optional<Engine> parse_engine(std::string_view name) noexcept {
    if (name == "simple") return Engine::Simple;
    if (name == "segmented") return Engine::Segmented;
    if (name == "rolling") return Engine::Rolling;
    if (name == "atkin") return Engine::Atkin;
    return std::nullopt;
}

std::string_view to_string(Engine engine) noexcept {
    switch (engine) {
    case Engine::Simple: return "simple";
    case Engine::Segmented: return "segmented";
    case Engine::Rolling: return "rolling";
    case Engine::Atkin: return "atkin";
    }
    return "?";
}

std::uint64_t engine_limit(Engine engine) noexcept {
    switch (engine) {
    case Engine::Simple: return std::uint64_t{1} << 36;
    case Engine::Segmented: return std::uint64_t{1} << 60;
    case Engine::Rolling: return RollingSieve::kMaxStart;
    case Engine::Atkin: return std::uint64_t{1} << 30;
    }
    return 0;
}

namespace {

void emit_prelude(std::uint64_t start, std::uint64_t end, const PrimeSink& emit) {
    for (const auto p : kPreludePrimes)
        if (p >= start && p <= end) emit(p);
}

} // namespace

void for_each_prime(std::uint64_t start, std::uint64_t end, Engine engine, const PrimeSink& emit,
                    const EngineOptions& options) {
    if (start < 2 || end < start)
        throw std::invalid_argument("need 2 <= start <= end, got start=" + std::to_string(start) +
                                    " end=" + std::to_string(end));
    if (end > engine_limit(engine))
        throw std::invalid_argument("end exceeds the " + std::string(to_string(engine)) + " engine limit of " +
                                    std::to_string(engine_limit(engine)));
    switch (engine) {
    case Engine::Simple: {
        const auto table = simple_sieve(end);
        for (std::uint64_t v = start; v <= end; ++v)
            if (table.is_prime(v)) emit(v);
        return;
    }
    case Engine::Segmented:
        segmented_range(start, end, options.segment, emit);
        return;
    case Engine::Rolling: {
        emit_prelude(start, end, emit);
        if (end < kPreludeLimit) return;
        RollingSieve sieve(std::max(start, kPreludeLimit));
        for (std::uint64_t p = sieve.nextprime(); p <= end; p = sieve.nextprime()) emit(p);
        return;
    }
    case Engine::Atkin: {
        emit_prelude(start, end, emit);
        if (end < kPreludeLimit) return;
        IncrementalSieve sieve(std::max(start, kPreludeLimit), nullptr, options.atkin_budget);
        for (std::uint64_t p = sieve.nextprime(); p <= end; p = sieve.nextprime()) emit(p);
        return;
    }
    }
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t start, std::uint64_t end, Engine engine,
                                           const EngineOptions& options) {
    std::vector<std::uint64_t> out;
    for_each_prime(start, end, engine, [&](std::uint64_t p) { out.push_back(p); }, options);
    return out;
}

std::uint64_t count_primes(std::uint64_t n, Engine engine, const EngineOptions& options) {
    std::uint64_t count = 0;
    for_each_prime(2, n, engine, [&](std::uint64_t) { ++count; }, options);
    return count;
}

std::vector<std::uint8_t> encode_bitmap(const Bitmap& bitmap) {
    const std::uint64_t count = bitmap.bits.size();
    std::vector<std::uint8_t> out = {'P', 'B', 'M', '1'};
    out.reserve(20 + (count + 7) / 8);
    for (const auto v : {bitmap.lo, count})
        for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    for (const auto w : bitmap.bits.words())
        for (int i = 0; i < 8 && out.size() < 20 + (count + 7) / 8; ++i)
            out.push_back(static_cast<std::uint8_t>(w >> (8 * i)));
    return out;
}

Bitmap decode_bitmap(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 20 || bytes[0] != 'P' || bytes[1] != 'B' || bytes[2] != 'M' || bytes[3] != '1')
        throw std::invalid_argument("bitmap: bad header");
    auto u64 = [&](std::size_t off) {
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[off + i]) << (8 * i);
        return v;
    };
    Bitmap bm{u64(4), {}};
    const std::uint64_t count = u64(12);
    if (count / 8 > bytes.size() || (bytes.size() - 20) != (count + 7) / 8) throw std::invalid_argument("bitmap: payload length mismatch");
    bm.bits = BitVector(static_cast<std::size_t>(count));
    for (std::uint64_t i = 0; i < count; ++i)
        if ((bytes[20 + i / 8] >> (i % 8)) & 1u) bm.bits.set(static_cast<std::size_t>(i));
    return bm;
}

} // namespace rsieve
