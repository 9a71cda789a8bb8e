#include <algorithm>
#include <array>
#include <cstring>
#include <istream>
#include <iterator>
#include <ostream>
#include <stdexcept>

#include "rsieve/errors.hpp"
#include "rsieve/rolling.hpp"

// "RSV1" record: magic, then n, pos, r, s, delta as u64 LE, then delta stack
// records of (u32 LE count, count x u64 LE primes).

namespace rsieve {
namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'R', 'S', 'V', '1'};

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    template <typename T>
    T get() {
        if (bytes_.size() - off_ < sizeof(T)) throw std::invalid_argument("snapshot: truncated record");
        T v = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(bytes_[off_ + i]) << (8 * i);
        off_ += sizeof(T);
        return v;
    }

    std::size_t remaining() const { return bytes_.size() - off_; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t off_ = 0;
};

} // namespace

std::vector<std::uint8_t> RollingSieve::save() const {
    std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
    out.reserve(4 + 40 + 4 * delta_ + 8 * nodes_);
    for (const auto v : {n_, pos_, r_, s_, delta_}) put_le(out, v);
    for (const auto& st : stacks_) {
        put_le(out, static_cast<std::uint32_t>(st.size()));
        for (const auto p : st) put_le(out, p);
    }
    return out;
}

void RollingSieve::save(std::ostream& out) const {
    const auto bytes = save();
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

RollingSieve RollingSieve::load(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kMagic.size() || !std::equal(kMagic.begin(), kMagic.end(), bytes.begin()))
        throw std::invalid_argument("snapshot: bad magic");
    Reader in(bytes.subspan(kMagic.size()));
    RollingSieve sv{Raw{}};
    sv.n_ = in.get<std::uint64_t>();
    sv.pos_ = in.get<std::uint64_t>();
    sv.r_ = in.get<std::uint64_t>();
    sv.s_ = in.get<std::uint64_t>();
    sv.delta_ = in.get<std::uint64_t>();
    if (sv.r_ > (std::uint64_t{1} << 32)) throw std::invalid_argument("snapshot: r out of range");
    // Every stack record needs at least its 4-byte count.
    if (sv.delta_ == 0 || sv.delta_ > in.remaining() / 4)
        throw std::invalid_argument("snapshot: stack count inconsistent with record length");
    sv.stacks_.resize(sv.delta_);
    for (auto& st : sv.stacks_) {
        const auto count = in.get<std::uint32_t>();
        if (count > in.remaining() / 8) throw std::invalid_argument("snapshot: truncated record");
        st.reserve(count);
        for (std::uint32_t k = 0; k < count; ++k) st.push_back(in.get<std::uint64_t>());
        sv.nodes_ += count;
    }
    if (in.remaining() != 0) throw std::invalid_argument("snapshot: trailing bytes");
    try {
        sv.audit();
    } catch (const InvariantViolation& e) {
        throw std::invalid_argument(std::string("snapshot: inconsistent state: ") + e.what());
    }
    return sv;
}

RollingSieve RollingSieve::load(std::istream& in) {
    std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return load(std::span<const std::uint8_t>(bytes));
}

} // namespace rsieve
