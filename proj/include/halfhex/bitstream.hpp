#pragma once

#include <cstdint>

namespace halfhex {

// Counter-based supply of fair bits.  Every bit is addressed by
// (seed, trajectory, step, row, col), so algorithms consume bits by
// position rather than by order of consumption: forward and reverse
// traces are reproducible, and two different simulators can be made to
// read the very same coins.
//
// The generator is a chained splitmix64 finalizer over the address
// words.  Stream name/version below are part of the file-format
// contract written into every sample header.

inline constexpr const char* bitstream_name = "splitmix64-chain";
inline constexpr int bitstream_version = 1;

inline constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

class BitStream {
public:
    explicit BitStream(std::uint64_t seed, std::uint64_t trajectory = 0)
        : base_(mix64(mix64(seed) + trajectory)) {}

    // Hoistable per-(step,row) context for hot loops.
    std::uint64_t row_base(std::uint64_t step, std::uint64_t row) const {
        return mix64(mix64(base_ + step) + row);
    }

    static bool bit_in_row(std::uint64_t row_base, std::uint64_t col) {
        return mix64(row_base + col) & 1u;
    }

    bool bit(std::uint64_t step, std::uint64_t row, std::uint64_t col) const {
        return bit_in_row(row_base(step, row), col);
    }

    std::uint64_t base() const { return base_; }

private:
    std::uint64_t base_;
};

}
