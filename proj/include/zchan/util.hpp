#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zchan {

// Binomial coefficients in exact 64-bit arithmetic. Arguments stay small
// (n <= 48 in practice); values are clamped nowhere, overflow would throw.
long long binom(int n, int k);

inline int popcount32(std::uint32_t x) { return std::popcount(x); }

// Deterministic, platform-independent PRNG (splitmix64). std::mt19937 would
// be portable too, but the distributions in <random> are not; we need
// bit-identical runs across compilers, so sampling is done by hand.
struct SplitMix64 {
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed + 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound). Rejection-free modulo is fine here: bias is
    // irrelevant for search heuristics, determinism is what matters.
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

    double unit() { return double(next() >> 11) * 0x1.0p-53; }
};

// Fixed-capacity bitset over dynamic word count; used by the search kernels.
struct Bitset {
    std::vector<std::uint64_t> blocks;

    Bitset() = default;
    explicit Bitset(std::size_t nbits) : blocks((nbits + 63) / 64, 0) {}

    void set(std::size_t i) { blocks[i >> 6] |= (1ULL << (i & 63)); }
    void reset(std::size_t i) { blocks[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(std::size_t i) const { return (blocks[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto b : blocks) c += std::popcount(b);
        return c;
    }

    void and_with(const Bitset& o) {
        for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] &= o.blocks[i];
    }

    void andnot_with(const Bitset& o) {
        for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] &= ~o.blocks[i];
    }

    // Number of set bits at positions >= from.
    int count_from(std::size_t from) const {
        std::size_t blk = from >> 6;
        if (blk >= blocks.size()) return 0;
        int c = std::popcount(blocks[blk] & ~((1ULL << (from & 63)) - 1));
        for (std::size_t i = blk + 1; i < blocks.size(); ++i) c += std::popcount(blocks[i]);
        return c;
    }

    // First set bit at position >= from, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t next_set(std::size_t from) const {
        std::size_t blk = from >> 6;
        if (blk >= blocks.size()) return npos;
        std::uint64_t cur = blocks[blk] & ~((1ULL << (from & 63)) - 1);
        while (true) {
            if (cur) return (blk << 6) + std::countr_zero(cur);
            if (++blk >= blocks.size()) return npos;
            cur = blocks[blk];
        }
    }
};

}  // namespace zchan
