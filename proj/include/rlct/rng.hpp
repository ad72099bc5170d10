#pragma once

#include <cstdint>
#include <string_view>

#include "rlct/fp.hpp"

namespace rlct {

// Splittable deterministic generator (splitmix64).  Every randomized check
// derives an independent stream from (suite seed, check id), so reports are
// byte-stable for a fixed seed.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Child stream keyed by a label; independent of draws made on *this.
    SplitRng child(std::string_view tag) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (char c : tag) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        return SplitRng(state_ ^ h ^ 0x632be59bd9b4e019ULL);
    }

    fp_t mod(fp_t p) { return static_cast<fp_t>(next() % p); }
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    FpVec vec(std::size_t len, fp_t p) {
        FpVec v(len);
        for (auto& x : v) x = mod(p);
        return v;
    }

private:
    std::uint64_t state_;
};

} // namespace rlct
