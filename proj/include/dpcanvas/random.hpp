#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace dpcanvas {

// SplitMix64. Chosen over <random> engines + distributions because the
// distributions are implementation-defined; every draw the library makes goes
// through next() and below() so streams are reproducible across platforms and
// languages.
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// below(n) = next() % n, chance(p/q) = below(q) < p.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    /// Fisher-Yates, drawing from the back.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace dpcanvas
