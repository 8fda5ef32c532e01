#pragma once

#include <cstdint>
#include <random>

namespace sunflower {

/// Seeded generator used by every randomized routine: std::mt19937_64, whose
/// output sequence is fixed by the standard. Bounded draws use Lemire's
/// rejection method rather than std::uniform_int_distribution so results do
/// not depend on the standard library implementation.
class Rng {
    __extension__ using Wide = unsigned __int128;

public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        Wide m = static_cast<Wide>(engine_()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = -bound % bound;
            while (low < threshold) {
                m = static_cast<Wide>(engine_()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    bool coin() { return (engine_() >> 63) != 0; }

    template <class It>
    void shuffle(It first, It last) {
        const auto n = static_cast<std::uint64_t>(last - first);
        for (std::uint64_t i = n; i > 1; --i) {
            const auto j = below(i);
            std::swap(first[i - 1], first[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace sunflower
