#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace denergy {

/// SplitMix64 (Steele, Lea & Flood). State advances by the golden-ratio
/// increment 0x9e3779b97f4a7c15 and each output is the state passed through
/// the two xor-shift-multiply finalisers below. Used instead of std::mt19937 +
/// std::uniform_int_distribution because the latter's output is
/// implementation-defined and generated graphs must be bit-identical across
/// standard libraries.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound), by rejection of the biased low range.
    std::uint64_t below(std::uint64_t bound) noexcept
    {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = (*this)();
            if (x >= threshold) {
                return x % bound;
            }
        }
    }

    /// Real in [0, 1) with 53 random bits.
    double uniform01() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& items) noexcept
    {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace denergy
