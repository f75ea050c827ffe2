#pragma once

// Reproducible randomness.
//
// Engine: std::mt19937_64, whose output sequence is fixed by the standard.
// Seeds for independent streams are derived with SplitMix64 from a base seed
// and a list of integer tags (topology, realization, l0, ...), so a stream
// never depends on how many numbers another stream consumed.  Distributions
// are implemented here rather than with <random>'s distribution classes,
// whose algorithms vary between standard libraries.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <utility>

namespace mepnet
{

constexpr std::uint64_t
splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t
derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags)
{
    std::uint64_t h = splitmix64(base);
    for (std::uint64_t t : tags)
        h = splitmix64(h ^ splitmix64(t + 0x632be59bd9b4e019ULL));
    return h;
}

class Rng
{
public:
    explicit Rng(std::uint64_t seed)
        :engine_(seed)
    {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer on [0, bound), bound > 0; unbiased (Lemire).
    std::uint64_t below(std::uint64_t bound)
    {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = -bound % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Moves a uniform random k-subset of `items` to its front (partial Fisher-Yates).
    template <class T>
    void partial_shuffle(std::span<T> items, std::size_t k)
    {
        const std::size_t n = items.size();
        if (k > n)
            k = n;
        for (std::size_t i = 0; i < k; i++) {
            const std::size_t j = i + static_cast<std::size_t>(below(n - i));
            std::swap(items[i], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace mepnet
