#ifndef PLAB_RNG_HPP
#define PLAB_RNG_HPP

#include <cstdint>
#include <vector>

namespace plab {

// Deterministic splitmix64 stream. Identical seeds give identical streams on
// every platform, which the report-reproducibility guarantees rely on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound >= 1. Rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    bool coin() { return (next() & 1u) != 0; }

    // Child stream for indexed subtasks. Derived from the original seed, not
    // the current state, so trial i sees the same stream no matter how many
    // draws happened in between or on which worker it runs.
    Rng split(std::uint64_t index) const {
        std::uint64_t z = seed_ ^ (0x632be59bd9b4e019ULL + index * 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

    // Fisher-Yates permutation of [0, n).
    std::vector<std::uint32_t> permutation(std::uint32_t n) {
        std::vector<std::uint32_t> p(n);
        for (std::uint32_t i = 0; i < n; ++i) p[i] = i;
        for (std::uint32_t i = n; i > 1; --i) {
            const std::uint64_t j = below(i);
            std::swap(p[i - 1], p[j]);
        }
        return p;
    }

    // k distinct values from [0, n), returned sorted.
    std::vector<std::uint32_t> sample_sorted(std::uint32_t n, std::uint32_t k);

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

} // namespace plab

#endif
