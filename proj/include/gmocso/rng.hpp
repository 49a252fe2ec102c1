#ifndef GMOCSO_RNG_HPP
#define GMOCSO_RNG_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace gmocso {

/// Seeded random source used for every stochastic choice in a run.
///
/// All mappings from raw 64-bit draws to doubles/indices are done here
/// rather than through std:: distributions, so two builds of the library
/// produce identical draw sequences for the same seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

    /// Uniform index in [0, n). Rejection sampling keeps it unbiased.
    std::size_t uniform_index(std::size_t n) {
        const std::uint64_t span = static_cast<std::uint64_t>(n);
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() -
            std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return static_cast<std::size_t>(x % span);
    }

    /// k distinct indices drawn uniformly from [0, n), k <= n.
    /// Partial Fisher-Yates; result order is the draw order.
    std::vector<std::size_t> distinct_indices(std::size_t k, std::size_t n) {
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = i;
        std::vector<std::size_t> out;
        out.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + uniform_index(n - i);
            std::swap(pool[i], pool[j]);
            out.push_back(pool[i]);
        }
        return out;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace gmocso

#endif  // GMOCSO_RNG_HPP
