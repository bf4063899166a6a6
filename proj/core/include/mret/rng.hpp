#pragma once

#include <cstdint>
#include <random>

namespace mret {

/// SplitMix64 step; used to derive well-separated stream seeds from one master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic sub-seed for stream (a, b) of a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t s = master;
    std::uint64_t h = splitmix64(s);
    s = h ^ (a * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    h = splitmix64(s);
    s = h ^ (b * 0x9e3779b97f4a7c15ULL + 0x123456789abcdef1ULL);
    return splitmix64(s);
}

/// Seedable random stream. Streams made with split() are reproducible
/// regardless of scheduling order (they depend on the seed, not engine state).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::mt19937_64& engine() { return engine_; }
    [[nodiscard]] std::uint64_t seed() const { return seed_; }

    [[nodiscard]] Rng split(std::uint64_t stream, std::uint64_t substream = 0) const {
        return Rng(derive_seed(seed_, stream, substream));
    }

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
    double gamma(double shape, double scale) {
        return std::gamma_distribution<double>(shape, scale)(engine_);
    }
    long long poisson(double rate) {
        return std::poisson_distribution<long long>(rate)(engine_);
    }
    /// Uniform integer in [0, n).
    std::size_t index(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace mret
