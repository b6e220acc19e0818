#ifndef PLATEAU_RNG_HPP
#define PLATEAU_RNG_HPP

#include <cstdint>
#include <cmath>
#include <stdexcept>

namespace plateau {

/// Purpose tags that key independent random streams within one experiment.
/// Streams are identified by (master_seed, replicate_index, purpose); the
/// same triple always yields the same sequence, which is what makes
/// replicated runs reproducible regardless of scheduling.
enum class StreamPurpose : std::uint64_t {
    Run = 1,        // a full algorithm run
    DriftSample = 2,
    Init = 3,
    MonteCarlo = 4,
    Aux = 5,
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace detail

/// xoshiro256++ stream seeded from (master_seed, stream_index, purpose) via
/// splitmix64. Cheap to construct, so every replicate gets a private stream.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index,
              StreamPurpose purpose)
        : RngStream(mix_key(master_seed, stream_index,
                            static_cast<std::uint64_t>(purpose))) {}

    explicit RngStream(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : state_) w = detail::splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result =
            detail::rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return next_double() < p;
    }

    /// Uniform integer in [0, bound). Lemire's multiply-shift with rejection.
    std::uint64_t uniform_index(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("uniform_index: empty range");
        std::uint64_t x = next_u64();
        unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold) {
                x = next_u64();
                m = static_cast<unsigned __int128>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Binomial(n, p) by CDF inversion; falls back to explicit Bernoulli
    /// trials when the mean is too large for the inversion loop to be cheap.
    std::uint64_t binomial(std::uint64_t n, double p) {
        if (n == 0 || p <= 0.0) return 0;
        if (p >= 1.0) return n;
        const bool flipped = p > 0.5;
        const double q = flipped ? 1.0 - p : p;
        std::uint64_t draw;
        if (static_cast<double>(n) * q <= 64.0)
            draw = binomial_inversion(n, q);
        else {
            draw = 0;
            for (std::uint64_t i = 0; i < n; ++i) draw += bernoulli(q) ? 1 : 0;
        }
        return flipped ? n - draw : draw;
    }

private:
    static std::uint64_t mix_key(std::uint64_t a, std::uint64_t b,
                                 std::uint64_t c) {
        std::uint64_t s = a;
        std::uint64_t h = detail::splitmix64(s);
        s ^= b * 0x9e3779b97f4a7c15ULL;
        h ^= detail::splitmix64(s);
        s ^= c * 0xc2b2ae3d27d4eb4fULL;
        h ^= detail::splitmix64(s);
        return h;
    }

    std::uint64_t binomial_inversion(std::uint64_t n, double p) {
        const double q = 1.0 - p;
        const double r = p / q;
        double pmf = std::pow(q, static_cast<double>(n));
        double cdf = pmf;
        const double u = next_double();
        std::uint64_t k = 0;
        while (u > cdf && k < n) {
            ++k;
            pmf *= r * static_cast<double>(n - k + 1) / static_cast<double>(k);
            cdf += pmf;
        }
        return k;
    }

    std::uint64_t state_[4];
};

} // namespace plateau

#endif // PLATEAU_RNG_HPP
