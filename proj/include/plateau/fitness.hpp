#ifndef PLATEAU_FITNESS_HPP
#define PLATEAU_FITNESS_HPP

#include "plateau/bitstring.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace plateau {

enum class FitnessFamily { OneMax, Jump, JumpPrime, JumpOffset, Hurdle };

inline const char* family_name(FitnessFamily f) {
    switch (f) {
        case FitnessFamily::OneMax: return "onemax";
        case FitnessFamily::Jump: return "jump";
        case FitnessFamily::JumpPrime: return "jumpprime";
        case FitnessFamily::JumpOffset: return "jumpoffset";
        case FitnessFamily::Hurdle: return "hurdle";
    }
    return "?";
}

inline FitnessFamily family_from_name(const std::string& s) {
    if (s == "onemax") return FitnessFamily::OneMax;
    if (s == "jump") return FitnessFamily::Jump;
    if (s == "jumpprime") return FitnessFamily::JumpPrime;
    if (s == "jumpoffset") return FitnessFamily::JumpOffset;
    if (s == "hurdle") return FitnessFamily::Hurdle;
    throw std::invalid_argument("unknown fitness family: " + s);
}

/// Benchmark selector. k is the gap width (Jump families), delta the valley
/// width (JumpOffset), w the hurdle width (Hurdle).
struct FitnessSpec {
    FitnessFamily family = FitnessFamily::OneMax;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t delta = 0;
    std::uint32_t w = 0;

    void validate() const {
        if (n == 0) throw std::invalid_argument("FitnessSpec: n must be positive");
        switch (family) {
            case FitnessFamily::OneMax:
                break;
            case FitnessFamily::Jump:
            case FitnessFamily::JumpPrime:
                if (k < 1 || k > n)
                    throw std::invalid_argument("FitnessSpec: Jump needs 1 <= k <= n");
                break;
            case FitnessFamily::JumpOffset:
                if (k < 1 || k > n)
                    throw std::invalid_argument("FitnessSpec: JumpOffset needs 1 <= k <= n");
                if (delta < 1 || delta > k)
                    throw std::invalid_argument("FitnessSpec: JumpOffset needs 1 <= delta <= k");
                break;
            case FitnessFamily::Hurdle:
                if (w < 1 || w > n)
                    throw std::invalid_argument("FitnessSpec: Hurdle needs 1 <= w <= n");
                break;
        }
    }

    bool is_jump_family() const {
        return family == FitnessFamily::Jump || family == FitnessFamily::JumpPrime ||
               family == FitnessFamily::JumpOffset;
    }

    /// Number of ones of a plateau member (local-optimum level set).
    std::uint32_t plateau_ones() const { return n - k; }
};

/// Denominator of the exact rational fitness; values are stored scaled by it
/// so selection compares integers. 1 everywhere except Hurdle, where it is w.
inline std::int64_t fitness_denominator(const FitnessSpec& spec) {
    return spec.family == FitnessFamily::Hurdle ? static_cast<std::int64_t>(spec.w) : 1;
}

/// Scaled-integer fitness as a function of the ones count.
///
/// All families are functions of unitation, so this is the whole definition;
/// evaluate() just plugs in the cached ones count.
inline std::int64_t evaluate_unitation(const FitnessSpec& spec, std::uint32_t ones) {
    const auto n = static_cast<std::int64_t>(spec.n);
    const auto o = static_cast<std::int64_t>(ones);
    switch (spec.family) {
        case FitnessFamily::OneMax:
            return o;
        case FitnessFamily::Jump: {
            const auto k = static_cast<std::int64_t>(spec.k);
            if (o == n || o <= n - k) return o + k;
            return n - o;
        }
        case FitnessFamily::JumpPrime: {
            if (o == n) return 0;
            const auto k = static_cast<std::int64_t>(spec.k);
            if (o <= n - k) return o + k;
            return n - o;
        }
        case FitnessFamily::JumpOffset: {
            const auto k = static_cast<std::int64_t>(spec.k);
            const auto d = static_cast<std::int64_t>(spec.delta);
            if (o <= n - k || o >= n - k + d) return o;
            return -o;
        }
        case FitnessFamily::Hurdle: {
            // -(ceil(z/w)*w + rem(z,w)); dividing by w recovers the rational
            // value and the comparison order is the same either way.
            const auto z = n - o;
            const auto w = static_cast<std::int64_t>(spec.w);
            const auto ceil_term = (z + w - 1) / w;
            return -(ceil_term * w + z % w);
        }
    }
    throw std::logic_error("evaluate_unitation: bad family");
}

inline std::int64_t evaluate(const FitnessSpec& spec, const BitString& x) {
    if (x.size() != spec.n)
        throw std::invalid_argument("evaluate: genotype length does not match spec");
    return evaluate_unitation(spec, x.ones());
}

/// Fitness as a rational value (scaled integer over the denominator).
inline double fitness_value(const FitnessSpec& spec, std::int64_t scaled) {
    return static_cast<double>(scaled) / static_cast<double>(fitness_denominator(spec));
}

inline bool is_on_plateau(const FitnessSpec& spec, const BitString& x) {
    if (!spec.is_jump_family())
        throw std::invalid_argument("is_on_plateau: requires a Jump-family spec");
    if (x.size() != spec.n)
        throw std::invalid_argument("is_on_plateau: length mismatch");
    return x.ones() == spec.plateau_ones();
}

/// For Hurdle: the index i with zeros(x) = i*w, if x sits on a local optimum.
inline std::optional<std::uint32_t> hurdle_local_optimum_level(
    const FitnessSpec& spec, const BitString& x) {
    if (spec.family != FitnessFamily::Hurdle)
        throw std::invalid_argument("hurdle_local_optimum_level: requires a Hurdle spec");
    if (x.size() != spec.n)
        throw std::invalid_argument("hurdle_local_optimum_level: length mismatch");
    const std::uint32_t z = x.zeros();
    if (z % spec.w != 0) return std::nullopt;
    return z / spec.w;
}

/// Whether sampling x terminates a run. JumpPrime assigns the all-ones
/// string fitness 0, so runs on it never finish; that is the point of it.
inline bool is_terminal_optimum(const FitnessSpec& spec, std::uint32_t ones) {
    if (spec.family == FitnessFamily::JumpPrime) return false;
    return ones == spec.n;
}

} // namespace plateau

#endif // PLATEAU_FITNESS_HPP
