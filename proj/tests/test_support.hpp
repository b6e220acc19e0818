#ifndef PLATEAU_TEST_SUPPORT_HPP
#define PLATEAU_TEST_SUPPORT_HPP

#include "plateau/bitstring.hpp"
#include "plateau/population.hpp"
#include "plateau/rng.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace testsupport {

/// Pearson chi-square statistic against expected counts.
inline double chi_square_stat(const std::vector<std::uint64_t>& observed,
                              const std::vector<double>& expected) {
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double diff = static_cast<double>(observed[i]) - expected[i];
        stat += diff * diff / expected[i];
    }
    return stat;
}

/// Upper critical value of chi-square at significance 1e-3 via the
/// Wilson-Hilferty cube approximation; plenty for coarse uniformity checks.
inline double chi_square_critical_999(std::uint32_t dof) {
    const double z = 3.0902; // 99.9% normal quantile
    const double d = static_cast<double>(dof);
    const double t = 1.0 - 2.0 / (9.0 * d) + z * std::sqrt(2.0 / (9.0 * d));
    return d * t * t * t;
}

/// Independent naive oracle for standard bit mutation: one coin per bit.
inline plateau::BitString per_bit_mutate(const plateau::BitString& x, double chi,
                                         plateau::RngStream& rng) {
    plateau::BitString y = x;
    const double p = chi / static_cast<double>(x.size());
    for (std::uint32_t i = 0; i < x.size(); ++i)
        if (rng.bernoulli(p)) y.flip(i);
    return y;
}

inline plateau::Population random_plateau_population(std::uint32_t n, std::uint32_t k,
                                                     std::uint64_t mu,
                                                     std::uint64_t seed) {
    plateau::RngStream rng(seed, 0, plateau::StreamPurpose::Init);
    std::vector<plateau::BitString> members;
    members.reserve(mu);
    for (std::uint64_t i = 0; i < mu; ++i)
        members.push_back(plateau::random_plateau_member(n, k, rng));
    return plateau::Population(std::move(members));
}

/// Plateau pair at Hamming distance 2d (k - d shared zeros).
inline std::pair<plateau::BitString, plateau::BitString> plateau_pair(
    std::uint32_t n, std::uint32_t k, std::uint32_t d) {
    plateau::BitString x1 = plateau::BitString::all_ones(n);
    for (std::uint32_t i = 0; i < k; ++i) x1.set(i, false);
    plateau::BitString x2 = plateau::BitString::all_ones(n);
    for (std::uint32_t i = 0; i + d < k; ++i) x2.set(i, false);
    for (std::uint32_t i = k; i < k + d; ++i) x2.set(i, false);
    return {x1, x2};
}

} // namespace testsupport

#endif // PLATEAU_TEST_SUPPORT_HPP
