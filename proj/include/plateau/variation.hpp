#ifndef PLATEAU_VARIATION_HPP
#define PLATEAU_VARIATION_HPP

#include "plateau/bitstring.hpp"
#include "plateau/rng.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace plateau {

/// Standard bit mutation: every bit flips independently with probability
/// chi/n (chi bits in expectation).
struct StandardBit {
    double chi = 1.0;
};

/// Flip ell ones and ell zeros, both subsets uniform. Keeps plateau members
/// on the plateau; requires ell <= min(ones, zeros) of the input.
struct PairedFlip {
    std::uint32_t ell = 0;
};

/// Flip a uniform subset of exactly radius positions.
struct FixedRadius {
    std::uint32_t radius = 0;
};

using MutationSpec = std::variant<StandardBit, PairedFlip, FixedRadius>;

inline void validate_mutation(const MutationSpec& spec, std::uint32_t n) {
    if (const auto* sb = std::get_if<StandardBit>(&spec)) {
        if (!(sb->chi > 0.0) || sb->chi > static_cast<double>(n))
            throw std::invalid_argument("StandardBit: need 0 < chi <= n");
    } else if (const auto* fr = std::get_if<FixedRadius>(&spec)) {
        if (fr->radius > n)
            throw std::invalid_argument("FixedRadius: need 0 <= r <= n");
    }
    // PairedFlip is checked against the concrete input at call time.
}

namespace detail {

struct VariationScratch {
    std::vector<std::uint32_t> chosen;
    std::vector<std::uint32_t> ones_pos;
    std::vector<std::uint32_t> zeros_pos;
    std::vector<std::uint32_t> diff_pos;
};

inline VariationScratch& scratch() {
    thread_local VariationScratch s;
    return s;
}

/// r distinct values from [0, n) into out (order unspecified).
inline void sample_distinct(RngStream& rng, std::uint32_t n, std::uint32_t r,
                            std::vector<std::uint32_t>& out) {
    out.clear();
    if (r == 0) return;
    if (r > n) throw std::invalid_argument("sample_distinct: r > n");
    if (r <= 24 && 2ull * r <= n) {
        // rejection with a linear duplicate scan; cheap for small r
        while (out.size() < r) {
            const auto v = static_cast<std::uint32_t>(rng.uniform_index(n));
            bool dup = false;
            for (auto u : out)
                if (u == v) { dup = true; break; }
            if (!dup) out.push_back(v);
        }
        return;
    }
    out.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) out[i] = i;
    for (std::uint32_t i = 0; i < r; ++i) {
        const auto j = i + static_cast<std::uint32_t>(rng.uniform_index(n - i));
        std::swap(out[i], out[j]);
    }
    out.resize(r);
}

/// Move a uniform take-subset of vec to its front.
inline void partial_shuffle(std::vector<std::uint32_t>& vec, std::uint32_t take,
                            RngStream& rng) {
    const auto n = static_cast<std::uint32_t>(vec.size());
    for (std::uint32_t i = 0; i < take; ++i) {
        const auto j = i + static_cast<std::uint32_t>(rng.uniform_index(n - i));
        std::swap(vec[i], vec[j]);
    }
}

} // namespace detail

/// In-place mutation of x. StandardBit draws the flip count from
/// Binomial(n, chi/n) and then a uniform subset of that size, which has the
/// same distribution as per-bit coins.
inline void mutate_in_place(const MutationSpec& spec, BitString& x, RngStream& rng) {
    auto& s = detail::scratch();
    const std::uint32_t n = x.size();
    if (const auto* sb = std::get_if<StandardBit>(&spec)) {
        if (!(sb->chi > 0.0) || sb->chi > static_cast<double>(n))
            throw std::invalid_argument("StandardBit: need 0 < chi <= n");
        const auto r = static_cast<std::uint32_t>(
            rng.binomial(n, sb->chi / static_cast<double>(n)));
        detail::sample_distinct(rng, n, r, s.chosen);
        for (auto p : s.chosen) x.flip(p);
    } else if (const auto* pf = std::get_if<PairedFlip>(&spec)) {
        const std::uint32_t ell = pf->ell;
        if (ell == 0) return;
        if (ell > x.ones() || ell > x.zeros())
            throw std::invalid_argument("PairedFlip: ell > min(ones, zeros)");
        x.fill_positions(s.ones_pos, s.zeros_pos);
        detail::partial_shuffle(s.ones_pos, ell, rng);
        detail::partial_shuffle(s.zeros_pos, ell, rng);
        for (std::uint32_t i = 0; i < ell; ++i) {
            x.flip(s.ones_pos[i]);
            x.flip(s.zeros_pos[i]);
        }
    } else {
        const auto& fr = std::get<FixedRadius>(spec);
        if (fr.radius > n)
            throw std::invalid_argument("FixedRadius: need 0 <= r <= n");
        detail::sample_distinct(rng, n, fr.radius, s.chosen);
        for (auto p : s.chosen) x.flip(p);
    }
}

inline BitString mutate(const MutationSpec& spec, const BitString& x, RngStream& rng) {
    BitString y = x;
    mutate_in_place(spec, y, rng);
    return y;
}

/// Uniform crossover into out: each position takes x1's or x2's bit with
/// probability 1/2; agreeing positions are copied as-is.
inline void uniform_crossover_into(BitString& out, const BitString& x1,
                                   const BitString& x2, RngStream& rng) {
    if (x1.size() != x2.size())
        throw std::invalid_argument("uniform_crossover: length mismatch");
    if (out.size() != x1.size()) out = x1;
    const auto w1 = x1.words();
    const auto w2 = x2.words();
    // w1 ^ ((w1 ^ w2) & mask): mask bits only matter where the parents differ.
    static thread_local std::vector<std::uint64_t> buf;
    buf.resize(w1.size());
    for (std::size_t i = 0; i < w1.size(); ++i) {
        const std::uint64_t diff = w1[i] ^ w2[i];
        buf[i] = w1[i] ^ (diff & rng.next_u64());
    }
    out.assign_words(buf);
}

inline BitString uniform_crossover(const BitString& x1, const BitString& x2,
                                   RngStream& rng) {
    BitString y = x1;
    uniform_crossover_into(y, x1, x2, rng);
    return y;
}

/// Balanced uniform crossover: agreeing positions copied; among the d
/// differing positions a uniform floor(d/2)-subset gets a 1, the rest 0.
inline void balanced_uniform_crossover_into(BitString& out, const BitString& x1,
                                            const BitString& x2, RngStream& rng) {
    if (x1.size() != x2.size())
        throw std::invalid_argument("balanced_uniform_crossover: length mismatch");
    auto& s = detail::scratch();
    const auto w1 = x1.words();
    const auto w2 = x2.words();
    s.diff_pos.clear();
    static thread_local std::vector<std::uint64_t> buf;
    buf.resize(w1.size());
    for (std::size_t i = 0; i < w1.size(); ++i) {
        std::uint64_t diff = w1[i] ^ w2[i];
        buf[i] = w1[i] & ~diff; // agreeing bits; differing bits start at 0
        while (diff) {
            const int b = std::countr_zero(diff);
            diff &= diff - 1;
            s.diff_pos.push_back(static_cast<std::uint32_t>(i * 64 + b));
        }
    }
    const auto d = static_cast<std::uint32_t>(s.diff_pos.size());
    const std::uint32_t half = d / 2;
    detail::partial_shuffle(s.diff_pos, half, rng);
    if (out.size() != x1.size()) out = x1;
    out.assign_words(buf);
    for (std::uint32_t i = 0; i < half; ++i) out.set(s.diff_pos[i], true);
}

inline BitString balanced_uniform_crossover(const BitString& x1, const BitString& x2,
                                            RngStream& rng) {
    BitString y = x1;
    balanced_uniform_crossover_into(y, x1, x2, rng);
    return y;
}

/// Boring crossover: a copy of one parent, chosen by a fair coin.
inline BitString boring_crossover(const BitString& x1, const BitString& x2,
                                  RngStream& rng) {
    if (x1.size() != x2.size())
        throw std::invalid_argument("boring_crossover: length mismatch");
    return rng.bernoulli(0.5) ? x1 : x2;
}

/// Uniform random genotype.
inline BitString random_bitstring(std::uint32_t n, RngStream& rng) {
    BitString x(n);
    static thread_local std::vector<std::uint64_t> buf;
    buf.resize((n + 63) / 64);
    for (auto& w : buf) w = rng.next_u64();
    x.assign_words(buf);
    return x;
}

/// Uniform random member of the plateau (exactly n - k ones).
inline BitString random_plateau_member(std::uint32_t n, std::uint32_t k,
                                       RngStream& rng) {
    if (k > n) throw std::invalid_argument("random_plateau_member: k > n");
    BitString x = BitString::all_ones(n);
    auto& s = detail::scratch();
    detail::sample_distinct(rng, n, k, s.chosen);
    for (auto p : s.chosen) x.set(p, false);
    return x;
}

} // namespace plateau

#endif // PLATEAU_VARIATION_HPP
