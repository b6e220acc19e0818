#ifndef PLATEAU_POPULATION_HPP
#define PLATEAU_POPULATION_HPP

#include "plateau/bitstring.hpp"

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plateau {

/// Indexable multiset of equal-length genotypes with per-position zero
/// counts and the pairwise-Hamming diversity S maintained incrementally.
///
/// S sums H(x_i, x_j) over all ordered pairs, including i = j, which equals
/// sum_i 2 m_i (mu - m_i) over positions (m_i = zeros at position i). It is
/// kept as an exact integer; replace() updates it in O(differing bits).
class Population {
public:
    explicit Population(std::vector<BitString> members)
        : members_(std::move(members)) {
        if (members_.empty())
            throw std::invalid_argument("Population: must be nonempty");
        const std::uint32_t n = members_[0].size();
        const std::uint64_t mu = members_.size();
        // 2 m (mu - m) <= mu^2/2 per position; keep the total well inside int64.
        if (static_cast<double>(n) * static_cast<double>(mu) *
                static_cast<double>(mu) > 4.0e18)
            throw std::invalid_argument("Population: n*mu^2 too large for exact S");
        for (const auto& m : members_)
            if (m.size() != n)
                throw std::invalid_argument("Population: genotype lengths differ");
        zero_counts_.assign(n, 0);
        for (const auto& m : members_)
            for (std::uint32_t i = 0; i < n; ++i)
                if (!m.get(i)) ++zero_counts_[i];
        diversity_ = 0;
        for (std::uint32_t i = 0; i < n; ++i)
            diversity_ += pair_term(zero_counts_[i], mu);
    }

    std::size_t size() const { return members_.size(); }
    std::uint32_t genotype_length() const { return members_[0].size(); }

    const BitString& member(std::size_t i) const { return members_.at(i); }
    const std::vector<BitString>& members() const { return members_; }

    std::uint32_t zero_count(std::uint32_t position) const {
        return zero_counts_.at(position);
    }

    /// Cached S; equals pairwise_distance_sum() at all times.
    std::int64_t diversity() const { return diversity_; }

    /// Sum of Hamming distances from y to every member.
    std::int64_t diversity_contribution(const BitString& y) const {
        if (y.size() != genotype_length())
            throw std::invalid_argument("diversity_contribution: length mismatch");
        std::int64_t total = 0;
        for (const auto& m : members_) total += hamming(m, y);
        return total;
    }

    /// Swap the member at victim_index for incoming, updating zero counts
    /// and S from the differing bits only.
    void replace(const BitString& incoming, std::size_t victim_index) {
        if (victim_index >= members_.size())
            throw std::out_of_range("replace: victim index out of range");
        BitString& victim = members_[victim_index];
        if (incoming.size() != victim.size())
            throw std::invalid_argument("replace: length mismatch");
        const std::uint64_t mu = members_.size();
        const auto vw = victim.words();
        const auto iw = incoming.words();
        for (std::size_t w = 0; w < vw.size(); ++w) {
            std::uint64_t diff = vw[w] ^ iw[w];
            while (diff) {
                const int b = std::countr_zero(diff);
                diff &= diff - 1;
                const auto pos = static_cast<std::uint32_t>(w * 64 + b);
                std::uint32_t& m = zero_counts_[pos];
                diversity_ -= pair_term(m, mu);
                // victim had a zero here iff incoming has a one.
                if (incoming.get(pos)) --m; else ++m;
                diversity_ += pair_term(m, mu);
            }
        }
        victim = incoming;
    }

private:
    static std::int64_t pair_term(std::uint64_t m, std::uint64_t mu) {
        return static_cast<std::int64_t>(2 * m * (mu - m));
    }

    std::vector<BitString> members_;
    std::vector<std::uint32_t> zero_counts_;
    std::int64_t diversity_;
};

/// The defining double sum over ordered member pairs; O(mu^2 n) oracle for
/// the cached value.
inline std::int64_t pairwise_distance_sum(const Population& p) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            total += hamming(p.member(i), p.member(j));
    return total;
}

/// Largest S attainable by a plateau population: k*mu zeros spread as evenly
/// as possible over n positions, each carrying floor(k*mu/n) or ceil(k*mu/n).
inline std::int64_t max_plateau_diversity(std::uint32_t n, std::uint32_t k,
                                          std::uint64_t mu) {
    if (k > n) throw std::invalid_argument("max_plateau_diversity: k > n");
    if (mu == 0) throw std::invalid_argument("max_plateau_diversity: mu >= 1");
    const std::uint64_t zeros = static_cast<std::uint64_t>(k) * mu;
    const std::uint64_t lo = zeros / n;
    const std::uint64_t hi_count = zeros % n;
    auto term = [mu](std::uint64_t m) {
        return static_cast<std::int64_t>(2 * m * (mu - m));
    };
    return static_cast<std::int64_t>(hi_count) * term(lo + 1) +
           static_cast<std::int64_t>(n - hi_count) * term(lo);
}

/// Fixture format: one genotype per line over {0,1}, uniform length.
inline Population read_population(std::istream& in) {
    std::vector<BitString> members;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        members.push_back(BitString::from_text(line));
    }
    return Population(std::move(members));
}

inline Population load_population(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open population fixture: " + path);
    return read_population(in);
}

inline void write_population(std::ostream& out, const Population& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        out << p.member(i).to_text() << '\n';
}

} // namespace plateau

#endif // PLATEAU_POPULATION_HPP
