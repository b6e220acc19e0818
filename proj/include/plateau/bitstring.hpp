#ifndef PLATEAU_BITSTRING_HPP
#define PLATEAU_BITSTRING_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace plateau {

/// Fixed-length binary genotype, word-packed with a cached ones count.
///
/// Logical positions are 0-based in the API; the text form puts position 0
/// leftmost ("0011" has zeros at positions 0 and 1). Bits past the logical
/// length are kept zero so whole-word operations stay valid.
class BitString {
public:
    explicit BitString(std::uint32_t n) : words_((n + 63) / 64, 0), n_(n), ones_(0) {
        if (n == 0) throw std::invalid_argument("BitString: length must be positive");
    }

    static BitString all_ones(std::uint32_t n) {
        BitString x(n);
        for (auto& w : x.words_) w = ~0ULL;
        x.mask_tail();
        x.ones_ = n;
        return x;
    }

    static BitString from_text(std::string_view text) {
        if (text.empty()) throw std::invalid_argument("BitString: empty text form");
        BitString x(static_cast<std::uint32_t>(text.size()));
        for (std::uint32_t i = 0; i < text.size(); ++i) {
            if (text[i] == '1') x.set(i, true);
            else if (text[i] != '0')
                throw std::invalid_argument("BitString: text form must be over {0,1}");
        }
        return x;
    }

    std::string to_text() const {
        std::string s(n_, '0');
        for (std::uint32_t i = 0; i < n_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    std::uint32_t size() const { return n_; }
    std::uint32_t ones() const { return ones_; }
    std::uint32_t zeros() const { return n_ - ones_; }

    bool get(std::uint32_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1ULL;
    }

    void set(std::uint32_t i, bool v) {
        const std::uint64_t mask = 1ULL << (i & 63);
        std::uint64_t& w = words_[i >> 6];
        if (v && !(w & mask)) { w |= mask; ++ones_; }
        else if (!v && (w & mask)) { w &= ~mask; --ones_; }
    }

    void flip(std::uint32_t i) {
        const std::uint64_t mask = 1ULL << (i & 63);
        std::uint64_t& w = words_[i >> 6];
        w ^= mask;
        ones_ += (w & mask) ? 1 : -1;
    }

    std::span<const std::uint64_t> words() const { return words_; }

    /// Overwrite the packed words (tail bits are cleared, ones recounted).
    void assign_words(std::span<const std::uint64_t> src) {
        if (src.size() != words_.size())
            throw std::invalid_argument("BitString: word count mismatch");
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = src[i];
        mask_tail();
        recount();
    }

    void fill_positions(std::vector<std::uint32_t>& ones_out,
                        std::vector<std::uint32_t>& zeros_out) const {
        ones_out.clear();
        zeros_out.clear();
        for (std::uint32_t i = 0; i < n_; ++i)
            (get(i) ? ones_out : zeros_out).push_back(i);
    }

    bool operator==(const BitString& other) const {
        return n_ == other.n_ && words_ == other.words_;
    }

    friend std::uint32_t hamming(const BitString& a, const BitString& b) {
        if (a.n_ != b.n_)
            throw std::invalid_argument("hamming: length mismatch");
        std::uint32_t d = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            d += std::popcount(a.words_[i] ^ b.words_[i]);
        return d;
    }

private:
    void mask_tail() {
        const std::uint32_t rem = n_ & 63;
        if (rem) words_.back() &= (1ULL << rem) - 1;
    }

    void recount() {
        std::uint32_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        ones_ = c;
    }

    friend class Population;

    std::vector<std::uint64_t> words_;
    std::uint32_t n_;
    std::uint32_t ones_;
};

} // namespace plateau

#endif // PLATEAU_BITSTRING_HPP
