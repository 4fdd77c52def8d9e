#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gccl {

// Fixed-width bit vector backed by 64-bit words. Bit i of word w encodes
// position 64*w + i; unused high bits of the last word are kept zero.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(std::size_t bit_count, bool value = false)
        : bits_(bit_count), words_(word_count(bit_count), value ? ~std::uint64_t{0} : 0) {
        mask_tail();
    }

    // Builds from a '0'/'1' string, character 0 = position 0.
    static Bitset from_string(std::string_view s) {
        Bitset b(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                b.set(i);
            else
                assert(s[i] == '0');
        }
        return b;
    }

    std::size_t size() const { return bits_; }
    bool empty_universe() const { return bits_ == 0; }

    bool test(std::size_t i) const {
        assert(i < bits_);
        return (words_[i >> 6] >> (i & 63)) & 1U;
    }

    void set(std::size_t i) {
        assert(i < bits_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) {
        assert(i < bits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        mask_tail();
    }

    void reset_all() {
        for (auto& w : words_) w = 0;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    bool all() const { return count() == bits_; }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(bits_ == o.bits_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(bits_ == o.bits_);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool is_subset_of(const Bitset& o) const {
        assert(bits_ == o.bits_);
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        assert(bits_ == o.bits_);
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.bits_ == b.bits_ && a.words_ == b.words_;
    }
    friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

    // Order of the '0'/'1' string rendering: first differing position decides,
    // absent bit sorts first.
    bool lex_less(const Bitset& o) const {
        assert(bits_ == o.bits_);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            const std::uint64_t diff = words_[w] ^ o.words_[w];
            if (diff) {
                const int p = std::countr_zero(diff);
                return ((words_[w] >> p) & 1U) == 0;
            }
        }
        return false;
    }

    // Equality of positions [0, upto).
    bool prefix_equal(const Bitset& o, std::size_t upto) const {
        assert(bits_ == o.bits_ && upto <= bits_);
        const std::size_t full = upto >> 6;
        for (std::size_t w = 0; w < full; ++w)
            if (words_[w] != o.words_[w]) return false;
        const std::size_t rem = upto & 63;
        if (rem) {
            const std::uint64_t mask = (std::uint64_t{1} << rem) - 1;
            if ((words_[full] ^ o.words_[full]) & mask) return false;
        }
        return true;
    }

    // Grows or shrinks the universe; kept positions preserved, new ones zero.
    void resize(std::size_t bit_count) {
        bits_ = bit_count;
        words_.resize(word_count(bit_count), 0);
        mask_tail();
    }

    Bitset resized(std::size_t bit_count) const {
        Bitset b = *this;
        b.resize(bit_count);
        return b;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                const int p = std::countr_zero(word);
                fn(static_cast<std::size_t>((w << 6) + static_cast<std::size_t>(p)));
                word &= word - 1;
            }
        }
    }

    std::vector<std::size_t> positions() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    std::string to_string() const {
        std::string s(bits_, '0');
        for_each([&](std::size_t i) { s[i] = '1'; });
        return s;
    }

    std::size_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ bits_;
        for (auto w : words_) {
            h ^= w;
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    static std::size_t word_count(std::size_t bits) { return (bits + 63) >> 6; }

    void mask_tail() {
        const std::size_t rem = bits_ & 63;
        if (rem && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace gccl
