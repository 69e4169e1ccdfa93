#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ordcomplete {

/// Fixed-universe set of element indices backed by 64-bit words.
///
/// Binary operations require both operands to share the same universe size
/// (asserted); identity between sets and their posets is checked one level
/// up, where sets are bound.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(std::size_t universe, bool all = false)
        : universe_(universe), words_((universe + 63) / 64, 0) {
        if (all) {
            for (std::size_t i = 0; i < universe_; ++i) set(i);
        }
    }

    std::size_t universe() const { return universe_; }

    bool test(std::size_t i) const {
        assert(i < universe_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i) {
        assert(i < universe_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::size_t i) {
        assert(i < universe_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool any() const {
        for (auto w : words_) {
            if (w != 0) return true;
        }
        return false;
    }

    bool none() const { return !any(); }

    /// True when every member of this set also belongs to `other`.
    bool is_subset_of(const Bitset& other) const {
        assert(universe_ == other.universe_);
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] & ~other.words_[k]) return false;
        }
        return true;
    }

    Bitset& operator&=(const Bitset& other) {
        assert(universe_ == other.universe_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
        return *this;
    }

    Bitset& operator|=(const Bitset& other) {
        assert(universe_ == other.universe_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool operator==(const Bitset&) const = default;

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    std::size_t hash() const {
        std::size_t h = universe_;
        for (auto w : words_) h = h * 1099511628211ull + static_cast<std::size_t>(w);
        return h;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace ordcomplete
