#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace g24 {

// Runtime-sized bitset over 64-bit words. Intersection popcounts are the
// hot path of the adjacency checks and clique counts, so they get their
// own word-parallel loops.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size_bits() const { return nbits_; }

    bool test(int i) const { return words_[i >> 6] >> (i & 63) & 1u; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    int and_count(const Bitset& o) const
    {
        int c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += std::popcount(words_[k] & o.words_[k]);
        return c;
    }

    bool intersects(const Bitset& o) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k])
                return true;
        return false;
    }

    bool none() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    bool any() const { return !none(); }

    // this = a & b; all three must have equal bit length
    void assign_and(const Bitset& a, const Bitset& b)
    {
        nbits_ = a.nbits_;
        words_.resize(a.words_.size());
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] = a.words_[k] & b.words_[k];
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= o.words_[k];
        return *this;
    }

    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] |= o.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool operator==(const Bitset&) const = default;

    // drop all bits at positions <= i
    void clear_through(int i)
    {
        int w = i >> 6;
        for (int k = 0; k < w; ++k)
            words_[k] = 0;
        if (static_cast<std::size_t>(w) < words_.size()) {
            int r = (i & 63) + 1;
            words_[w] &= (r == 64) ? 0 : ~std::uint64_t{0} << r;
        }
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                f(static_cast<int>(k * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace g24
