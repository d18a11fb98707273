#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ispoly::detail {

/// Fixed-universe bitset used as the memo key of the branching evaluator.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}

    static VertexSet full(std::size_t universe)
    {
        VertexSet s(universe);
        for (std::size_t i = 0; i < universe; ++i)
            s.insert(i);
        return s;
    }

    void insert(std::size_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(std::size_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool contains(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

    bool empty() const
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    std::size_t count_and(const VertexSet& other) const
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    /// Smallest member; the set must be nonempty.
    std::size_t first() const
    {
        for (std::size_t i = 0;; ++i)
            if (words_[i] != 0)
                return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    VertexSet& operator&=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    std::size_t hash() const
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 33));
    }

private:
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace ispoly::detail
