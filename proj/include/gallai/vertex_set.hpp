#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gallai {

using Vertex = std::uint32_t;

/// Packed bitset over vertices 0..n-1. Word-level access is exposed so the
/// detectors can intersect neighborhoods without allocating.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0)
    {
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(Vertex v) const noexcept
    {
        return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
    }
    void insert(Vertex v) noexcept { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
    void erase(Vertex v) noexcept { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

    std::size_t count() const noexcept
    {
        std::size_t total = 0;
        for (Word w : words_) {
            total += static_cast<std::size_t>(std::popcount(w));
        }
        return total;
    }
    bool empty() const noexcept
    {
        for (Word w : words_) {
            if (w != 0) {
                return false;
            }
        }
        return true;
    }

    bool intersects(const VertexSet& other) const noexcept
    {
        const std::size_t n = std::min(words_.size(), other.words_.size());
        for (std::size_t i = 0; i < n; ++i) {
            if ((words_[i] & other.words_[i]) != 0) {
                return true;
            }
        }
        return false;
    }

    /// Smallest member that is >= from, or universe() if none.
    Vertex next(Vertex from) const noexcept
    {
        if (from >= universe_) {
            return static_cast<Vertex>(universe_);
        }
        std::size_t wi = from / kWordBits;
        Word w = words_[wi] & (~Word{0} << (from % kWordBits));
        while (true) {
            if (w != 0) {
                return static_cast<Vertex>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
            }
            if (++wi == words_.size()) {
                return static_cast<Vertex>(universe_);
            }
            w = words_[wi];
        }
    }
    Vertex first() const noexcept { return next(0); }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            Word w = words_[wi];
            while (w != 0) {
                f(static_cast<Vertex>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const
    {
        std::vector<Vertex> out;
        out.reserve(count());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> words() noexcept { return words_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

} // namespace gallai
