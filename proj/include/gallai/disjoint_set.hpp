#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace gallai {

/// Union-find with union by size and path halving.
class DisjointSet {
public:
    explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1), sets_(n)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) noexcept
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Returns false if a and b were already joined.
    bool unite(std::size_t a, std::size_t b) noexcept
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        if (size_[a] < size_[b]) {
            std::swap(a, b);
        }
        parent_[b] = a;
        size_[a] += size_[b];
        --sets_;
        return true;
    }

    std::size_t set_count() const noexcept { return sets_; }
    std::size_t size_of(std::size_t x) noexcept { return size_[find(x)]; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::size_t sets_;
};

} // namespace gallai
