#pragma once

#include "gallai/vertex_set.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace gallai {

/// Colors are 1-based; 0 marks an unassigned pair in builders and partial colorings.
using Color = std::uint8_t;

inline constexpr Color kNoColor = 0;
inline constexpr std::size_t kMaxColors = std::numeric_limits<Color>::max();
inline constexpr std::size_t kMaxOrder = std::size_t{1} << 16;

/// Index of the unordered pair {u, v}, u != v, in a lower-triangular layout.
constexpr std::size_t pair_index(Vertex u, Vertex v) noexcept
{
    const std::size_t hi = u > v ? u : v;
    const std::size_t lo = u > v ? v : u;
    return hi * (hi - 1) / 2 + lo;
}

constexpr std::size_t pair_count(std::size_t n) noexcept { return n * (n - (n > 0 ? 1 : 0)) / 2; }

/// A total k-edge-coloring of K_n. Immutable once built.
class ColoredCompleteGraph {
public:
    class Builder;

    std::size_t order() const noexcept { return n_; }
    std::size_t colors() const noexcept { return k_; }

    /// Throws DomainError when u == v or either vertex is out of range.
    Color color_of(Vertex u, Vertex v) const;

    /// Unchecked access for inner loops. Requires u != v, both < order().
    Color at(Vertex u, Vertex v) const noexcept { return edges_[pair_index(u, v)]; }

    /// Flat lower-triangular storage: entry pair_index(u, v) holds the color of {u, v}.
    const std::vector<Color>& edge_colors() const noexcept { return edges_; }

    friend bool operator==(const ColoredCompleteGraph&, const ColoredCompleteGraph&) = default;

private:
    ColoredCompleteGraph(std::size_t n, std::size_t k, std::vector<Color> edges)
        : n_(n), k_(k), edges_(std::move(edges))
    {
    }

    std::size_t n_ = 0;
    std::size_t k_ = 0;
    std::vector<Color> edges_;
};

/// Mutable staging area; build() checks totality and color range.
class ColoredCompleteGraph::Builder {
public:
    Builder(std::size_t n, std::size_t k, Color fill = kNoColor);

    std::size_t order() const noexcept { return n_; }
    std::size_t colors() const noexcept { return k_; }

    Builder& set(Vertex u, Vertex v, Color c);
    Color get(Vertex u, Vertex v) const;

    ColoredCompleteGraph build() &&;

private:
    std::size_t n_;
    std::size_t k_;
    std::vector<Color> edges_;
};

ColoredCompleteGraph new_uniform(std::size_t n, std::size_t k, Color c);

VertexSet neighbors_in_color(const ColoredCompleteGraph& g, Vertex v, Color c);

/// Set of colors actually present on at least one edge, ascending.
std::vector<Color> used_colors(const ColoredCompleteGraph& g);

/// Per-color adjacency bitsets for the whole graph. Built once and shared
/// by the detectors; memory is k * n^2 / 8 bytes.
class ColorAdjacency {
public:
    explicit ColorAdjacency(const ColoredCompleteGraph& g);

    std::size_t order() const noexcept { return n_; }
    std::size_t colors() const noexcept { return k_; }

    const VertexSet& neighbors(Vertex v, Color c) const noexcept { return layers_[(c - 1) * n_ + v]; }

    bool adjacent(Vertex u, Vertex v, Color c) const noexcept { return neighbors(u, c).contains(v); }

private:
    std::size_t n_;
    std::size_t k_;
    std::vector<VertexSet> layers_;
};

/// Partially colored K_n used as search state. Order is capped at 64 so a
/// color class row fits one machine word.
class PartialColoring {
public:
    static constexpr std::size_t kMaxOrder = 64;

    PartialColoring(std::size_t n, std::size_t k);

    std::size_t order() const noexcept { return n_; }
    std::size_t colors() const noexcept { return k_; }

    /// kNoColor when the pair is unassigned.
    Color color_of(Vertex u, Vertex v) const;

    void assign(Vertex u, Vertex v, Color c);
    void clear(Vertex u, Vertex v);

    /// Bitmask of vertices joined to v by an edge of color c.
    std::uint64_t row(Vertex v, Color c) const noexcept { return rows_[(c - 1) * n_ + v]; }

    std::size_t assigned() const noexcept { return assigned_; }
    bool complete() const noexcept { return assigned_ == pair_count(n_); }

    /// Requires complete().
    ColoredCompleteGraph to_graph() const;

private:
    std::size_t n_;
    std::size_t k_;
    std::size_t assigned_ = 0;
    std::vector<Color> edges_;
    std::vector<std::uint64_t> rows_;
};

} // namespace gallai
