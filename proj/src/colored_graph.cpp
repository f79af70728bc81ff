#include "gallai/colored_graph.hpp"

#include "gallai/error.hpp"

#include <string>

namespace gallai {

namespace {

void check_pair(std::size_t n, Vertex u, Vertex v)
{
    if (u == v) {
        throw DomainError("loop pair {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    if (u >= n || v >= n) {
        throw DomainError("vertex out of range for order " + std::to_string(n));
    }
}

void check_color(std::size_t k, Color c)
{
    if (c < 1 || c > k) {
        throw DomainError("color " + std::to_string(c) + " outside 1.." + std::to_string(k));
    }
}

void check_shape(std::size_t n, std::size_t k)
{
    if (n == 0) {
        throw DomainError("order must be at least 1");
    }
    if (n > kMaxOrder) {
        throw DomainError("order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
    }
    if (k == 0 || k > kMaxColors) {
        throw DomainError("color count must be in 1.." + std::to_string(kMaxColors));
    }
}

} // namespace

Color ColoredCompleteGraph::color_of(Vertex u, Vertex v) const
{
    check_pair(n_, u, v);
    return edges_[pair_index(u, v)];
}

ColoredCompleteGraph::Builder::Builder(std::size_t n, std::size_t k, Color fill)
    : n_(n), k_(k)
{
    check_shape(n, k);
    if (fill != kNoColor) {
        check_color(k, fill);
    }
    edges_.assign(pair_count(n), fill);
}

ColoredCompleteGraph::Builder& ColoredCompleteGraph::Builder::set(Vertex u, Vertex v, Color c)
{
    check_pair(n_, u, v);
    check_color(k_, c);
    edges_[pair_index(u, v)] = c;
    return *this;
}

Color ColoredCompleteGraph::Builder::get(Vertex u, Vertex v) const
{
    check_pair(n_, u, v);
    return edges_[pair_index(u, v)];
}

ColoredCompleteGraph ColoredCompleteGraph::Builder::build() &&
{
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i] == kNoColor) {
            throw DomainError("coloring is not total: pair #" + std::to_string(i) + " unassigned");
        }
    }
    return ColoredCompleteGraph(n_, k_, std::move(edges_));
}

ColoredCompleteGraph new_uniform(std::size_t n, std::size_t k, Color c)
{
    check_shape(n, k);
    check_color(k, c);
    return ColoredCompleteGraph::Builder(n, k, c).build();
}

VertexSet neighbors_in_color(const ColoredCompleteGraph& g, Vertex v, Color c)
{
    if (v >= g.order()) {
        throw DomainError("vertex out of range");
    }
    check_color(g.colors(), c);
    VertexSet out(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        if (u != v && g.at(u, v) == c) {
            out.insert(u);
        }
    }
    return out;
}

std::vector<Color> used_colors(const ColoredCompleteGraph& g)
{
    std::vector<bool> seen(g.colors() + 1, false);
    for (Color c : g.edge_colors()) {
        seen[c] = true;
    }
    std::vector<Color> out;
    for (std::size_t c = 1; c <= g.colors(); ++c) {
        if (seen[c]) {
            out.push_back(static_cast<Color>(c));
        }
    }
    return out;
}

ColorAdjacency::ColorAdjacency(const ColoredCompleteGraph& g)
    : n_(g.order()), k_(g.colors()), layers_(g.colors() * g.order(), VertexSet(g.order()))
{
    for (Vertex v = 1; v < n_; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            const Color c = g.at(u, v);
            layers_[(c - 1) * n_ + u].insert(v);
            layers_[(c - 1) * n_ + v].insert(u);
        }
    }
}

PartialColoring::PartialColoring(std::size_t n, std::size_t k)
    : n_(n), k_(k)
{
    check_shape(n, k);
    if (n > kMaxOrder) {
        throw DomainError("partial colorings support order at most 64");
    }
    edges_.assign(pair_count(n), kNoColor);
    rows_.assign(k * n, 0);
}

Color PartialColoring::color_of(Vertex u, Vertex v) const
{
    check_pair(n_, u, v);
    return edges_[pair_index(u, v)];
}

void PartialColoring::assign(Vertex u, Vertex v, Color c)
{
    check_pair(n_, u, v);
    check_color(k_, c);
    Color& slot = edges_[pair_index(u, v)];
    if (slot != kNoColor) {
        clear(u, v);
    }
    slot = c;
    rows_[(c - 1) * n_ + u] |= std::uint64_t{1} << v;
    rows_[(c - 1) * n_ + v] |= std::uint64_t{1} << u;
    ++assigned_;
}

void PartialColoring::clear(Vertex u, Vertex v)
{
    check_pair(n_, u, v);
    Color& slot = edges_[pair_index(u, v)];
    if (slot == kNoColor) {
        return;
    }
    rows_[(slot - 1) * n_ + u] &= ~(std::uint64_t{1} << v);
    rows_[(slot - 1) * n_ + v] &= ~(std::uint64_t{1} << u);
    slot = kNoColor;
    --assigned_;
}

ColoredCompleteGraph PartialColoring::to_graph() const
{
    ColoredCompleteGraph::Builder b(n_, k_);
    for (Vertex v = 1; v < n_; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            const Color c = edges_[pair_index(u, v)];
            if (c == kNoColor) {
                throw DomainError("partial coloring is incomplete");
            }
            b.set(u, v, c);
        }
    }
    return std::move(b).build();
}

} // namespace gallai
