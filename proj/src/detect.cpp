#include "gallai/detect.hpp"

#include "gallai/error.hpp"

#include <vector>

namespace gallai {

namespace {

using Word = VertexSet::Word;
constexpr std::size_t kBits = VertexSet::kWordBits;

std::vector<Color> colors_to_scan(std::size_t k, std::optional<Color> c)
{
    if (c) {
        if (*c < 1 || *c > k) {
            throw DomainError("color " + std::to_string(*c) + " outside 1.." + std::to_string(k));
        }
        return {*c};
    }
    std::vector<Color> out;
    for (std::size_t x = 1; x <= k; ++x) {
        out.push_back(static_cast<Color>(x));
    }
    return out;
}

// Smallest vertex >= from lying in both a and b, or universe if none.
Vertex first_common(const VertexSet& a, const VertexSet& b, Vertex from)
{
    const auto aw = a.words();
    const auto bw = b.words();
    const std::size_t universe = a.universe();
    if (from >= universe) {
        return static_cast<Vertex>(universe);
    }
    std::size_t wi = from / kBits;
    Word w = aw[wi] & bw[wi] & (~Word{0} << (from % kBits));
    while (true) {
        if (w != 0) {
            return static_cast<Vertex>(wi * kBits + static_cast<std::size_t>(std::countr_zero(w)));
        }
        if (++wi == aw.size()) {
            return static_cast<Vertex>(universe);
        }
        w = aw[wi] & bw[wi];
    }
}

// Depth-first extension of path.back() by `remaining` further vertices,
// trying neighbors in ascending order. Leaves the found path in place.
bool extend_path(const ColorAdjacency& adj, Color c, std::vector<Vertex>& path, std::vector<char>& used,
                 std::size_t remaining)
{
    if (remaining == 0) {
        return true;
    }
    const VertexSet& next = adj.neighbors(path.back(), c);
    for (Vertex x = next.first(); x < adj.order(); x = next.next(x + 1)) {
        if (used[x]) {
            continue;
        }
        used[x] = 1;
        path.push_back(x);
        if (extend_path(adj, c, path, used, remaining - 1)) {
            return true;
        }
        path.pop_back();
        used[x] = 0;
    }
    return false;
}

bool extend_clique(const ColorAdjacency& adj, Color c, const VertexSet& candidates, std::vector<Vertex>& clique,
                   std::size_t remaining)
{
    if (remaining == 0) {
        return true;
    }
    if (candidates.count() < remaining) {
        return false;
    }
    for (Vertex x = candidates.first(); x < adj.order(); x = candidates.next(x + 1)) {
        VertexSet next(adj.order());
        const auto nb = adj.neighbors(x, c).words();
        const auto cw = candidates.words();
        auto out = next.words();
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = nb[i] & cw[i];
        }
        // Only larger vertices, so each clique is built in ascending order.
        for (Vertex y = 0; y <= x; ++y) {
            next.erase(y);
        }
        clique.push_back(x);
        if (extend_clique(adj, c, next, clique, remaining - 1)) {
            return true;
        }
        clique.pop_back();
    }
    return false;
}

std::optional<WitnessEmbedding> mono_clique(const ColorAdjacency& adj, std::size_t s, std::optional<Color> color)
{
    const Pattern pattern = Pattern::clique(s);
    for (Color c : colors_to_scan(adj.colors(), color)) {
        if (s == 1) {
            return WitnessEmbedding{pattern, c, {0}};
        }
        VertexSet all(adj.order());
        for (Vertex v = 0; v < adj.order(); ++v) {
            all.insert(v);
        }
        std::vector<Vertex> clique;
        if (extend_clique(adj, c, all, clique, s)) {
            return WitnessEmbedding{pattern, c, clique};
        }
    }
    return std::nullopt;
}

std::optional<WitnessEmbedding> mono_star(const ColorAdjacency& adj, std::size_t t, std::optional<Color> color)
{
    const Pattern pattern = Pattern::star(t);
    for (Color c : colors_to_scan(adj.colors(), color)) {
        for (Vertex x = 0; x < adj.order(); ++x) {
            const VertexSet& nb = adj.neighbors(x, c);
            if (nb.count() + 1 < t) {
                continue;
            }
            std::vector<Vertex> vertices{x};
            for (Vertex y = nb.first(); vertices.size() < t; y = nb.next(y + 1)) {
                vertices.push_back(y);
            }
            return WitnessEmbedding{pattern, c, vertices};
        }
    }
    return std::nullopt;
}

std::optional<WitnessEmbedding> mono_path(const ColorAdjacency& adj, std::size_t t, std::optional<Color> color)
{
    const Pattern pattern = Pattern::path(t);
    for (Color c : colors_to_scan(adj.colors(), color)) {
        for (Vertex start = 0; start < adj.order(); ++start) {
            std::vector<Vertex> path{start};
            std::vector<char> used(adj.order(), 0);
            used[start] = 1;
            if (extend_path(adj, c, path, used, t - 1)) {
                return WitnessEmbedding{pattern, c, path};
            }
        }
    }
    return std::nullopt;
}

std::optional<WitnessEmbedding> triangle_as(const ColorAdjacency& adj, const Pattern& pattern,
                                            std::optional<Color> color)
{
    auto hit = mono_clique(adj, 3, color);
    if (hit) {
        hit->pattern = pattern;
    }
    return hit;
}

} // namespace

std::optional<WitnessEmbedding> find_rainbow_triangle(const ColoredCompleteGraph& g)
{
    if (g.order() < 3 || used_colors(g).size() < 3) {
        return std::nullopt;
    }
    return find_rainbow_triangle(g, ColorAdjacency(g));
}

std::optional<WitnessEmbedding> find_rainbow_triangle(const ColoredCompleteGraph& g, const ColorAdjacency& adj)
{
    const std::size_t n = g.order();
    const std::size_t k = g.colors();
    const std::size_t words = (n + kBits - 1) / kBits;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const Color a = g.at(u, v);
            const auto av = adj.neighbors(v, a).words();
            Vertex best = static_cast<Vertex>(n);
            // w > v with color(u,w) = b != a and color(v,w) not in {a, b}.
            for (std::size_t b = 1; b <= k; ++b) {
                if (b == a) {
                    continue;
                }
                const auto bu = adj.neighbors(u, static_cast<Color>(b)).words();
                const auto bv = adj.neighbors(v, static_cast<Color>(b)).words();
                const Vertex from = v + 1;
                for (std::size_t wi = from / kBits; wi < words; ++wi) {
                    Word w = bu[wi] & ~av[wi] & ~bv[wi];
                    if (wi == from / kBits) {
                        w &= ~Word{0} << (from % kBits);
                    }
                    if (w != 0) {
                        const auto x = static_cast<Vertex>(wi * kBits + static_cast<std::size_t>(std::countr_zero(w)));
                        if (x < best) {
                            best = x;
                        }
                        break;
                    }
                }
            }
            if (best < n) {
                return WitnessEmbedding{Pattern::clique(3), std::nullopt, {u, v, best}};
            }
        }
    }
    return std::nullopt;
}

std::optional<WitnessEmbedding> find_mono_star_plus(const ColoredCompleteGraph& g, std::size_t t,
                                                    std::optional<Color> c)
{
    if (t < 3) {
        throw DomainError("star-plus requires t >= 3");
    }
    return find_mono_star_plus(ColorAdjacency(g), t, c);
}

std::optional<WitnessEmbedding> find_mono_star_plus(const ColorAdjacency& adj, std::size_t t,
                                                    std::optional<Color> color)
{
    const Pattern pattern = Pattern::star_plus(t);
    if (t == 3) {
        return triangle_as(adj, pattern, color);
    }
    const std::size_t n = adj.order();
    for (Color c : colors_to_scan(adj.colors(), color)) {
        for (Vertex x = 0; x < n; ++x) {
            const VertexSet& nx = adj.neighbors(x, c);
            if (nx.count() + 1 < t) {
                continue;
            }
            for (Vertex y = nx.first(); y < n; y = nx.next(y + 1)) {
                const Vertex z = first_common(nx, adj.neighbors(y, c), y + 1);
                if (z >= n) {
                    continue;
                }
                std::vector<Vertex> vertices{x, y, z};
                for (Vertex w = nx.first(); vertices.size() < t; w = nx.next(w + 1)) {
                    if (w != y && w != z) {
                        vertices.push_back(w);
                    }
                }
                return WitnessEmbedding{pattern, c, vertices};
            }
        }
    }
    return std::nullopt;
}

std::optional<WitnessEmbedding> find_mono_path_plus(const ColoredCompleteGraph& g, std::size_t t,
                                                    std::optional<Color> c)
{
    if (t < 3) {
        throw DomainError("path-plus requires t >= 3");
    }
    return find_mono_path_plus(ColorAdjacency(g), t, c);
}

std::optional<WitnessEmbedding> find_mono_path_plus(const ColorAdjacency& adj, std::size_t t,
                                                    std::optional<Color> color)
{
    const Pattern pattern = Pattern::path_plus(t);
    if (t == 3) {
        return triangle_as(adj, pattern, color);
    }
    const std::size_t n = adj.order();
    std::vector<char> used(n, 0);
    for (Color c : colors_to_scan(adj.colors(), color)) {
        for (Vertex v1 = 0; v1 < n; ++v1) {
            const VertexSet& n1 = adj.neighbors(v1, c);
            if (n1.count() < 2) {
                continue;
            }
            for (Vertex v2 = n1.next(v1 + 1); v2 < n; v2 = n1.next(v2 + 1)) {
                const VertexSet& n2 = adj.neighbors(v2, c);
                for (Vertex v3 = first_common(n1, n2, 0); v3 < n; v3 = first_common(n1, n2, v3 + 1)) {
                    std::vector<Vertex> path{v1, v2, v3};
                    used[v1] = used[v2] = used[v3] = 1;
                    const bool found = extend_path(adj, c, path, used, t - 3);
                    for (Vertex x : path) {
                        used[x] = 0;
                    }
                    if (found) {
                        return WitnessEmbedding{pattern, c, path};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<WitnessEmbedding> find_mono_cycle(const ColoredCompleteGraph& g, std::size_t m, std::optional<Color> c)
{
    if (m < 3) {
        throw DomainError("cycle requires m >= 3");
    }
    return find_mono_cycle(ColorAdjacency(g), m, c);
}

std::optional<WitnessEmbedding> find_mono_cycle(const ColorAdjacency& adj, std::size_t m, std::optional<Color> color)
{
    const Pattern pattern = Pattern::cycle(m);
    const std::size_t n = adj.order();
    for (Color c : colors_to_scan(adj.colors(), color)) {
        for (Vertex s = 0; s + m <= n; ++s) {
            // The cycle's smallest vertex is s; everything else lies above it.
            std::vector<char> used(n, 0);
            for (Vertex x = 0; x <= s; ++x) {
                used[x] = 1;
            }
            std::vector<Vertex> path{s};
            const VertexSet& ns = adj.neighbors(s, c);
            bool found = false;
            auto close = [&](auto&& self, std::size_t remaining) -> bool {
                if (remaining == 0) {
                    return ns.contains(path.back());
                }
                const VertexSet& next = adj.neighbors(path.back(), c);
                for (Vertex x = next.next(s + 1); x < n; x = next.next(x + 1)) {
                    if (used[x]) {
                        continue;
                    }
                    used[x] = 1;
                    path.push_back(x);
                    if (self(self, remaining - 1)) {
                        return true;
                    }
                    path.pop_back();
                    used[x] = 0;
                }
                return false;
            };
            found = close(close, m - 1);
            if (found) {
                return WitnessEmbedding{pattern, c, path};
            }
        }
    }
    return std::nullopt;
}

std::optional<WitnessEmbedding> contains_pattern(const ColoredCompleteGraph& g, const Pattern& p,
                                                 std::optional<Color> c)
{
    return contains_pattern(ColorAdjacency(g), p, c);
}

std::optional<WitnessEmbedding> contains_pattern(const ColorAdjacency& adj, const Pattern& p, std::optional<Color> c)
{
    switch (p.kind()) {
    case PatternKind::StarPlus: return find_mono_star_plus(adj, p.size(), c);
    case PatternKind::PathPlus: return find_mono_path_plus(adj, p.size(), c);
    case PatternKind::Cycle: return find_mono_cycle(adj, p.size(), c);
    case PatternKind::Path: return mono_path(adj, p.size(), c);
    case PatternKind::Star: return mono_star(adj, p.size(), c);
    case PatternKind::Clique: return mono_clique(adj, p.size(), c);
    }
    return std::nullopt;
}

} // namespace gallai
