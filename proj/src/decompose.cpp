#include "gallai/decompose.hpp"

#include "gallai/detect.hpp"
#include "gallai/disjoint_set.hpp"

#include <algorithm>
#include <optional>

namespace gallai {

namespace {

// Maps each vertex to a dense part id, parts numbered by smallest vertex.
std::vector<std::size_t> label_parts(DisjointSet& dsu, std::size_t n, std::size_t& parts)
{
    std::vector<std::size_t> id_of_root(n, n);
    std::vector<std::size_t> label(n);
    parts = 0;
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t r = dsu.find(v);
        if (id_of_root[r] == n) {
            id_of_root[r] = parts++;
        }
        label[v] = id_of_root[r];
    }
    return label;
}

// Refines the components of the graph of edges colored outside `skip` into
// the finest coarsening with monochromatic between-part edges.
std::optional<GallaiPartition> candidate(const ColoredCompleteGraph& g, const std::vector<char>& in_set)
{
    const std::size_t n = g.order();
    DisjointSet dsu(n);
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if (!in_set[g.at(u, v)]) {
                dsu.unite(u, v);
            }
        }
    }

    while (true) {
        if (dsu.set_count() < 2) {
            return std::nullopt;
        }
        std::size_t m = 0;
        const std::vector<std::size_t> label = label_parts(dsu, n, m);
        std::vector<Color> first(pair_count(m), kNoColor);
        std::vector<std::pair<Vertex, Vertex>> conflicts;
        for (Vertex v = 1; v < n; ++v) {
            for (Vertex u = 0; u < v; ++u) {
                const std::size_t a = label[u];
                const std::size_t b = label[v];
                if (a == b) {
                    continue;
                }
                Color& slot = first[pair_index(static_cast<Vertex>(a), static_cast<Vertex>(b))];
                const Color c = g.at(u, v);
                if (slot == kNoColor) {
                    slot = c;
                } else if (slot != c) {
                    conflicts.emplace_back(u, v);
                }
            }
        }
        if (conflicts.empty()) {
            GallaiPartition p;
            p.parts.resize(m);
            for (Vertex v = 0; v < n; ++v) {
                p.parts[label[v]].push_back(v);
            }
            p.quotient = std::move(first);
            p.between_colors = p.quotient;
            std::sort(p.between_colors.begin(), p.between_colors.end());
            p.between_colors.erase(std::unique(p.between_colors.begin(), p.between_colors.end()),
                                   p.between_colors.end());
            return p;
        }
        for (const auto& [u, v] : conflicts) {
            dsu.unite(u, v);
        }
    }
}

} // namespace

GallaiPartition gallai_partition(const ColoredCompleteGraph& g)
{
    if (g.order() < 2) {
        throw DomainError("gallai_partition requires at least 2 vertices");
    }
    if (auto rainbow = find_rainbow_triangle(g)) {
        throw RainbowTrianglePresent(*rainbow);
    }
    const std::size_t k = g.colors();
    std::optional<GallaiPartition> best;
    std::vector<char> in_set(k + 1, 0);
    auto consider = [&] {
        auto p = candidate(g, in_set);
        if (p && (!best || p->part_count() > best->part_count())) {
            best = std::move(p);
        }
    };
    // One between-color first; pairs only if no single color works.
    for (std::size_t a = 1; a <= k; ++a) {
        in_set[a] = 1;
        consider();
        in_set[a] = 0;
    }
    for (std::size_t a = 1; a <= k && !best; ++a) {
        in_set[a] = 1;
        for (std::size_t b = a + 1; b <= k; ++b) {
            in_set[b] = 1;
            consider();
            in_set[b] = 0;
        }
        in_set[a] = 0;
    }
    if (!best) {
        throw InternalExhaustion("no color set of size <= 2 yields a nontrivial partition");
    }
    return *best;
}

PartitionCheck validate_partition(const ColoredCompleteGraph& g, const GallaiPartition& p)
{
    auto fail = [](std::string why) { return PartitionCheck{false, std::move(why)}; };
    const std::size_t n = g.order();
    const std::size_t m = p.parts.size();
    if (m < 2) {
        return fail("partition has " + std::to_string(m) + " part(s); need at least 2");
    }
    std::vector<std::size_t> owner(n, m);
    for (std::size_t i = 0; i < m; ++i) {
        if (p.parts[i].empty()) {
            return fail("part " + std::to_string(i) + " is empty");
        }
        for (Vertex v : p.parts[i]) {
            if (v >= n) {
                return fail("vertex " + std::to_string(v) + " out of range");
            }
            if (owner[v] != m) {
                return fail("vertex " + std::to_string(v) + " appears in parts " + std::to_string(owner[v]) + " and " +
                            std::to_string(i));
            }
            owner[v] = i;
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (owner[v] == m) {
            return fail("vertex " + std::to_string(v) + " is not covered");
        }
    }
    if (p.quotient.size() != pair_count(m)) {
        return fail("quotient has " + std::to_string(p.quotient.size()) + " entries, expected " +
                    std::to_string(pair_count(m)));
    }
    std::vector<char> seen(g.colors() + 1, 0);
    for (Color c : p.quotient) {
        if (c < 1 || c > g.colors()) {
            return fail("quotient color " + std::to_string(c) + " out of range");
        }
        seen[c] = 1;
    }
    std::vector<Color> distinct;
    for (std::size_t c = 1; c <= g.colors(); ++c) {
        if (seen[c]) {
            distinct.push_back(static_cast<Color>(c));
        }
    }
    if (distinct.size() > 2) {
        return fail("quotient uses " + std::to_string(distinct.size()) + " colors; at most 2 allowed");
    }
    if (distinct != p.between_colors) {
        return fail("between_colors does not match the quotient");
    }
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            const std::size_t a = owner[u];
            const std::size_t b = owner[v];
            if (a == b) {
                continue;
            }
            const Color expected = p.quotient[pair_index(static_cast<Vertex>(a), static_cast<Vertex>(b))];
            if (g.at(u, v) != expected) {
                return fail("edge {" + std::to_string(u) + "," + std::to_string(v) + "} has color " +
                            std::to_string(g.at(u, v)) + " but parts " + std::to_string(a) + "," + std::to_string(b) +
                            " are joined in color " + std::to_string(expected));
            }
        }
    }
    return {};
}

ColoredCompleteGraph reduced_graph(const ColoredCompleteGraph& g, const GallaiPartition& p)
{
    if (const PartitionCheck check = validate_partition(g, p); !check) {
        throw DomainError("invalid partition: " + check.violation);
    }
    const std::size_t m = p.parts.size();
    ColoredCompleteGraph::Builder b(m, g.colors());
    for (Vertex j = 1; j < m; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            b.set(i, j, p.quotient[pair_index(i, j)]);
        }
    }
    return std::move(b).build();
}

} // namespace gallai
