#pragma once

// Definitional brute-force searches used to cross-check the fast detectors
// and the search pruning. Nothing here shares code with detect.cpp beyond
// Pattern::edges().

#include "gallai/error.hpp"
#include "gallai/pattern.hpp"

#include <optional>
#include <vector>

namespace gallai {

inline constexpr std::size_t kOracleMaxPatternOrder = 10;
inline constexpr std::size_t kOracleMaxHostOrder = 12;

namespace detail {

template <typename Graph>
bool place_roles(const Graph& g, const std::vector<std::vector<std::size_t>>& earlier, Color c,
                 std::vector<Vertex>& roles, std::vector<char>& used)
{
    const std::size_t pos = roles.size();
    if (pos == earlier.size()) {
        return true;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (used[v]) {
            continue;
        }
        bool ok = true;
        for (std::size_t q : earlier[pos]) {
            if (g.color_of(roles[q], v) != c) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        used[v] = 1;
        roles.push_back(v);
        if (place_roles(g, earlier, c, roles, used)) {
            return true;
        }
        roles.pop_back();
        used[v] = 0;
    }
    return false;
}

} // namespace detail

/// Tries every injective assignment of pattern positions to host vertices
/// (lexicographic in the assignment), checking each pattern edge against
/// the host's color_of. Works on total and partial colorings alike.
/// Throws DomainError if the pattern has more than 10 vertices or the host
/// more than 12.
template <typename Graph>
std::optional<WitnessEmbedding> brute_force_find(const Graph& g, const Pattern& p,
                                                 std::optional<Color> color = std::nullopt)
{
    if (p.order() > kOracleMaxPatternOrder || g.order() > kOracleMaxHostOrder) {
        throw DomainError("brute_force_find guard: pattern order <= 10 and host order <= 12");
    }
    // earlier[j] lists positions i < j adjacent to j in the pattern.
    std::vector<std::vector<std::size_t>> earlier(p.order());
    for (const auto& [i, j] : p.edges()) {
        earlier[j].push_back(i);
    }
    std::vector<Color> colors;
    if (color) {
        colors.push_back(*color);
    } else {
        for (std::size_t c = 1; c <= g.colors(); ++c) {
            colors.push_back(static_cast<Color>(c));
        }
    }
    for (Color c : colors) {
        std::vector<Vertex> roles;
        std::vector<char> used(g.order(), 0);
        if (detail::place_roles(g, earlier, c, roles, used)) {
            return WitnessEmbedding{p, c, roles};
        }
    }
    return std::nullopt;
}

/// All triples, lexicographic.
template <typename Graph>
std::optional<WitnessEmbedding> brute_force_rainbow(const Graph& g)
{
    for (Vertex a = 0; a < g.order(); ++a) {
        for (Vertex b = a + 1; b < g.order(); ++b) {
            for (Vertex c = b + 1; c < g.order(); ++c) {
                const Color x = g.color_of(a, b);
                const Color y = g.color_of(a, c);
                const Color z = g.color_of(b, c);
                if (x != kNoColor && y != kNoColor && z != kNoColor && x != y && x != z && y != z) {
                    return WitnessEmbedding{Pattern::clique(3), std::nullopt, {a, b, c}};
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace gallai
