#pragma once

#include "gallai/colored_graph.hpp"
#include "gallai/pattern.hpp"

#include <optional>

namespace gallai {

// Exhaustive detectors for rainbow triangles and monochromatic patterns.
//
// Every detector returns the first witness in a fixed scan order: colors
// ascending (all of 1..k when no color is given), then vertices ascending.
// The ColorAdjacency overloads let callers running several scans over one
// graph build the adjacency bitsets once.

std::optional<WitnessEmbedding> find_rainbow_triangle(const ColoredCompleteGraph& g);
std::optional<WitnessEmbedding> find_rainbow_triangle(const ColoredCompleteGraph& g, const ColorAdjacency& adj);

/// Center with >= t-1 neighbors in color c whose c-neighborhood spans a c-edge.
/// O(k n^3 / 64). Throws DomainError for t < 3.
std::optional<WitnessEmbedding> find_mono_star_plus(const ColoredCompleteGraph& g, std::size_t t,
                                                    std::optional<Color> c = std::nullopt);
std::optional<WitnessEmbedding> find_mono_star_plus(const ColorAdjacency& adj, std::size_t t,
                                                    std::optional<Color> c = std::nullopt);

/// Monochromatic triangle {v1, v2, v3} extended from v3 by a path on t-3
/// further vertices, found by depth-first backtracking. Throws for t < 3.
std::optional<WitnessEmbedding> find_mono_path_plus(const ColoredCompleteGraph& g, std::size_t t,
                                                    std::optional<Color> c = std::nullopt);
std::optional<WitnessEmbedding> find_mono_path_plus(const ColorAdjacency& adj, std::size_t t,
                                                    std::optional<Color> c = std::nullopt);

/// Exact-length cycle by backtracking from its smallest vertex. Throws for m < 3.
std::optional<WitnessEmbedding> find_mono_cycle(const ColoredCompleteGraph& g, std::size_t m,
                                                std::optional<Color> c = std::nullopt);
std::optional<WitnessEmbedding> find_mono_cycle(const ColorAdjacency& adj, std::size_t m,
                                                std::optional<Color> c = std::nullopt);

/// Dispatch over pattern kinds. Clique, Star and Path use direct scans.
std::optional<WitnessEmbedding> contains_pattern(const ColoredCompleteGraph& g, const Pattern& p,
                                                 std::optional<Color> c = std::nullopt);
std::optional<WitnessEmbedding> contains_pattern(const ColorAdjacency& adj, const Pattern& p,
                                                 std::optional<Color> c = std::nullopt);

} // namespace gallai
