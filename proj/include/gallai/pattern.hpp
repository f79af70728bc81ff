#pragma once

#include "gallai/colored_graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gallai {

enum class PatternKind { StarPlus, PathPlus, Cycle, Path, Star, Clique };

std::string_view kind_name(PatternKind kind) noexcept;

/// Accepts the names produced by kind_name(); throws DomainError otherwise.
PatternKind parse_kind(std::string_view name);

/// A target graph from a small parameterized family.
///
/// The size parameter is the number of vertices for every kind: t for
/// StarPlus/PathPlus/Path/Star, m for Cycle, s for Clique.
///
/// Canonical vertex labeling (positions 0..order()-1):
///   StarPlus  center, the two adjacent leaves, remaining leaves
///   PathPlus  path order v1..vt with the extra edge {v1, v3}
///   Cycle     cyclic order
///   Path      path order
///   Star      center first
///   Clique    any order
class Pattern {
public:
    /// Throws DomainError when the size is below the kind's minimum.
    Pattern(PatternKind kind, std::size_t size);

    static Pattern star_plus(std::size_t t) { return {PatternKind::StarPlus, t}; }
    static Pattern path_plus(std::size_t t) { return {PatternKind::PathPlus, t}; }
    static Pattern cycle(std::size_t m) { return {PatternKind::Cycle, m}; }
    static Pattern path(std::size_t t) { return {PatternKind::Path, t}; }
    static Pattern star(std::size_t t) { return {PatternKind::Star, t}; }
    static Pattern clique(std::size_t s) { return {PatternKind::Clique, s}; }

    PatternKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return size_; }
    std::size_t order() const noexcept { return size_; }

    /// Edges between canonical positions, each as (lower, higher).
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    std::string to_string() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    PatternKind kind_;
    std::size_t size_;
};

/// Certificate for a detector hit. A rainbow triangle carries Clique(3)
/// and no color.
struct WitnessEmbedding {
    Pattern pattern;
    std::optional<Color> color;
    std::vector<Vertex> vertices;

    bool rainbow() const noexcept { return !color.has_value(); }

    friend bool operator==(const WitnessEmbedding&, const WitnessEmbedding&) = default;
};

/// Re-checks a witness against any graph exposing order() and color_of(u, v).
/// Partial colorings report unassigned pairs as kNoColor, which never matches.
template <typename Graph>
bool witness_holds(const Graph& g, const WitnessEmbedding& w)
{
    if (w.vertices.size() != w.pattern.order()) {
        return false;
    }
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        if (w.vertices[i] >= g.order()) {
            return false;
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (w.vertices[i] == w.vertices[j]) {
                return false;
            }
        }
    }
    if (w.rainbow()) {
        if (w.pattern != Pattern::clique(3)) {
            return false;
        }
        const Color a = g.color_of(w.vertices[0], w.vertices[1]);
        const Color b = g.color_of(w.vertices[0], w.vertices[2]);
        const Color c = g.color_of(w.vertices[1], w.vertices[2]);
        return a != kNoColor && b != kNoColor && c != kNoColor && a != b && a != c && b != c;
    }
    for (const auto& [i, j] : w.pattern.edges()) {
        if (g.color_of(w.vertices[i], w.vertices[j]) != *w.color) {
            return false;
        }
    }
    return true;
}

} // namespace gallai
