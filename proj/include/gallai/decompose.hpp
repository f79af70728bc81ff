#pragma once

#include "gallai/colored_graph.hpp"
#include "gallai/error.hpp"
#include "gallai/pattern.hpp"

#include <string>
#include <vector>

namespace gallai {

/// Partition of V(G) into m >= 2 parts with a single color on all edges
/// between any two parts and at most two such colors overall.
struct GallaiPartition {
    /// Each part sorted ascending; parts ordered by smallest vertex.
    std::vector<std::vector<Vertex>> parts;
    /// quotient[pair_index(i, j)] is the color between parts i and j.
    std::vector<Color> quotient;
    /// Distinct colors of quotient, ascending.
    std::vector<Color> between_colors;

    std::size_t part_count() const noexcept { return parts.size(); }
    Color quotient_color(std::size_t i, std::size_t j) const
    {
        return quotient.at(pair_index(static_cast<Vertex>(i), static_cast<Vertex>(j)));
    }

    friend bool operator==(const GallaiPartition&, const GallaiPartition&) = default;
};

class RainbowTrianglePresent : public Error {
public:
    explicit RainbowTrianglePresent(WitnessEmbedding witness)
        : Error("coloring contains a rainbow triangle"), witness_(std::move(witness))
    {
    }
    const WitnessEmbedding& witness() const noexcept { return witness_; }

private:
    WitnessEmbedding witness_;
};

/// No candidate color set produced a nontrivial partition on a rainbow-free
/// input. Existence is guaranteed for Gallai colorings, so this means a bug.
class InternalExhaustion : public Error {
public:
    using Error::Error;
};

/// For each color set S with |S| in {1, 2} (lexicographic order), joins the
/// endpoints of every edge colored outside S, then merges part pairs whose
/// between-edges are bichromatic until all pairs are monochromatic. Single
/// colors are tried first and pairs only when none of them splits G. Among
/// the nontrivial candidates of that size the one with the most parts wins;
/// ties go to the earliest S.
///
/// Throws DomainError for n < 2 and RainbowTrianglePresent if G is not a
/// Gallai coloring.
GallaiPartition gallai_partition(const ColoredCompleteGraph& g);

/// Complete graph on the parts, colored by the quotient. Declares G's k.
/// Throws DomainError if the partition does not validate against G.
ColoredCompleteGraph reduced_graph(const ColoredCompleteGraph& g, const GallaiPartition& p);

struct PartitionCheck {
    bool ok = true;
    std::string violation;

    explicit operator bool() const noexcept { return ok; }
};

/// Independent check of every GallaiPartition invariant against G.
PartitionCheck validate_partition(const ColoredCompleteGraph& g, const GallaiPartition& p);

} // namespace gallai
