#pragma once

#include "gallai/colored_graph.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

namespace gallai {

/// Tree-shaped description of how an extremal coloring is assembled.
class ConstructionRecipe {
public:
    struct Uniform {
        std::size_t n;
        Color c;
    };
    struct TwoClique {
        std::size_t t;
        Color c_in;
        Color c_between;
    };
    struct Pentagon {
        Color c_a;
        Color c_b;
    };
    struct BlowUp5 {
        std::shared_ptr<const ConstructionRecipe> child;
        Color c_a;
        Color c_b;
    };
    using Node = std::variant<Uniform, TwoClique, Pentagon, BlowUp5>;

    explicit ConstructionRecipe(Node node);

    const Node& node() const noexcept { return node_; }

    /// One-line term such as blowup5(uniform(3,1),2,3).
    std::string to_string() const;

    ColoredCompleteGraph build() const;

private:
    Node node_;
};

/// Two c_in-colored cliques on t-1 vertices each ({0..t-2} and {t-1..2t-3}),
/// every cross edge c_between.
ColoredCompleteGraph two_clique_example(std::size_t t, Color c_in, Color c_between);

/// Edges {i, i+-1 mod 5} get c_a, edges {i, i+-2 mod 5} get c_b.
ColoredCompleteGraph pentagon_k5(Color c_a, Color c_b);

/// Five copies of g; copy j holds vertices [j|g|, (j+1)|g|). Copies i, j are
/// joined in c_a when j-i = +-1 (mod 5) and in c_b when j-i = +-2 (mod 5).
ColoredCompleteGraph blow_up_5(const ColoredCompleteGraph& g, Color c_a, Color c_b);

/// Odd k: uniform K_{t-1} in color 1, then blow-ups with pairs (2i, 2i+1).
/// Even k: two_clique_example(t, 1, 2), then blow-ups with (2i+1, 2i+2).
ConstructionRecipe lower_bound_recipe(std::size_t t, std::size_t k);
ColoredCompleteGraph lower_bound_construction(std::size_t t, std::size_t k);

/// Random rainbow-triangle-free coloring built by recursive substitution
/// into 2-colored base graphs, with a final random relabeling. Depends only
/// on (n, k, seed).
ColoredCompleteGraph random_gallai(std::size_t n, std::size_t k, std::uint64_t seed);

/// Uniformly random k-coloring (not necessarily Gallai). Test corpus helper.
ColoredCompleteGraph random_coloring(std::size_t n, std::size_t k, std::uint64_t seed);

} // namespace gallai
