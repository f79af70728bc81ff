#pragma once

#include "gallai/colored_graph.hpp"
#include "gallai/error.hpp"
#include "gallai/pattern.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gallai {

struct SearchBudget {
    std::uint64_t max_nodes = 1'000'000'000;
    std::chrono::duration<double> max_time = std::chrono::hours(2);
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
    double seconds = 0.0;

    SearchStats& operator+=(const SearchStats& o)
    {
        nodes += o.nodes;
        prunes += o.prunes;
        seconds += o.seconds;
        return *this;
    }
};

enum class Verdict { Witness, Exhausted };

struct SearchOutcome {
    std::size_t order = 0;
    Verdict verdict = Verdict::Exhausted;
    /// Set iff verdict == Witness: a coloring with no p_red in color 1 and
    /// no p_blue in color 2, re-validated by the full detectors.
    std::optional<ColoredCompleteGraph> witness;
    SearchStats stats;
};

/// The budget ran out before the tree was covered. Not a verdict.
class BudgetExhausted : public Error {
public:
    BudgetExhausted(std::size_t order, SearchStats stats)
        : Error("search budget exhausted at order " + std::to_string(order) + " after " +
                std::to_string(stats.nodes) + " nodes"),
          order_(order),
          stats_(stats)
    {
    }
    std::size_t order() const noexcept { return order_; }
    const SearchStats& stats() const noexcept { return stats_; }

private:
    std::size_t order_;
    SearchStats stats_;
};

class NotFoundBelowCap : public Error {
public:
    using Error::Error;
};

/// Called for every pruned assignment: the state already holds edge {u, v}
/// in color c and contains the forbidden pattern for c through that edge.
using PruneObserver = std::function<void(const PartialColoring& state, Color c, Vertex u, Vertex v)>;

struct SearchOptions {
    std::size_t jobs = 1;
    /// Edges colored before the tree is cut into independent tasks.
    std::size_t split_depth = 6;
    PruneObserver on_prune;
};

/// Does the partial coloring contain `p` in color c using the edge {u, v}?
/// Only colored edges count. The search relies on the state without {u, v}
/// being free of p in color c.
bool contains_through_edge(const PartialColoring& state, const Pattern& p, Color c, Vertex u, Vertex v);

/// Backtracking over 2-colorings of K_n. Edges are assigned in vertex order
/// ({0,1}, {0,2}, {1,2}, {0,3}, ...), color 1 before color 2, and a branch is
/// cut as soon as color 1 holds p_red or color 2 holds p_blue. When the two
/// patterns coincide, {0,1} is fixed to color 1.
///
/// Requires 2 <= n <= 64 and patterns with at least one edge. Throws
/// BudgetExhausted if the budget runs out before a verdict.
SearchOutcome search_two_color(std::size_t n, const Pattern& p_red, const Pattern& p_blue, const SearchBudget& budget,
                               const SearchOptions& options = {});

struct RamseyCertificate {
    Pattern p_red;
    Pattern p_blue;
    std::uint64_t value = 0;
    /// Coloring of K_{value-1} avoiding both patterns.
    ColoredCompleteGraph witness;
    SearchOutcome exhaustion;
    /// One entry per order searched, ascending.
    std::vector<SearchOutcome> trail;
    SearchStats total;
};

/// Smallest n <= n_max whose search is exhausted, with the witness at n-1.
/// The budget covers the whole sweep. Throws BudgetExhausted or NotFoundBelowCap.
RamseyCertificate ramsey_number(const Pattern& p_red, const Pattern& p_blue, std::size_t n_max,
                                const SearchBudget& budget, const SearchOptions& options = {});

struct ClaimReport {
    PatternKind family;
    std::size_t s;
    std::size_t t;
    std::uint64_t claimed;
    std::uint64_t value;
    bool pass;
    /// Set when the requested order falls outside the range where 2t-1 holds.
    std::optional<std::string> divergence;
    RamseyCertificate certificate;
};

/// Certifies R(family_s, family_t) against 2*max(s,t)-1. Orders below 4 run
/// with triangle semantics (both families degenerate to K3 at order 3) and
/// carry a divergence note.
ClaimReport verify_paper_claims(PatternKind family, std::size_t s, std::size_t t, const SearchBudget& budget,
                                const SearchOptions& options = {});
ClaimReport verify_paper_claims(std::size_t t, PatternKind family, const SearchBudget& budget,
                                const SearchOptions& options = {});

} // namespace gallai
