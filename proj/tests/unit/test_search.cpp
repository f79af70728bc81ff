#include "gallai/colored_graph.hpp"
#include "gallai/constructions.hpp"
#include "gallai/detect.hpp"
#include "gallai/oracle.hpp"
#include "gallai/rng.hpp"
#include "gallai/search.hpp"

#include <doctest.h>

using namespace gallai;

namespace {

const SearchBudget kBudget{};

ColoredCompleteGraph from_mask(std::size_t n, std::uint64_t mask)
{
    ColoredCompleteGraph::Builder b(n, 2);
    for (Vertex u = 1; u < n; ++u) {
        for (Vertex v = 0; v < u; ++v) {
            b.set(u, v, (mask >> pair_index(u, v)) & 1 ? 2 : 1);
        }
    }
    return std::move(b).build();
}

// Does any 2-coloring of K_n avoid p_red in color 1 and p_blue in color 2?
bool enumerate_avoider(std::size_t n, const Pattern& p_red, const Pattern& p_blue)
{
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const auto g = from_mask(n, mask);
        if (!brute_force_find(g, p_red, Color{1}) && !brute_force_find(g, p_blue, Color{2})) {
            return true;
        }
    }
    return false;
}

void check_witness(const SearchOutcome& out, const Pattern& p_red, const Pattern& p_blue)
{
    REQUIRE(out.witness);
    CHECK(out.witness->order() == out.order);
    CHECK_FALSE(contains_pattern(*out.witness, p_red, Color{1}));
    CHECK_FALSE(contains_pattern(*out.witness, p_blue, Color{2}));
}

} // namespace

TEST_CASE("search examples")
{
    const auto k3 = Pattern::clique(3);
    const auto five = search_two_color(5, k3, k3, kBudget);
    CHECK(five.verdict == Verdict::Witness);
    check_witness(five, k3, k3);

    CHECK(search_two_color(6, k3, k3, kBudget).verdict == Verdict::Exhausted);

    const auto s4 = Pattern::star_plus(4);
    const auto six = search_two_color(6, s4, s4, kBudget);
    CHECK(six.verdict == Verdict::Witness);
    check_witness(six, s4, s4);
    const auto seven = search_two_color(7, s4, s4, kBudget);
    CHECK(seven.verdict == Verdict::Exhausted);
    CHECK_FALSE(seven.witness);
    CHECK(seven.stats.nodes > 0);
}

TEST_CASE("search agrees with full enumeration at tiny scale")
{
    std::vector<Pattern> patterns{Pattern::clique(3), Pattern::star_plus(4), Pattern::path_plus(4),
                                  Pattern::cycle(4),  Pattern::star(3),      Pattern::star(4),
                                  Pattern::path(3),   Pattern::path(4),      Pattern::clique(2)};
    for (std::size_t n = 2; n <= 5; ++n) {
        for (std::size_t i = 0; i < patterns.size(); ++i) {
            for (std::size_t j = i; j < patterns.size(); j += 2) {
                const auto& a = patterns[i];
                const auto& b = patterns[j];
                CAPTURE(n);
                CAPTURE(a.to_string());
                CAPTURE(b.to_string());
                const auto out = search_two_color(n, a, b, kBudget);
                const bool expect = enumerate_avoider(n, a, b);
                REQUIRE((out.verdict == Verdict::Witness) == expect);
                if (expect) {
                    check_witness(out, a, b);
                }
            }
        }
    }
}

TEST_CASE("prune events replay against the oracle")
{
    struct Event {
        PartialColoring state;
        Color c;
        Vertex u;
        Vertex v;
    };
    std::vector<Event> seen;
    std::uint64_t total = 0;
    Rng rng(17);
    SearchOptions options;
    const auto s4 = Pattern::star_plus(4);
    const auto p5 = Pattern::path_plus(5);
    options.on_prune = [&](const PartialColoring& s, Color c, Vertex u, Vertex v) {
        ++total;
        // Reservoir sample of 1000 events.
        if (seen.size() < 1000) {
            seen.push_back({s, c, u, v});
        } else {
            const auto slot = rng.below(total);
            if (slot < 1000) {
                seen[slot] = {s, c, u, v};
            }
        }
    };
    for (std::size_t n = 5; n <= 9; ++n) {
        search_two_color(n, s4, p5, kBudget, options);
    }
    MESSAGE("prune events: " << total);
    REQUIRE(seen.size() == 1000);
    for (auto& e : seen) {
        const Pattern& p = e.c == 1 ? s4 : p5;
        REQUIRE(e.state.color_of(e.u, e.v) == e.c);
        REQUIRE(brute_force_find(e.state, p, e.c));
        REQUIRE(contains_through_edge(e.state, p, e.c, e.u, e.v));
        e.state.clear(e.u, e.v);
        REQUIRE_FALSE(brute_force_find(e.state, p, e.c));
    }
}

TEST_CASE("contains_through_edge needs the edge")
{
    PartialColoring s(5, 2);
    s.assign(0, 1, 1);
    s.assign(0, 2, 1);
    s.assign(1, 2, 1);
    const auto k3 = Pattern::clique(3);
    CHECK(contains_through_edge(s, k3, 1, 1, 2));
    CHECK_FALSE(contains_through_edge(s, k3, 2, 1, 2));
    s.assign(3, 4, 1);
    CHECK_FALSE(contains_through_edge(s, k3, 1, 3, 4));
    s.assign(0, 3, 1);
    CHECK(contains_through_edge(s, Pattern::star_plus(4), 1, 0, 3));
}

TEST_CASE("ramsey numbers")
{
    const auto k3 = ramsey_number(Pattern::clique(3), Pattern::clique(3), 10, kBudget);
    CHECK(k3.value == 6);
    CHECK(k3.witness.order() == 5);
    CHECK_FALSE(contains_pattern(k3.witness, Pattern::clique(3)));
    CHECK(k3.exhaustion.verdict == Verdict::Exhausted);
    CHECK(k3.exhaustion.order == 6);

    const auto s4 = ramsey_number(Pattern::star_plus(4), Pattern::star_plus(4), 10, kBudget);
    CHECK(s4.value == 7);
    const auto p45 = ramsey_number(Pattern::path_plus(4), Pattern::path_plus(5), 12, kBudget);
    CHECK(p45.value == 9);
    CHECK_FALSE(find_mono_path_plus(p45.witness, 4, Color{1}));
    CHECK_FALSE(find_mono_path_plus(p45.witness, 5, Color{2}));

    CHECK_THROWS_AS(ramsey_number(Pattern::star_plus(4), Pattern::star_plus(4), 6, kBudget), NotFoundBelowCap);
    SearchBudget tiny;
    tiny.max_nodes = 50;
    CHECK_THROWS_AS(ramsey_number(Pattern::star_plus(5), Pattern::star_plus(5), 12, tiny), BudgetExhausted);
}

TEST_CASE("verdict and witness do not depend on worker count")
{
    const auto a = Pattern::path_plus(4);
    const auto b = Pattern::path_plus(5);
    for (std::size_t n = 6; n <= 9; ++n) {
        SearchOptions one;
        SearchOptions four;
        four.jobs = 4;
        const auto x = search_two_color(n, a, b, kBudget, one);
        const auto y = search_two_color(n, a, b, kBudget, four);
        CHECK(x.verdict == y.verdict);
        CHECK(x.witness == y.witness);
    }
}

TEST_CASE("claimed 2t-1 values")
{
    const auto s = verify_paper_claims(4, PatternKind::StarPlus, kBudget);
    CHECK(s.pass);
    CHECK(s.value == 7);
    CHECK(s.claimed == 7);
    CHECK_FALSE(s.divergence);

    const auto p = verify_paper_claims(4, PatternKind::PathPlus, kBudget);
    CHECK(p.pass);
    CHECK(p.value == 7);

    const auto three = verify_paper_claims(3, PatternKind::StarPlus, kBudget);
    CHECK_FALSE(three.pass);
    CHECK(three.value == 6);
    CHECK(three.claimed == 5);
    CHECK(three.divergence);
}

TEST_CASE("full enumeration of K7 for star-plus 4")
{
    // 2^21 colorings.
    CHECK_FALSE(enumerate_avoider(7, Pattern::star_plus(4), Pattern::star_plus(4)));
}
