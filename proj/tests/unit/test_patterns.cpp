#include "gallai/colored_graph.hpp"
#include "gallai/constructions.hpp"
#include "gallai/detect.hpp"
#include "gallai/error.hpp"
#include "gallai/json_io.hpp"
#include "gallai/oracle.hpp"
#include "gallai/pattern.hpp"

#include <doctest.h>

#include <cstdint>
#include <set>

using namespace gallai;

namespace {

std::vector<Pattern> small_patterns(std::size_t max_order)
{
    std::vector<Pattern> out;
    for (std::size_t s = 3; s <= max_order; ++s) {
        out.push_back(Pattern::star_plus(s));
        out.push_back(Pattern::path_plus(s));
        out.push_back(Pattern::cycle(s));
    }
    for (std::size_t s = 1; s <= max_order; ++s) {
        out.push_back(Pattern::path(s));
        out.push_back(Pattern::star(s));
        out.push_back(Pattern::clique(s));
    }
    return out;
}

// Every edge of the pattern is distinct and in range; counts per kind.
std::size_t expected_edges(const Pattern& p)
{
    const std::size_t s = p.size();
    switch (p.kind()) {
    case PatternKind::StarPlus:
        return s;
    case PatternKind::PathPlus:
        return s;
    case PatternKind::Cycle:
        return s;
    case PatternKind::Path:
    case PatternKind::Star:
        return s - 1;
    case PatternKind::Clique:
        return s * (s - 1) / 2;
    }
    return 0;
}

// All 2-colorings of K_n indexed by a bitmask over pairs in pair_index order.
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

} // namespace

TEST_CASE("pattern construction and names")
{
    CHECK_THROWS_AS(Pattern::star_plus(2), DomainError);
    CHECK_THROWS_AS(Pattern::path_plus(2), DomainError);
    CHECK_THROWS_AS(Pattern::cycle(2), DomainError);
    CHECK_THROWS_AS(Pattern::clique(0), DomainError);
    CHECK(Pattern::star_plus(4).to_string() == "star-plus(4)");
    CHECK(Pattern::cycle(5).to_string() == "cycle(5)");
    for (auto kind : {PatternKind::StarPlus, PatternKind::PathPlus, PatternKind::Cycle, PatternKind::Path,
                      PatternKind::Star, PatternKind::Clique}) {
        CHECK(parse_kind(kind_name(kind)) == kind);
    }
    CHECK_THROWS_AS(parse_kind("wheel"), DomainError);
}

TEST_CASE("pattern edge lists")
{
    for (const auto& p : small_patterns(9)) {
        CAPTURE(p.to_string());
        const auto edges = p.edges();
        std::set<std::pair<std::size_t, std::size_t>> seen(edges.begin(), edges.end());
        CHECK(seen.size() == edges.size());
        CHECK(edges.size() == expected_edges(p));
        for (const auto& [a, b] : edges) {
            CHECK(a < b);
            CHECK(b < p.order());
        }
    }
    // S_4^+ and P_4^+ are the same graph: a triangle with a pendant edge.
    CHECK(Pattern::star_plus(4).edges().size() == Pattern::path_plus(4).edges().size());
}

TEST_CASE("rainbow triangle")
{
    CHECK_FALSE(find_rainbow_triangle(pentagon_k5(1, 2)));
    CHECK_FALSE(find_rainbow_triangle(random_coloring(30, 2, 5)));

    ColoredCompleteGraph::Builder b(3, 3);
    b.set(0, 1, 1).set(0, 2, 2).set(1, 2, 3);
    const auto rainbow = std::move(b).build();
    const auto w = find_rainbow_triangle(rainbow);
    REQUIRE(w);
    CHECK(w->rainbow());
    CHECK(w->vertices == std::vector<Vertex>{0, 1, 2});
    CHECK(witness_holds(rainbow, *w));

    CHECK_FALSE(find_rainbow_triangle(lower_bound_construction(4, 5)));
}

TEST_CASE("rainbow triangle agrees with brute force")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto g = random_coloring(3 + seed % 10, 2 + seed % 3, seed);
        const auto fast = find_rainbow_triangle(g);
        const auto slow = brute_force_rainbow(g);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
            CHECK(fast->vertices == slow->vertices);
            CHECK(witness_holds(g, *fast));
        }
    }
}

TEST_CASE("star-plus examples")
{
    const auto tc = two_clique_example(4, 1, 2);
    CHECK_FALSE(find_mono_star_plus(tc, 4));
    CHECK_FALSE(find_mono_star_plus(tc, 4, Color{1}));
    CHECK_FALSE(find_mono_star_plus(tc, 4, Color{2}));

    const auto k4 = new_uniform(4, 1, 1);
    const auto w = find_mono_star_plus(k4, 4);
    REQUIRE(w);
    CHECK(witness_holds(k4, *w));
    CHECK(*w->color == 1);
    CHECK_THROWS_AS(find_mono_star_plus(k4, 2), DomainError);
}

TEST_CASE("path-plus examples")
{
    CHECK_FALSE(find_mono_path_plus(pentagon_k5(1, 2), 5));
    const auto k5 = new_uniform(5, 1, 1);
    const auto w = find_mono_path_plus(k5, 5);
    REQUIRE(w);
    CHECK(witness_holds(k5, *w));
    CHECK_FALSE(find_mono_path_plus(k5, 6));
    CHECK_FALSE(contains_pattern(lower_bound_construction(6, 4), Pattern::path_plus(6)));
}

TEST_CASE("cycle examples")
{
    const auto pent = pentagon_k5(1, 2);
    const auto w = find_mono_cycle(pent, 5, Color{1});
    REQUIRE(w);
    CHECK(witness_holds(pent, *w));
    CHECK(w->vertices.size() == 5);
    CHECK_FALSE(find_mono_cycle(pent, 3));
    CHECK_FALSE(find_mono_cycle(pent, 4));
    for (std::size_t m = 3; m <= 9; ++m) {
        CHECK(find_mono_cycle(new_uniform(m, 1, 1), m));
        CHECK_FALSE(find_mono_cycle(new_uniform(m, 1, 1), m + 1));
    }
}

TEST_CASE("contains_pattern examples")
{
    CHECK_FALSE(contains_pattern(pentagon_k5(1, 2), Pattern::clique(3), Color{1}));
    CHECK_FALSE(contains_pattern(pentagon_k5(1, 2), Pattern::clique(3), Color{2}));
    const auto k4 = new_uniform(4, 1, 1);
    const auto w = contains_pattern(k4, Pattern::star(4), Color{1});
    REQUIRE(w);
    CHECK(witness_holds(k4, *w));
}

TEST_CASE("brute force examples")
{
    CHECK_FALSE(brute_force_find(two_clique_example(5, 1, 2), Pattern::star_plus(5)));
    CHECK(brute_force_find(new_uniform(6, 1, 1), Pattern::path_plus(6)));
    CHECK_THROWS_AS(brute_force_find(new_uniform(13, 1, 1), Pattern::clique(3)), DomainError);
    CHECK_THROWS_AS(brute_force_find(new_uniform(12, 1, 1), Pattern::path(11)), DomainError);
}

TEST_CASE("detectors match brute force on every 2-coloring of K5 and K4")
{
    const std::vector<Pattern> patterns{Pattern::star_plus(3), Pattern::star_plus(4), Pattern::path_plus(4),
                                        Pattern::path_plus(5), Pattern::cycle(4),     Pattern::cycle(5),
                                        Pattern::star(4),      Pattern::path(5)};
    for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) {
        const auto g = from_mask(5, mask);
        for (const auto& p : patterns) {
            for (Color c = 1; c <= 2; ++c) {
                const auto fast = contains_pattern(g, p, c);
                const auto slow = brute_force_find(g, p, c);
                REQUIRE(fast.has_value() == slow.has_value());
                if (fast) {
                    REQUIRE(witness_holds(g, *fast));
                }
            }
        }
        if (mask < 64) {
            const auto k4 = from_mask(4, mask);
            for (const auto& p : small_patterns(4)) {
                REQUIRE(contains_pattern(k4, p).has_value() == brute_force_find(k4, p).has_value());
            }
        }
    }
}

TEST_CASE("detectors match brute force on random colorings")
{
    const auto patterns = small_patterns(6);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const std::size_t n = 2 + seed % 7;
        const std::size_t k = 1 + seed % 3;
        const auto g = random_coloring(n, k, seed * 7919 + 1);
        const ColorAdjacency adj(g);
        for (const auto& p : patterns) {
            const auto fast = contains_pattern(adj, p);
            const auto slow = brute_force_find(g, p);
            CAPTURE(seed);
            CAPTURE(p.to_string());
            REQUIRE(fast.has_value() == slow.has_value());
            if (fast) {
                REQUIRE(witness_holds(g, *fast));
                // Colors scanned ascending: the first hit is in the smallest color that has one.
                CHECK(*fast->color == *slow->color);
            }
        }
    }
}

TEST_CASE("monotone under larger patterns of the same kind")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto g = random_coloring(4 + seed % 8, 2, seed + 11);
        for (std::size_t t = 3; t < 9; ++t) {
            if (find_mono_star_plus(g, t + 1)) {
                CHECK(find_mono_star_plus(g, t));
            }
            if (find_mono_path_plus(g, t + 1)) {
                CHECK(find_mono_path_plus(g, t));
            }
        }
    }
}

TEST_CASE("star-plus and path-plus coincide at order 4")
{
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto g = random_coloring(2 + seed % 8, 1 + seed % 3, seed + 4242);
        CHECK(find_mono_star_plus(g, 4).has_value() == find_mono_path_plus(g, 4).has_value());
    }
}

TEST_CASE("witness json")
{
    const auto k4 = new_uniform(4, 1, 1);
    const auto w = find_mono_star_plus(k4, 4);
    REQUIRE(w);
    CHECK(to_json(*w).dump() == R"({"pattern":"star-plus","t_or_m":4,"color":1,"vertices":[0,1,2,3]})");

    ColoredCompleteGraph::Builder b(3, 3);
    b.set(0, 1, 1).set(0, 2, 2).set(1, 2, 3);
    const auto r = find_rainbow_triangle(std::move(b).build());
    REQUIRE(r);
    CHECK(to_json(*r).dump() == R"({"pattern":"clique","t_or_m":3,"color":"rainbow","vertices":[0,1,2]})");
}
