#include "gallai/colored_graph.hpp"
#include "gallai/constructions.hpp"
#include "gallai/decompose.hpp"
#include "gallai/detect.hpp"
#include "gallai/disjoint_set.hpp"
#include "gallai/error.hpp"
#include "gallai/json_io.hpp"

#include <doctest.h>

#include <set>

using namespace gallai;

namespace {

GallaiPartition singletons(const ColoredCompleteGraph& g)
{
    GallaiPartition p;
    std::set<Color> between;
    for (Vertex v = 0; v < g.order(); ++v) {
        p.parts.push_back({v});
    }
    p.quotient = g.edge_colors();
    for (Color c : p.quotient) {
        between.insert(c);
    }
    p.between_colors.assign(between.begin(), between.end());
    return p;
}

} // namespace

TEST_CASE("disjoint set")
{
    DisjointSet d(6);
    CHECK(d.set_count() == 6);
    CHECK(d.unite(0, 1));
    CHECK(d.unite(4, 5));
    CHECK_FALSE(d.unite(1, 0));
    CHECK(d.unite(1, 5));
    CHECK(d.find(0) == d.find(4));
    CHECK(d.find(2) != d.find(3));
    CHECK(d.set_count() == 3);
}

TEST_CASE("two-clique splits into its cliques")
{
    const auto g = two_clique_example(4, 1, 2);
    const auto p = gallai_partition(g);
    CHECK(p.parts == std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4, 5}});
    CHECK(p.between_colors == std::vector<Color>{2});
    CHECK(validate_partition(g, p));

    const auto r = reduced_graph(g, p);
    CHECK(r.order() == 2);
    CHECK(r.color_of(0, 1) == 2);
}

TEST_CASE("pentagon gives singletons")
{
    const auto g = pentagon_k5(1, 2);
    const auto p = gallai_partition(g);
    CHECK(p.part_count() == 5);
    CHECK(p.between_colors == std::vector<Color>{1, 2});
    CHECK(reduced_graph(g, p) == g);
    CHECK(to_json(p).dump().rfind(R"({"parts":[[0],[1],[2],[3],[4]],"quotient":[{"i":0,"j":1,"color":1})", 0) == 0);
}

TEST_CASE("blow-up parts are the copies")
{
    for (const auto& [base, ca, cb] : {std::tuple{new_uniform(3, 3, 3), Color{1}, Color{2}},
                                       std::tuple{new_uniform(3, 1, 1), Color{2}, Color{3}}}) {
        const auto g = blow_up_5(base, ca, cb);
        const auto p = gallai_partition(g);
        REQUIRE(p.part_count() == 5);
        for (std::size_t j = 0; j < 5; ++j) {
            const Vertex s = static_cast<Vertex>(3 * j);
            CHECK(p.parts[j] == std::vector<Vertex>{s, s + 1, s + 2});
        }
        const auto r = reduced_graph(g, p);
        CHECK(r.order() == 5);
        for (Vertex u = 0; u < 5; ++u) {
            for (Vertex v = 0; v < u; ++v) {
                const Vertex d = (u - v) % 5;
                CHECK(r.color_of(u, v) == ((d == 1 || d == 4) ? ca : cb));
            }
        }
    }
}

TEST_CASE("rainbow input is rejected with a witness")
{
    ColoredCompleteGraph::Builder b(4, 3, 1);
    b.set(0, 1, 1).set(0, 2, 2).set(1, 2, 3);
    const auto g = std::move(b).build();
    try {
        gallai_partition(g);
        FAIL("expected RainbowTrianglePresent");
    } catch (const RainbowTrianglePresent& e) {
        CHECK(witness_holds(g, e.witness()));
    }
    CHECK_THROWS_AS(gallai_partition(new_uniform(1, 1, 1)), DomainError);
}

TEST_CASE("validate_partition catches violations")
{
    const auto g = random_coloring(7, 2, 3);
    CHECK(validate_partition(g, singletons(g)));

    GallaiPartition whole;
    whole.parts.push_back({0, 1, 2, 3, 4, 5, 6});
    const auto one = validate_partition(g, whole);
    CHECK_FALSE(one);
    CHECK_FALSE(one.violation.empty());

    const auto two = two_clique_example(4, 1, 2);
    auto p = gallai_partition(two);
    std::swap(p.parts[0][0], p.parts[1][0]);
    CHECK_FALSE(validate_partition(two, p));
    CHECK_THROWS_AS(reduced_graph(two, p), DomainError);

    auto q = gallai_partition(two);
    q.parts[1].pop_back();
    CHECK_FALSE(validate_partition(two, q));

    auto r = gallai_partition(two);
    r.quotient[0] = 1;
    CHECK_FALSE(validate_partition(two, r));

    // Three between-colors can't happen in a valid partition.
    ColoredCompleteGraph::Builder b(3, 3);
    b.set(0, 1, 1).set(0, 2, 2).set(1, 2, 3);
    const auto tri = std::move(b).build();
    CHECK_FALSE(validate_partition(tri, singletons(tri)));
}

TEST_CASE("partition exists and validates on random gallai colorings")
{
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const std::size_t n = 2 + seed % 60;
        const std::size_t k = 1 + seed % 6;
        const auto g = random_gallai(n, k, seed);
        const auto p = gallai_partition(g);
        CAPTURE(seed);
        REQUIRE(p.part_count() >= 2);
        const auto check = validate_partition(g, p);
        REQUIRE_MESSAGE(check.ok, check.violation);
        const auto r = reduced_graph(g, p);
        CHECK(r.order() == p.part_count());
        CHECK(used_colors(r).size() <= 2);
        CHECK(gallai_partition(g) == p);
    }
}
