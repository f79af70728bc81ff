#include "gallai/error.hpp"
#include "gallai/formulas.hpp"

#include <doctest.h>

using namespace gallai;

namespace {

// Plain recomputation of the closed forms.
std::uint64_t gr_direct(std::size_t t, std::size_t k)
{
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < (k % 2 == 0 ? (k - 2) / 2 : (k - 1) / 2); ++i) {
        p *= 5;
    }
    return (k % 2 == 0 ? 2 * (t - 1) : (t - 1)) * p + 1;
}

} // namespace

TEST_CASE("gr values")
{
    CHECK(gr_value({PatternKind::StarPlus, 4, 2}) == 7);
    CHECK(gr_value({PatternKind::StarPlus, 4, 3}) == 16);
    CHECK(gr_value({PatternKind::PathPlus, 5, 4}) == 41);
    CHECK(gr_value({PatternKind::StarPlus, 4, 1}) == 4);
    CHECK_FALSE(evaluate_gr({PatternKind::StarPlus, 4, 3}).branch.empty());

    CHECK_THROWS_AS(gr_value({PatternKind::StarPlus, 3, 2}), DomainError);
    CHECK_THROWS_AS(gr_value({PatternKind::StarPlus, 4, 0}), DomainError);
    CHECK_THROWS_AS(gr_value({PatternKind::Cycle, 4, 2}), DomainError);
    CHECK_THROWS_AS(gr_value({PatternKind::StarPlus, 4, 200}), OverflowError);
}

TEST_CASE("gr matches direct evaluation and recurrence")
{
    for (std::size_t t = 4; t <= 16; ++t) {
        for (std::size_t k = 1; k <= 16; ++k) {
            const auto v = gr_value({PatternKind::PathPlus, t, k});
            CHECK(v == gr_direct(t, k));
            CHECK(v == gr_value({PatternKind::StarPlus, t, k}));
            CHECK(gr_value({PatternKind::StarPlus, t, k + 2}) == 5 * (v - 1) + 1);
        }
    }
    for (std::size_t t = 4; t <= 64; ++t) {
        CHECK(gr_value({PatternKind::StarPlus, t, 2}) == 2 * t - 1);
        CHECK(ramsey_value(PatternKind::StarPlus, t, t) == 2 * t - 1);
    }
}

TEST_CASE("ramsey values")
{
    CHECK(ramsey_value(PatternKind::StarPlus, 4, 4) == 7);
    CHECK(ramsey_value(PatternKind::PathPlus, 4, 6) == 11);
    CHECK(ramsey_value(PatternKind::PathPlus, 6, 4) == 11);
    CHECK_THROWS_AS(ramsey_value(PatternKind::PathPlus, 3, 5), DomainError);
    CHECK_THROWS_AS(ramsey_value(PatternKind::Clique, 4, 5), DomainError);
}

TEST_CASE("cycle ramsey")
{
    CHECK(cycle_ramsey(5, 7) == 13);
    CHECK(cycle_ramsey(4, 6) == 7);
    CHECK(cycle_ramsey(4, 7) == 8);
    CHECK(cycle_ramsey(3, 4) == 7);
    CHECK(cycle_ramsey(6, 7) == 11);
    CHECK_THROWS_AS(cycle_ramsey(3, 3), DomainError);
    CHECK_THROWS_AS(cycle_ramsey(4, 4), DomainError);
    CHECK_THROWS_AS(cycle_ramsey(6, 5), DomainError);
    CHECK_THROWS_AS(cycle_ramsey(2, 5), DomainError);
}

TEST_CASE("even cycle bounds")
{
    CHECK(even_cycle_gr_bounds(2, 3) == std::pair<std::uint64_t, std::uint64_t>{6, 9});
    CHECK(even_cycle_gr_bounds(3, 1) == std::pair<std::uint64_t, std::uint64_t>{6, 11});
    for (std::size_t n = 2; n <= 50; ++n) {
        for (std::size_t k = 1; k <= 50; ++k) {
            const auto [lo, hi] = even_cycle_gr_bounds(n, k);
            CHECK(lo <= hi);
            CHECK(lo == (n - 1) * k + n + 1);
        }
    }
    CHECK_THROWS_AS(even_cycle_gr_bounds(1, 3), DomainError);
    CHECK_THROWS_AS(even_cycle_gr_bounds(2, 0), DomainError);
}
