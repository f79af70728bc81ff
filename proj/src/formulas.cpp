#include "gallai/formulas.hpp"

#include "gallai/error.hpp"

#include <algorithm>

namespace gallai {

namespace {

std::uint64_t mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw OverflowError("value exceeds 64-bit range");
    }
    return out;
}

std::uint64_t add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw OverflowError("value exceeds 64-bit range");
    }
    return out;
}

std::uint64_t pow5(std::size_t e)
{
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < e; ++i) {
        out = mul(out, 5);
    }
    return out;
}

void require_family(PatternKind family)
{
    if (family != PatternKind::StarPlus && family != PatternKind::PathPlus) {
        throw DomainError("closed forms exist only for star-plus and path-plus");
    }
}

void require_order(std::size_t t, const char* name)
{
    if (t < 4) {
        throw DomainError(std::string(name) + " must be >= 4; the t = 3 case (a triangle) has R = 6, not 2t-1 = 5");
    }
}

} // namespace

FormulaValue evaluate_gr(const GrQuery& q)
{
    require_family(q.family);
    require_order(q.t, "t");
    if (q.k < 1) {
        throw DomainError("k must be >= 1");
    }
    if (q.k % 2 == 0) {
        const std::uint64_t v = add(mul(mul(2, q.t - 1), pow5((q.k - 2) / 2)), 1);
        return {v, "even k: 2(t-1)*5^((k-2)/2)+1"};
    }
    const std::uint64_t v = add(mul(q.t - 1, pow5((q.k - 1) / 2)), 1);
    return {v, "odd k: (t-1)*5^((k-1)/2)+1"};
}

std::uint64_t gr_value(const GrQuery& q) { return evaluate_gr(q).value; }

FormulaValue evaluate_ramsey(PatternKind family, std::size_t s, std::size_t t)
{
    require_family(family);
    require_order(s, "s");
    require_order(t, "t");
    const std::uint64_t big = std::max(s, t);
    return {add(mul(2, big), 0) - 1, "2*max(s,t)-1"};
}

std::uint64_t ramsey_value(PatternKind family, std::size_t s, std::size_t t)
{
    return evaluate_ramsey(family, s, t).value;
}

FormulaValue evaluate_cycle_ramsey(std::size_t m, std::size_t n)
{
    if (m < 3 || n < 3) {
        throw DomainError("cycle lengths must be >= 3");
    }
    if (m > n) {
        throw DomainError("cycle_ramsey requires m <= n");
    }
    if ((m == 3 && n == 3) || (m == 4 && n == 4)) {
        throw DomainError("(3,3) and (4,4) are excluded from the closed form");
    }
    if (m % 2 == 1) {
        return {add(mul(2, n), 0) - 1, "m odd: 2n-1"};
    }
    const std::uint64_t even_form = add(n - 1, m / 2);
    if (n % 2 == 0) {
        return {even_form, "m, n even: n-1+m/2"};
    }
    if (m == n) {
        throw DomainError("m even and n odd requires m < n");
    }
    const std::uint64_t alt = add(mul(2, m), 0) - 1;
    return {std::max(even_form, alt), "m even, n odd: max(n-1+m/2, 2m-1)"};
}

std::uint64_t cycle_ramsey(std::size_t m, std::size_t n) { return evaluate_cycle_ramsey(m, n).value; }

std::pair<std::uint64_t, std::uint64_t> even_cycle_gr_bounds(std::size_t n, std::size_t k)
{
    if (n < 2) {
        throw DomainError("n must be >= 2");
    }
    if (k < 1) {
        throw DomainError("k must be >= 1");
    }
    const std::uint64_t base = mul(n - 1, k);
    return {add(add(base, n), 1), add(base, mul(3, n))};
}

} // namespace gallai
