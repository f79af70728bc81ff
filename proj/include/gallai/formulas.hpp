#pragma once

#include "gallai/pattern.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace gallai {

/// A closed-form value and a human-readable note of which branch produced it.
struct FormulaValue {
    std::uint64_t value;
    std::string branch;
};

/// Gallai-Ramsey query gr_k(K3 : family_t). family is StarPlus or PathPlus.
struct GrQuery {
    PatternKind family;
    std::size_t t;
    std::size_t k;
};

/// Even k: 2(t-1)*5^((k-2)/2) + 1.  Odd k: (t-1)*5^((k-1)/2) + 1.
/// Throws DomainError for t < 4, k < 1 or a family other than StarPlus/PathPlus,
/// and OverflowError when the value does not fit in 64 bits.
FormulaValue evaluate_gr(const GrQuery& q);
std::uint64_t gr_value(const GrQuery& q);

/// Two-color Ramsey number 2*max(s, t) - 1 for s, t >= 4.
FormulaValue evaluate_ramsey(PatternKind family, std::size_t s, std::size_t t);
std::uint64_t ramsey_value(PatternKind family, std::size_t s, std::size_t t);

/// R(C_m, C_n) for 3 <= m <= n, excluding (3,3) and (4,4); m even with n odd
/// needs m < n.
FormulaValue evaluate_cycle_ramsey(std::size_t m, std::size_t n);
std::uint64_t cycle_ramsey(std::size_t m, std::size_t n);

/// ((n-1)k + n + 1, (n-1)k + 3n): bounds on gr_k(K3 : C_2n) for n >= 2, k >= 1.
std::pair<std::uint64_t, std::uint64_t> even_cycle_gr_bounds(std::size_t n, std::size_t k);

} // namespace gallai
