#include "gallai/pattern.hpp"

#include "gallai/error.hpp"

namespace gallai {

std::string_view kind_name(PatternKind kind) noexcept
{
    switch (kind) {
    case PatternKind::StarPlus: return "star-plus";
    case PatternKind::PathPlus: return "path-plus";
    case PatternKind::Cycle: return "cycle";
    case PatternKind::Path: return "path";
    case PatternKind::Star: return "star";
    case PatternKind::Clique: return "clique";
    }
    return "unknown";
}

PatternKind parse_kind(std::string_view name)
{
    for (PatternKind k : {PatternKind::StarPlus, PatternKind::PathPlus, PatternKind::Cycle, PatternKind::Path,
                          PatternKind::Star, PatternKind::Clique}) {
        if (kind_name(k) == name) {
            return k;
        }
    }
    throw DomainError("unknown pattern kind '" + std::string(name) + "'");
}

Pattern::Pattern(PatternKind kind, std::size_t size)
    : kind_(kind), size_(size)
{
    std::size_t minimum = 1;
    switch (kind) {
    case PatternKind::StarPlus:
    case PatternKind::PathPlus:
    case PatternKind::Cycle: minimum = 3; break;
    case PatternKind::Path:
    case PatternKind::Star:
    case PatternKind::Clique: minimum = 1; break;
    }
    if (size < minimum) {
        throw DomainError(std::string(kind_name(kind)) + " requires size >= " + std::to_string(minimum) + ", got " +
                          std::to_string(size));
    }
}

std::vector<std::pair<std::size_t, std::size_t>> Pattern::edges() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    switch (kind_) {
    case PatternKind::StarPlus:
        for (std::size_t i = 1; i < size_; ++i) {
            out.emplace_back(0, i);
        }
        out.emplace_back(1, 2);
        break;
    case PatternKind::PathPlus:
        for (std::size_t i = 0; i + 1 < size_; ++i) {
            out.emplace_back(i, i + 1);
        }
        out.emplace_back(0, 2);
        break;
    case PatternKind::Cycle:
        for (std::size_t i = 0; i + 1 < size_; ++i) {
            out.emplace_back(i, i + 1);
        }
        out.emplace_back(0, size_ - 1);
        break;
    case PatternKind::Path:
        for (std::size_t i = 0; i + 1 < size_; ++i) {
            out.emplace_back(i, i + 1);
        }
        break;
    case PatternKind::Star:
        for (std::size_t i = 1; i < size_; ++i) {
            out.emplace_back(0, i);
        }
        break;
    case PatternKind::Clique:
        for (std::size_t j = 1; j < size_; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                out.emplace_back(i, j);
            }
        }
        break;
    }
    return out;
}

std::string Pattern::to_string() const
{
    return std::string(kind_name(kind_)) + "(" + std::to_string(size_) + ")";
}

} // namespace gallai
