#include "gallai/constructions.hpp"

#include "gallai/error.hpp"
#include "gallai/rng.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace gallai {

namespace {

void require_distinct(Color a, Color b, const char* what)
{
    if (a == b) {
        throw DomainError(std::string(what) + " requires two distinct colors");
    }
    if (a == kNoColor || b == kNoColor) {
        throw DomainError(std::string(what) + " colors are 1-based");
    }
}

// Pentagon quotient color between copies i and j, i != j.
Color pentagon_color(std::size_t i, std::size_t j, Color c_a, Color c_b)
{
    const std::size_t d = (j + 5 - i) % 5;
    return (d == 1 || d == 4) ? c_a : c_b;
}

template <typename... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

} // namespace

ConstructionRecipe::ConstructionRecipe(Node node)
    : node_(std::move(node))
{
    std::visit(Overloaded{
                   [](const Uniform& u) {
                       if (u.n == 0 || u.c == kNoColor) {
                           throw DomainError("uniform recipe needs n >= 1 and a 1-based color");
                       }
                   },
                   [](const TwoClique& tc) {
                       if (tc.t < 3) {
                           throw DomainError("two-clique recipe needs t >= 3");
                       }
                       require_distinct(tc.c_in, tc.c_between, "two-clique recipe");
                   },
                   [](const Pentagon& p) { require_distinct(p.c_a, p.c_b, "pentagon recipe"); },
                   [](const BlowUp5& b) {
                       if (!b.child) {
                           throw DomainError("blow-up recipe needs a child");
                       }
                       require_distinct(b.c_a, b.c_b, "blow-up recipe");
                   },
               },
               node_);
}

std::string ConstructionRecipe::to_string() const
{
    auto num = [](std::size_t x) { return std::to_string(x); };
    return std::visit(Overloaded{
                          [&](const Uniform& u) { return "uniform(" + num(u.n) + "," + num(u.c) + ")"; },
                          [&](const TwoClique& tc) {
                              return "two_clique(" + num(tc.t) + "," + num(tc.c_in) + "," + num(tc.c_between) + ")";
                          },
                          [&](const Pentagon& p) { return "pentagon(" + num(p.c_a) + "," + num(p.c_b) + ")"; },
                          [&](const BlowUp5& b) {
                              return "blowup5(" + b.child->to_string() + "," + num(b.c_a) + "," + num(b.c_b) + ")";
                          },
                      },
                      node_);
}

ColoredCompleteGraph ConstructionRecipe::build() const
{
    return std::visit(Overloaded{
                          [](const Uniform& u) { return new_uniform(u.n, u.c, u.c); },
                          [](const TwoClique& tc) { return two_clique_example(tc.t, tc.c_in, tc.c_between); },
                          [](const Pentagon& p) { return pentagon_k5(p.c_a, p.c_b); },
                          [](const BlowUp5& b) { return blow_up_5(b.child->build(), b.c_a, b.c_b); },
                      },
                      node_);
}

ColoredCompleteGraph two_clique_example(std::size_t t, Color c_in, Color c_between)
{
    if (t < 3) {
        throw DomainError("two_clique_example requires t >= 3");
    }
    require_distinct(c_in, c_between, "two_clique_example");
    const std::size_t half = t - 1;
    ColoredCompleteGraph::Builder b(2 * half, std::max(c_in, c_between));
    for (Vertex v = 1; v < 2 * half; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            b.set(u, v, (u < half) == (v < half) ? c_in : c_between);
        }
    }
    return std::move(b).build();
}

ColoredCompleteGraph pentagon_k5(Color c_a, Color c_b)
{
    require_distinct(c_a, c_b, "pentagon_k5");
    ColoredCompleteGraph::Builder b(5, std::max(c_a, c_b));
    for (Vertex v = 1; v < 5; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            b.set(u, v, pentagon_color(u, v, c_a, c_b));
        }
    }
    return std::move(b).build();
}

ColoredCompleteGraph blow_up_5(const ColoredCompleteGraph& g, Color c_a, Color c_b)
{
    require_distinct(c_a, c_b, "blow_up_5");
    const std::size_t m = g.order();
    if (5 * m > kMaxOrder) {
        throw DomainError("blow-up order " + std::to_string(5 * m) + " exceeds the supported maximum");
    }
    const std::size_t k = std::max<std::size_t>({g.colors(), c_a, c_b});
    ColoredCompleteGraph::Builder b(5 * m, k);
    for (Vertex v = 1; v < 5 * m; ++v) {
        const std::size_t cv = v / m;
        for (Vertex u = 0; u < v; ++u) {
            const std::size_t cu = u / m;
            const Color c = cu == cv ? g.at(static_cast<Vertex>(u % m), static_cast<Vertex>(v % m))
                                     : pentagon_color(cu, cv, c_a, c_b);
            b.set(u, v, c);
        }
    }
    return std::move(b).build();
}

ConstructionRecipe lower_bound_recipe(std::size_t t, std::size_t k)
{
    if (t < 4) {
        throw DomainError("lower_bound_construction requires t >= 4 (t = 3 conflicts with R(K3,K3) = 6)");
    }
    if (k < 1) {
        throw DomainError("lower_bound_construction requires k >= 1");
    }
    if (k > kMaxColors) {
        throw DomainError("too many colors");
    }
    std::size_t order = 0;
    std::size_t first_fresh = 0;
    std::shared_ptr<const ConstructionRecipe> recipe;
    if (k % 2 == 1) {
        recipe = std::make_shared<ConstructionRecipe>(ConstructionRecipe::Uniform{t - 1, 1});
        order = t - 1;
        first_fresh = 2;
    } else {
        recipe = std::make_shared<ConstructionRecipe>(ConstructionRecipe::TwoClique{t, 1, 2});
        order = 2 * (t - 1);
        first_fresh = 3;
    }
    for (std::size_t c = first_fresh; c + 1 <= k; c += 2) {
        order *= 5;
        if (order > kMaxOrder) {
            throw DomainError("construction order exceeds the supported maximum");
        }
        recipe = std::make_shared<ConstructionRecipe>(
            ConstructionRecipe::BlowUp5{recipe, static_cast<Color>(c), static_cast<Color>(c + 1)});
    }
    return *recipe;
}

ColoredCompleteGraph lower_bound_construction(std::size_t t, std::size_t k)
{
    return lower_bound_recipe(t, k).build();
}

ColoredCompleteGraph random_gallai(std::size_t n, std::size_t k, std::uint64_t seed)
{
    if (n == 0 || k == 0) {
        throw DomainError("random_gallai requires n >= 1 and k >= 1");
    }
    Rng rng(seed);
    ColoredCompleteGraph::Builder b(n, k);

    struct Block {
        Vertex first;
        std::size_t size;
    };
    std::vector<Block> work{{0, n}};
    while (!work.empty()) {
        const Block block = work.back();
        work.pop_back();
        if (block.size == 1) {
            continue;
        }
        const std::size_t parts = rng.between(2, std::min<std::size_t>(8, block.size));

        // Stars and bars: parts-1 distinct cut points in 1..size-1 (Floyd sampling).
        std::vector<std::size_t> cuts;
        for (std::size_t j = block.size - parts; j < block.size - 1; ++j) {
            const std::size_t r = 1 + rng.below(j + 1);
            cuts.push_back(std::find(cuts.begin(), cuts.end(), r) == cuts.end() ? r : j + 1);
        }
        std::sort(cuts.begin(), cuts.end());
        std::vector<std::size_t> bounds{0};
        bounds.insert(bounds.end(), cuts.begin(), cuts.end());
        bounds.push_back(block.size);

        const auto a = static_cast<Color>(1 + rng.below(k));
        Color c2 = a;
        if (k > 1) {
            c2 = static_cast<Color>(1 + rng.below(k - 1));
            if (c2 >= a) {
                ++c2;
            }
        }

        for (std::size_t p = 0; p < parts; ++p) {
            for (std::size_t q = p + 1; q < parts; ++q) {
                const Color c = rng.below(2) == 0 ? a : c2;
                for (std::size_t x = bounds[p]; x < bounds[p + 1]; ++x) {
                    for (std::size_t y = bounds[q]; y < bounds[q + 1]; ++y) {
                        b.set(static_cast<Vertex>(block.first + x), static_cast<Vertex>(block.first + y), c);
                    }
                }
            }
        }
        for (std::size_t p = parts; p-- > 0;) {
            work.push_back({static_cast<Vertex>(block.first + bounds[p]), bounds[p + 1] - bounds[p]});
        }
    }

    // Fisher-Yates relabeling so parts are not contiguous ranges.
    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), Vertex{0});
    for (std::size_t i = n; i > 1; --i) {
        std::swap(label[i - 1], label[rng.below(i)]);
    }
    ColoredCompleteGraph::Builder out(n, k);
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            out.set(label[u], label[v], b.get(u, v));
        }
    }
    return std::move(out).build();
}

ColoredCompleteGraph random_coloring(std::size_t n, std::size_t k, std::uint64_t seed)
{
    Rng rng(seed);
    ColoredCompleteGraph::Builder b(n, k);
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            b.set(u, v, static_cast<Color>(1 + rng.below(k)));
        }
    }
    return std::move(b).build();
}

} // namespace gallai
