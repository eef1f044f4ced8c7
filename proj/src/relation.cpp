#include "hfkit/relation.hpp"

#include "hfkit/error.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace hfkit {

Relation Relation::from_pairs(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> pairs)
{
    Relation r(n);
    for (auto [i, j] : pairs) {
        if (i >= n || j >= n) {
            throw ValidationError(Axiom::Shape, {i, j},
                                  "pair " + std::to_string(i) + "<" + std::to_string(j) +
                                      " out of range for size " + std::to_string(n));
        }
        r.set(i, j);
    }
    return r;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if ((*this)(i, j)) out.emplace_back(i, j);
    return out;
}

std::vector<std::size_t> Relation::predecessors(std::size_t j) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
        if ((*this)(i, j)) out.push_back(i);
    return out;
}

Relation Relation::induced(std::span<const std::size_t> keep) const
{
    Relation r(keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b)
            if ((*this)(keep[a], keep[b])) r.set(a, b);
    return r;
}

std::optional<std::vector<std::size_t>> find_cycle(const Relation& r)
{
    const std::size_t n = r.size();
    enum : std::uint8_t { White, Grey, Black };
    std::vector<std::uint8_t> colour(n, White);

    // Iterative DFS along i -> j whenever i < j.
    for (std::size_t start = 0; start < n; ++start) {
        if (colour[start] != White) continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
        colour[start] = Grey;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next == n) {
                colour[v] = Black;
                stack.pop_back();
                continue;
            }
            const std::size_t w = next++;
            if (!r(v, w)) continue;
            if (colour[w] == Grey) {
                std::vector<std::size_t> cycle;
                for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
                    cycle.push_back(it->first);
                    if (it->first == w) break;
                }
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
            if (colour[w] == White) {
                colour[w] = Grey;
                stack.emplace_back(w, 0);
            }
        }
    }
    return std::nullopt;
}

std::vector<std::size_t> topological_order(const Relation& r)
{
    const std::size_t n = r.size();
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (r(i, j)) ++indegree[j];

    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t j = 0; j < n; ++j)
        if (indegree[j] == 0) ready.push(j);

    std::vector<std::size_t> order;
    order.reserve(n);
    while (!ready.empty()) {
        const std::size_t v = ready.top();
        ready.pop();
        order.push_back(v);
        for (std::size_t j = 0; j < n; ++j)
            if (r(v, j) && --indegree[j] == 0) ready.push(j);
    }
    return order;
}

Relation transitive_closure(const Relation& r)
{
    Relation c = r;
    const std::size_t n = r.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (c(i, k))
                for (std::size_t j = 0; j < n; ++j)
                    if (c(k, j)) c.set(i, j);
    return c;
}

std::optional<std::pair<std::size_t, std::size_t>> find_extensionality_violation(const Relation& r)
{
    const std::size_t n = r.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            bool same = true;
            for (std::size_t z = 0; z < n && same; ++z) same = r(z, x) == r(z, y);
            if (same) return std::pair{x, y};
        }
    }
    return std::nullopt;
}

} // namespace hfkit
