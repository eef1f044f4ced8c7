#include "hfkit/pointed_graph.hpp"

#include "hfkit/error.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>

namespace hfkit {

void PointedGraph::validate() const
{
    if (successors.empty()) throw Error("pointed graph has no vertices");
    if (root >= successors.size()) throw Error("root " + std::to_string(root) + " out of range");
    for (std::size_t v = 0; v < successors.size(); ++v)
        for (auto w : successors[v])
            if (w >= successors.size())
                throw Error("edge " + std::to_string(v) + "->" + std::to_string(w) + " out of range");
}

PointedGraph PointedGraph::of_set(const SetUniverse& u, SetHandle h)
{
    const auto order = canonical_closure(u, h);
    std::unordered_map<std::uint32_t, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos.emplace(order[i].index, i);
    PointedGraph g;
    g.successors.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (auto c : u.member_indices(order[i])) g.successors[i].push_back(pos.at(c));
    g.root = order.size() - 1;
    return g;
}

namespace {

constexpr std::uint32_t kUnset = UINT32_MAX;

// Post-order DFS from `start`, interning each vertex once all its successors
// are interned. `state` is 0 (unvisited), 1 (on stack) or 2 (done).
void collapse_from(const std::vector<std::vector<std::size_t>>& succ, std::size_t start, SetUniverse& u,
                   std::vector<std::uint8_t>& state, std::vector<std::uint32_t>& result)
{
    if (state[start] == 2) return;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
    state[start] = 1;
    std::vector<SetHandle> children;
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < succ[v].size()) {
            const std::size_t w = succ[v][next++];
            if (state[w] == 1) {
                std::vector<std::size_t> cycle;
                for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
                    cycle.push_back(it->first);
                    if (it->first == w) break;
                }
                std::reverse(cycle.begin(), cycle.end());
                throw CyclicError(std::move(cycle));
            }
            if (state[w] == 0) {
                state[w] = 1;
                stack.emplace_back(w, 0);
            }
            continue;
        }
        children.clear();
        for (auto w : succ[v]) children.push_back(u.handle(result[w]));
        result[v] = u.mk_set(children).index;
        state[v] = 2;
        stack.pop_back();
    }
}

} // namespace

SetHandle from_graph(const PointedGraph& g, SetUniverse& u)
{
    g.validate();
    std::vector<std::uint8_t> state(g.vertex_count(), 0);
    std::vector<std::uint32_t> result(g.vertex_count(), kUnset);
    collapse_from(g.successors, g.root, u, state, result);
    return u.handle(result[g.root]);
}

std::vector<SetHandle> collapse_all(const std::vector<std::vector<std::size_t>>& successors, SetUniverse& u)
{
    PointedGraph{successors, 0}.validate();
    std::vector<std::uint8_t> state(successors.size(), 0);
    std::vector<std::uint32_t> result(successors.size(), kUnset);
    for (std::size_t v = 0; v < successors.size(); ++v) collapse_from(successors, v, u, state, result);
    std::vector<SetHandle> out;
    out.reserve(result.size());
    for (auto r : result) out.push_back(u.handle(r));
    return out;
}

namespace {

// Kahn's algorithm; on failure, walks successors among the leftover vertices
// until one repeats.
void require_acyclic(const std::vector<std::vector<std::size_t>>& succ)
{
    const std::size_t n = succ.size();
    std::vector<std::size_t> outstanding(n);
    std::vector<std::vector<std::size_t>> preds(n);
    for (std::size_t v = 0; v < n; ++v) {
        outstanding[v] = succ[v].size();
        for (auto w : succ[v]) preds[w].push_back(v);
    }
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (outstanding[v] == 0) ready.push_back(v);
    std::vector<bool> removed(n, false);
    while (!ready.empty()) {
        const auto v = ready.back();
        ready.pop_back();
        removed[v] = true;
        for (auto p : preds[v])
            if (--outstanding[p] == 0) ready.push_back(p);
    }
    auto start = std::find(removed.begin(), removed.end(), false);
    if (start == removed.end()) return;

    std::vector<std::size_t> path;
    std::vector<std::size_t> seen_at(n, n);
    std::size_t v = static_cast<std::size_t>(start - removed.begin());
    while (seen_at[v] == n) {
        seen_at[v] = path.size();
        path.push_back(v);
        for (auto w : succ[v]) {
            if (!removed[w]) {
                v = w;
                break;
            }
        }
    }
    throw CyclicError(std::vector<std::size_t>(path.begin() + static_cast<std::ptrdiff_t>(seen_at[v]), path.end()));
}

struct DisjointUnion {
    std::vector<std::vector<std::size_t>> succ;
    std::size_t root1 = 0;
    std::size_t root2 = 0;
};

DisjointUnion disjoint_union(const PointedGraph& g1, const PointedGraph& g2)
{
    g1.validate();
    g2.validate();
    DisjointUnion d;
    d.succ = g1.successors;
    const std::size_t offset = g1.vertex_count();
    for (const auto& row : g2.successors) {
        auto& out = d.succ.emplace_back();
        for (auto w : row) out.push_back(w + offset);
    }
    d.root1 = g1.root;
    d.root2 = g2.root + offset;
    return d;
}

// Restriction to the vertices reachable from the given roots; returns the
// new index of each root.
std::vector<std::size_t> restrict_reachable(std::vector<std::vector<std::size_t>>& succ,
                                            const std::vector<std::size_t>& roots)
{
    const std::size_t n = succ.size();
    std::vector<std::size_t> index(n, n);
    std::vector<std::size_t> order;
    std::vector<std::size_t> stack(roots.begin(), roots.end());
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        if (index[v] != n) continue;
        index[v] = order.size();
        order.push_back(v);
        for (auto w : succ[v]) stack.push_back(w);
    }
    std::vector<std::vector<std::size_t>> out(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (auto w : succ[order[i]]) out[i].push_back(index[w]);
    succ = std::move(out);
    std::vector<std::size_t> mapped;
    for (auto r : roots) mapped.push_back(index[r]);
    return mapped;
}

} // namespace

Relation greatest_bisimulation(const std::vector<std::vector<std::size_t>>& successors)
{
    PointedGraph{successors, 0}.validate();
    require_acyclic(successors);

    const std::size_t n = successors.size();
    Relation rel(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) rel.set(a, b);

    // Every successor of one side must be matched by some successor of the
    // other side.
    auto forth = [&](std::size_t a, std::size_t b) {
        for (auto x : successors[a]) {
            bool found = false;
            for (auto y : successors[b]) {
                if (rel(x, y)) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
        return true;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (!rel(a, b)) continue;
                if (!forth(a, b) || !forth(b, a)) {
                    rel.set(a, b, false);
                    changed = true;
                }
            }
        }
    }
    return rel;
}

bool bisimilar(const PointedGraph& g1, const PointedGraph& g2)
{
    auto d = disjoint_union(g1, g2);
    const auto roots = restrict_reachable(d.succ, {d.root1, d.root2});
    const auto rel = greatest_bisimulation(d.succ);
    return rel(roots[0], roots[1]);
}

bool mem_raw(const PointedGraph& g1, const PointedGraph& g2)
{
    auto d = disjoint_union(g1, g2);
    const auto roots = restrict_reachable(d.succ, {d.root1, d.root2});
    const auto rel = greatest_bisimulation(d.succ);
    for (auto b : d.succ[roots[1]])
        if (rel(roots[0], b)) return true;
    return false;
}

} // namespace hfkit
