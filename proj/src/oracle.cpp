#include "hfkit/oracle.hpp"

#include "hfkit/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace hfkit::oracle {

namespace {

void require_size(std::size_t n, std::size_t limit, const char* what)
{
    if (n > limit)
        throw LimitError(std::string(what) + " size " + std::to_string(n) + " exceeds the limit of " +
                         std::to_string(limit));
}

// Calls visit(map) for every map {0..n-1} -> {0..m-1}.
template <typename Visit>
void for_each_map(std::size_t n, std::size_t m, Visit&& visit)
{
    std::vector<std::size_t> map(n, 0);
    if (n > 0 && m == 0) return;
    while (true) {
        visit(map);
        std::size_t k = 0;
        while (k < n && ++map[k] == m) map[k++] = 0;
        if (k == n) return;
    }
}

template <typename Less>
bool monotone(std::size_t n, const std::vector<std::size_t>& f, Less&& lx, auto&& ly)
{
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (lx(a, b) && !ly(f[a], f[b])) return false;
    return true;
}

template <typename Less>
bool initial_segment_property(std::size_t n, std::size_t m, const std::vector<std::size_t>& f, Less&& lx, auto&& ly)
{
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
            if (!ly(y, f[x])) continue;
            bool found = false;
            for (std::size_t x1 = 0; x1 < n && !found; ++x1) found = lx(x1, x) && f[x1] == y;
            if (!found) return false;
        }
    }
    return true;
}

// Elements transitively below `top`, by depth-first search along the order.
std::vector<std::size_t> below_transitively(const Relation& lt, std::size_t top)
{
    std::vector<bool> seen(lt.size(), false);
    std::vector<std::size_t> stack{top};
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < lt.size(); ++w) {
            if (lt(w, v) && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < lt.size(); ++w)
        if (seen[w]) out.push_back(w);
    return out;
}

// Calls visit(perm) for every bijection {0..n-1} -> targets.
template <typename Visit>
void for_each_bijection(std::vector<std::size_t> targets, Visit&& visit)
{
    std::sort(targets.begin(), targets.end());
    do {
        visit(targets);
    } while (std::next_permutation(targets.begin(), targets.end()));
}

bool acyclic(std::size_t n, const std::vector<bool>& edge)
{
    std::vector<bool> removed(n, false);
    for (std::size_t round = 0; round < n; ++round) {
        bool progress = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (removed[v]) continue;
            bool source = true;
            for (std::size_t u = 0; u < n && source; ++u) source = removed[u] || !edge[u * n + v];
            if (source) {
                removed[v] = true;
                progress = true;
            }
        }
        if (!progress) break;
    }
    return std::all_of(removed.begin(), removed.end(), [](bool b) { return b; });
}

bool extensional(std::size_t n, const std::vector<bool>& edge)
{
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            bool differ = false;
            for (std::size_t z = 0; z < n && !differ; ++z) differ = edge[z * n + x] != edge[z * n + y];
            if (!differ) return false;
        }
    }
    return true;
}

} // namespace

std::vector<std::vector<std::size_t>> enum_simulations(const FinOrd& alpha, const FinOrd& beta)
{
    require_size(std::max(alpha.size(), beta.size()), max_enum_size, "ordinal");
    auto la = [&](std::size_t a, std::size_t b) { return alpha.less(a, b); };
    auto lb = [&](std::size_t a, std::size_t b) { return beta.less(a, b); };
    std::vector<std::vector<std::size_t>> out;
    for_each_map(alpha.size(), beta.size(), [&](const std::vector<std::size_t>& f) {
        if (monotone(alpha.size(), f, la, lb) && initial_segment_property(alpha.size(), beta.size(), f, la, lb))
            out.push_back(f);
    });
    return out;
}

std::vector<std::vector<std::size_t>> enum_simulations(const Mewo& x, const Mewo& y)
{
    require_size(std::max(x.size(), y.size()), max_enum_size, "mewo");
    auto lx = [&](std::size_t a, std::size_t b) { return x.less(a, b); };
    auto ly = [&](std::size_t a, std::size_t b) { return y.less(a, b); };
    std::vector<std::vector<std::size_t>> out;
    for_each_map(x.size(), y.size(), [&](const std::vector<std::size_t>& f) {
        for (std::size_t a = 0; a < x.size(); ++a)
            if (x.marked(a) && !y.marked(f[a])) return;
        if (monotone(x.size(), f, lx, ly) && initial_segment_property(x.size(), y.size(), f, lx, ly))
            out.push_back(f);
    });
    return out;
}

std::vector<std::pair<std::size_t, std::vector<std::size_t>>> enum_bounded_sims(const FinOrd& alpha,
                                                                                 const FinOrd& beta)
{
    require_size(std::max(alpha.size(), beta.size()), max_enum_size, "ordinal");
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> out;
    for (std::size_t b = 0; b < beta.size(); ++b) {
        std::vector<std::size_t> below;
        for (std::size_t y = 0; y < beta.size(); ++y)
            if (beta.less(y, b)) below.push_back(y);
        if (below.size() != alpha.size()) continue;
        for_each_bijection(below, [&](const std::vector<std::size_t>& e) {
            for (std::size_t p = 0; p < alpha.size(); ++p)
                for (std::size_t q = 0; q < alpha.size(); ++q)
                    if (alpha.less(p, q) != beta.less(e[p], e[q])) return;
            out.emplace_back(b, e);
        });
    }
    return out;
}

std::vector<std::pair<std::size_t, std::vector<std::size_t>>> enum_bounded_sims(const Mewo& x, const Mewo& y)
{
    require_size(std::max(x.size(), y.size()), max_enum_size, "mewo");
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> out;
    for (std::size_t top = 0; top < y.size(); ++top) {
        if (!y.marked(top)) continue;
        const auto below = below_transitively(y.lt(), top);
        if (below.size() != x.size()) continue;
        for_each_bijection(below, [&](const std::vector<std::size_t>& e) {
            for (std::size_t p = 0; p < x.size(); ++p) {
                if (x.marked(p) != y.less(e[p], top)) return;
                for (std::size_t q = 0; q < x.size(); ++q)
                    if (x.less(p, q) != y.less(e[p], e[q])) return;
            }
            out.emplace_back(top, e);
        });
    }
    return out;
}

std::vector<std::vector<std::size_t>> enum_isomorphisms(const Mewo& x, const Mewo& y)
{
    std::vector<std::vector<std::size_t>> out;
    if (x.size() != y.size()) return out;
    require_size(x.size(), 8, "mewo");
    std::vector<std::size_t> all(y.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    for_each_bijection(all, [&](const std::vector<std::size_t>& e) {
        for (std::size_t p = 0; p < x.size(); ++p) {
            if (x.marked(p) != y.marked(e[p])) return;
            for (std::size_t q = 0; q < x.size(); ++q)
                if (x.less(p, q) != y.less(e[p], e[q])) return;
        }
        out.push_back(e);
    });
    return out;
}

bool isomorphic(const Mewo& x, const Mewo& y)
{
    return !enum_isomorphisms(x, y).empty();
}

std::vector<SetHandle> enumerate_v(std::size_t level, SetUniverse& u)
{
    require_size(level, 5, "cumulative stage");
    std::vector<SetHandle> stage;
    for (std::size_t k = 0; k < level; ++k) {
        const std::size_t n = stage.size();
        std::vector<SetHandle> next;
        next.reserve(std::size_t{1} << n);
        std::vector<SetHandle> subset;
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            subset.clear();
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) subset.push_back(stage[i]);
            next.push_back(u.mk_set(subset));
        }
        stage = std::move(next);
    }
    return stage;
}

std::vector<Mewo> enumerate_mewos(std::size_t size)
{
    require_size(size, 4, "mewo enumeration");
    const std::size_t n = size;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) slots.emplace_back(i, j);

    std::vector<std::vector<std::size_t>> perms;
    {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), std::size_t{0});
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }

    // Canonical key: the least encoding over all relabellings.
    auto encode = [&](const std::vector<bool>& edge, std::size_t marking, const std::vector<std::size_t>& p) {
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (edge[i * n + j]) key |= std::uint64_t{1} << (p[i] * n + p[j]);
        std::uint64_t mark = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (marking >> i & 1) mark |= std::uint64_t{1} << p[i];
        return (key << n) | mark;
    };

    std::map<std::uint64_t, bool> seen;
    std::vector<Mewo> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
        std::vector<bool> edge(n * n, false);
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (mask >> k & 1) edge[slots[k].first * n + slots[k].second] = true;
        if (!acyclic(n, edge) || !extensional(n, edge)) continue;
        for (std::size_t marking = 0; marking < (std::size_t{1} << n); ++marking) {
            std::uint64_t best = UINT64_MAX;
            for (const auto& p : perms) best = std::min(best, encode(edge, marking, p));
            if (!seen.emplace(best, true).second) continue;
            Relation lt(n);
            std::vector<bool> marked(n);
            for (std::size_t i = 0; i < n; ++i) {
                marked[i] = (marking >> i & 1) != 0;
                for (std::size_t j = 0; j < n; ++j) lt.set(i, j, edge[i * n + j]);
            }
            out.push_back(Mewo::validate(n, std::move(lt), std::move(marked)));
        }
    }
    return out;
}

std::vector<Mewo> enumerate_mewos_up_to(std::size_t max_size)
{
    std::vector<Mewo> out;
    for (std::size_t n = 0; n <= max_size; ++n) {
        auto level = enumerate_mewos(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<FinOrd> enumerate_ordinals(std::size_t size)
{
    require_size(size, 8, "ordinal enumeration");
    std::vector<std::size_t> p(size);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::vector<FinOrd> out;
    do {
        Relation lt(size);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = i + 1; j < size; ++j) lt.set(p[i], p[j]);
        out.push_back(FinOrd::validate(size, std::move(lt)));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<std::vector<std::vector<std::size_t>>> enumerate_dags(std::size_t size)
{
    require_size(size, 6, "graph enumeration");
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < i; ++j) slots.emplace_back(i, j);
    std::vector<std::vector<std::vector<std::size_t>>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
        std::vector<std::vector<std::size_t>> succ(size);
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (mask >> k & 1) succ[slots[k].first].push_back(slots[k].second);
        out.push_back(std::move(succ));
    }
    return out;
}

std::vector<std::size_t> Rng::permutation(std::size_t n)
{
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
    return p;
}

SetHandle RandomSets::draw(std::size_t depth)
{
    if (depth == 0) return u_.empty_set();
    const std::size_t width = rng_.below(cfg_.max_width + 1);
    std::vector<SetHandle> children;
    for (std::size_t k = 0; k < width; ++k) children.push_back(draw(rng_.below(depth)));
    return u_.mk_set(children);
}

SetHandle RandomSets::next()
{
    return draw(cfg_.max_depth);
}

std::vector<SetHandle> gen_random_sets(const GenConfig& cfg, SetUniverse& u)
{
    RandomSets gen(cfg, u);
    std::vector<SetHandle> out;
    for (std::size_t k = 0; k < cfg.count; ++k) out.push_back(gen.next());
    return out;
}

Mewo RandomMewos::draw()
{
    const std::size_t n = rng_.below(cfg_.max_width + 1);
    const auto order = rng_.permutation(n);
    std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng_.chance(1, 2)) edge[order[i]][order[j]] = true;

    // Merge vertices with equal predecessor sets until the order is
    // extensional; merging keeps the relation acyclic.
    std::vector<bool> alive(n, true);
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t x = 0; x < n && !merged; ++x) {
            if (!alive[x]) continue;
            for (std::size_t y = x + 1; y < n && !merged; ++y) {
                if (!alive[y]) continue;
                bool same = true;
                for (std::size_t z = 0; z < n && same; ++z) same = !alive[z] || edge[z][x] == edge[z][y];
                if (!same) continue;
                for (std::size_t z = 0; z < n; ++z) {
                    if (edge[y][z]) edge[x][z] = true;
                    edge[y][z] = edge[z][y] = false;
                }
                alive[y] = false;
                merged = true;
            }
        }
    }
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < n; ++v)
        if (alive[v]) keep.push_back(v);
    const auto labels = rng_.permutation(keep.size());
    Relation lt(keep.size());
    std::vector<bool> marked(keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a) {
        marked[a] = rng_.chance(1, 2);
        for (std::size_t b = 0; b < keep.size(); ++b) lt.set(a, b, edge[keep[labels[a]]][keep[labels[b]]]);
    }
    return Mewo::validate(keep.size(), std::move(lt), std::move(marked));
}

Mewo RandomMewos::next()
{
    while (true) {
        Mewo m = draw();
        if (!covered_only_ || is_covered(m)) return m;
    }
}

std::vector<Mewo> gen_random_mewos(const GenConfig& cfg, bool covered_only)
{
    RandomMewos gen(cfg, covered_only);
    std::vector<Mewo> out;
    for (std::size_t k = 0; k < cfg.count; ++k) out.push_back(gen.next());
    return out;
}

namespace {

PointedGraph shuffled(Rng& rng, const PointedGraph& g)
{
    const auto p = rng.permutation(g.vertex_count()); // old vertex v becomes p[v]
    PointedGraph out;
    out.successors.resize(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        auto& row = out.successors[p[v]];
        for (auto w : g.successors[v]) row.push_back(p[w]);
        for (std::size_t i = row.size(); i > 1; --i) std::swap(row[i - 1], row[rng.below(i)]);
    }
    out.root = p[g.root];
    return out;
}

} // namespace

PointedGraph random_graph(Rng& rng, std::size_t max_vertices)
{
    const std::size_t n = 1 + rng.below(max_vertices);
    PointedGraph g;
    g.successors.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (rng.chance(1, 3)) g.successors[i].push_back(j);
    g.root = rng.below(n);
    return shuffled(rng, g);
}

PointedGraph redundant_copy(Rng& rng, const PointedGraph& g)
{
    PointedGraph out = g;
    const std::size_t extra = rng.below(4);
    for (std::size_t k = 0; k < extra; ++k) {
        const std::size_t v = rng.below(out.vertex_count());
        const std::size_t copy = out.vertex_count();
        out.successors.push_back(out.successors[v]);
        // Point some references to v at the copy instead.
        for (auto& row : out.successors)
            for (auto& w : row)
                if (w == v && rng.chance(1, 2)) w = copy;
    }
    for (auto& row : out.successors)
        if (!row.empty() && rng.chance(1, 3)) row.push_back(row[rng.below(row.size())]);
    return shuffled(rng, out);
}

std::pair<SetHandle, std::vector<SetHandle>> random_presentation(Rng& rng, SetUniverse& u, std::size_t max_width,
                                                                 std::size_t max_depth)
{
    const std::size_t n = rng.below(max_depth + 1);
    std::vector<SetHandle> list;
    for (std::size_t k = 0; k < n; ++k) list.push_back(u.von_neumann(k));
    if (n > 0) {
        const std::size_t target = std::max(n, rng.below(max_width + 1));
        while (list.size() < target) list.push_back(u.von_neumann(rng.below(n)));
    }
    for (std::size_t i = list.size(); i > 1; --i) std::swap(list[i - 1], list[rng.below(i)]);
    return {u.von_neumann(n), list};
}

std::vector<std::vector<std::size_t>> random_layered_dag(Rng& rng, std::size_t vertices, std::size_t max_out)
{
    std::vector<std::vector<std::size_t>> succ(vertices);
    for (std::size_t i = 1; i < vertices; ++i) {
        const std::size_t k = rng.below(max_out + 1);
        for (std::size_t e = 0; e < k; ++e) {
            // Mix short and long edges so the graph is both deep and wide.
            const std::size_t span = rng.chance(1, 2) ? std::min<std::size_t>(i, 8) : i;
            succ[i].push_back(i - 1 - rng.below(span));
        }
    }
    return succ;
}

} // namespace hfkit::oracle
