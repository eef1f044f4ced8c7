#include "hfkit/mewo.hpp"

#include "hfkit/error.hpp"
#include "hfkit/ordinal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace hfkit {

Mewo Mewo::validate(std::size_t size, Relation lt, std::vector<bool> marked)
{
    if (lt.size() != size || marked.size() != size) {
        throw ValidationError(Axiom::Shape, {size, lt.size(), marked.size()},
                              "mewo of size " + std::to_string(size) + " given a relation of size " +
                                  std::to_string(lt.size()) + " and a marking of size " +
                                  std::to_string(marked.size()));
    }
    if (auto cycle = find_cycle(lt)) {
        std::string s;
        for (auto v : *cycle) s += " " + std::to_string(v);
        throw ValidationError(Axiom::Wellfoundedness, *cycle, "order is not wellfounded: cycle" + s);
    }
    if (auto pair = find_extensionality_violation(lt)) {
        throw ValidationError(Axiom::Extensionality, {pair->first, pair->second},
                              "order is not extensional: " + std::to_string(pair->first) + " and " +
                                  std::to_string(pair->second) + " have the same predecessors");
    }
    return Mewo(std::move(lt), std::move(marked));
}

Mewo Mewo::validate(std::size_t size, std::span<const std::pair<std::size_t, std::size_t>> pairs,
                    std::vector<bool> marked)
{
    return validate(size, Relation::from_pairs(size, pairs), std::move(marked));
}

Closure closure(const Mewo& x)
{
    Closure c{transitive_closure(x.lt()), {}};
    c.star = c.plus;
    for (std::size_t i = 0; i < x.size(); ++i) c.star.set(i, i);
    return c;
}

std::vector<std::size_t> covered_elements(const Mewo& m)
{
    const auto star = closure(m).star;
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < m.size(); ++x) {
        for (std::size_t x0 = 0; x0 < m.size(); ++x0) {
            if (m.marked(x0) && star(x, x0)) {
                out.push_back(x);
                break;
            }
        }
    }
    return out;
}

bool is_covered(const Mewo& x)
{
    return covered_elements(x).size() == x.size();
}

std::vector<std::size_t> segment_plus_elements(const Mewo& m, std::size_t x)
{
    if (x >= m.size()) throw std::out_of_range("element " + std::to_string(x) + " out of range");
    return transitive_closure(m.lt()).predecessors(x);
}

Mewo down_plus(const Mewo& m, std::size_t x)
{
    const auto keep = segment_plus_elements(m, x);
    std::vector<bool> marked;
    for (auto y : keep) marked.push_back(m.less(y, x));
    return Mewo::validate(keep.size(), m.lt().induced(keep), std::move(marked));
}

Mewo mark_all(const Mewo& m)
{
    return Mewo::validate(m.size(), m.lt(), std::vector<bool>(m.size(), true));
}

MewoCode codes(const Mewo& m, SetUniverse& u)
{
    MewoCode code(m.size());
    std::vector<SetHandle> children;
    for (auto x : topological_order(m.lt())) {
        children.clear();
        for (auto y : m.lt().predecessors(x)) children.push_back(code[y]);
        code[x] = u.mk_set(children);
    }
    std::vector<SetHandle> sorted = code;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::logic_error("codes of a validated mewo are not injective");
    return code;
}

namespace {

std::unordered_map<SetHandle, std::size_t> index_by_code(const MewoCode& code)
{
    std::unordered_map<SetHandle, std::size_t> out;
    for (std::size_t i = 0; i < code.size(); ++i) out.emplace(code[i], i);
    return out;
}

} // namespace

std::optional<std::vector<std::size_t>> mewo_isomorphism(const Mewo& x, const Mewo& y, SetUniverse& u)
{
    if (x.size() != y.size()) return std::nullopt;
    const auto cx = codes(x, u);
    const auto by_code = index_by_code(codes(y, u));
    std::vector<std::size_t> map;
    for (std::size_t a = 0; a < x.size(); ++a) {
        auto it = by_code.find(cx[a]);
        if (it == by_code.end() || x.marked(a) != y.marked(it->second)) return std::nullopt;
        map.push_back(it->second);
    }
    return map;
}

bool mewo_equal(const Mewo& x, const Mewo& y, SetUniverse& u)
{
    return mewo_isomorphism(x, y, u).has_value();
}

bool mewo_equal(const Mewo& x, const Mewo& y)
{
    SetUniverse u;
    return mewo_equal(x, y, u);
}

std::optional<MewoSimWitness> simulation_mewo(const Mewo& x, const Mewo& y, SetUniverse& u)
{
    const auto cx = codes(x, u);
    const auto by_code = index_by_code(codes(y, u));
    MewoSimWitness w;
    for (std::size_t a = 0; a < x.size(); ++a) {
        auto it = by_code.find(cx[a]);
        if (it == by_code.end()) return std::nullopt;
        if (x.marked(a) && !y.marked(it->second)) return std::nullopt;
        w.map.push_back(it->second);
        w.image_marked.push_back(y.marked(it->second));
    }
    return w;
}

std::optional<MewoSimWitness> simulation_mewo(const Mewo& x, const Mewo& y)
{
    SetUniverse u;
    return simulation_mewo(x, y, u);
}

std::optional<MewoBoundedSim> bounded_sim_mewo(const Mewo& x, const Mewo& y, SetUniverse& u)
{
    for (std::size_t b = 0; b < y.size(); ++b) {
        if (!y.marked(b)) continue;
        const auto seg = segment_plus_elements(y, b);
        if (seg.size() != x.size()) continue;
        auto iso = mewo_isomorphism(x, down_plus(y, b), u);
        if (!iso) continue;
        MewoBoundedSim w{b, {}};
        for (auto k : *iso) w.equivalence.push_back(seg[k]);
        return w;
    }
    return std::nullopt;
}

std::optional<MewoBoundedSim> bounded_sim_mewo(const Mewo& x, const Mewo& y)
{
    SetUniverse u;
    return bounded_sim_mewo(x, y, u);
}

std::optional<PartialSim> partial_sim(const Mewo& x, const Mewo& y, SetUniverse& u)
{
    const auto cx = codes(x, u);
    const auto by_code = index_by_code(codes(y, u));
    PartialSim p;
    for (std::size_t a = 0; a < x.size(); ++a) {
        if (!x.marked(a)) continue;
        auto it = by_code.find(cx[a]);
        if (it == by_code.end() || !y.marked(it->second)) return std::nullopt;
        p.pairs.emplace_back(a, it->second);
    }
    return p;
}

std::optional<PartialSim> partial_sim(const Mewo& x, const Mewo& y)
{
    SetUniverse u;
    return partial_sim(x, y, u);
}

bool is_mewo_simulation(const Mewo& x, const Mewo& y, std::span<const std::size_t> map)
{
    if (map.size() != x.size()) return false;
    for (auto b : map)
        if (b >= y.size()) return false;
    for (std::size_t a = 0; a < x.size(); ++a)
        if (x.marked(a) && !y.marked(map[a])) return false;
    for (std::size_t a1 = 0; a1 < x.size(); ++a1)
        for (std::size_t a2 = 0; a2 < x.size(); ++a2)
            if (x.less(a1, a2) && !y.less(map[a1], map[a2])) return false;
    for (std::size_t a2 = 0; a2 < x.size(); ++a2) {
        for (std::size_t b = 0; b < y.size(); ++b) {
            if (!y.less(b, map[a2])) continue;
            bool hit = false;
            for (std::size_t a1 = 0; a1 < x.size() && !hit; ++a1) hit = x.less(a1, a2) && map[a1] == b;
            if (!hit) return false;
        }
    }
    return true;
}

Mewo covered_part(const Mewo& m)
{
    const auto keep = covered_elements(m);
    std::vector<bool> marked;
    for (auto x : keep) marked.push_back(m.marked(x));
    return Mewo::validate(keep.size(), m.lt().induced(keep), std::move(marked));
}

bool principality_check(const Mewo& x, const Mewo& y)
{
    SetUniverse u;
    return simulation_mewo(x, y, u).has_value() == partial_sim(x, y, u).has_value();
}

Mewo singleton(const Mewo& m)
{
    const std::size_t n = m.size();
    Relation lt(n + 1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) lt.set(a, b, m.less(a, b));
        lt.set(a, n, m.marked(a));
    }
    std::vector<bool> marked(n + 1, false);
    marked[n] = true;
    return Mewo::validate(n + 1, std::move(lt), std::move(marked));
}

namespace {

struct UnionClasses {
    std::vector<std::pair<std::size_t, std::size_t>> reps;
    std::vector<SetHandle> codes;
    std::vector<bool> marked;
};

UnionClasses union_classes(std::span<const Mewo> family, SetUniverse& u)
{
    UnionClasses c;
    std::unordered_map<SetHandle, std::size_t> seen;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto code = codes(family[i], u);
        for (std::size_t x = 0; x < family[i].size(); ++x) {
            auto [it, fresh] = seen.emplace(code[x], c.reps.size());
            if (fresh) {
                c.reps.emplace_back(i, x);
                c.codes.push_back(code[x]);
                c.marked.push_back(false);
            }
            if (family[i].marked(x)) c.marked[it->second] = true;
        }
    }
    return c;
}

} // namespace

Mewo mewo_union(std::span<const Mewo> family, SetUniverse& u)
{
    auto c = union_classes(family, u);
    const std::size_t n = c.reps.size();
    Relation lt(n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (u.mem(c.codes[p], c.codes[q])) lt.set(p, q);
    return Mewo::validate(n, std::move(lt), std::move(c.marked));
}

Mewo mewo_union(std::span<const Mewo> family)
{
    SetUniverse u;
    return mewo_union(family, u);
}

std::vector<std::pair<std::size_t, std::size_t>> union_representatives(std::span<const Mewo> family,
                                                                       SetUniverse& u)
{
    return union_classes(family, u).reps;
}

Mewo from_ordinal(const FinOrd& a)
{
    return Mewo::validate(a.size(), a.lt(), std::vector<bool>(a.size(), true));
}

Mewo relabel(const Mewo& m, std::span<const std::size_t> perm)
{
    if (perm.size() != m.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> marked;
    for (auto p : perm) marked.push_back(m.marked(p));
    return Mewo::validate(m.size(), m.lt().induced(perm), std::move(marked));
}

} // namespace hfkit
