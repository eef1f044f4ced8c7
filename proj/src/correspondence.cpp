#include "hfkit/correspondence.hpp"

#include "hfkit/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace hfkit {

SetHandle phi_ord(const FinOrd& alpha, SetUniverse& u)
{
    // image[a] is Φ(alpha↓a); segments of segments are segments, so each
    // image only needs the images of the elements below a.
    std::vector<SetHandle> image(alpha.size());
    std::vector<SetHandle> children;
    for (auto a : alpha.linearization()) {
        children.clear();
        for (auto b : alpha.lt().predecessors(a)) children.push_back(image[b]);
        image[a] = u.mk_set(children);
    }
    return u.mk_set(image);
}

FinOrd psi_ord(const SetUniverse& u, SetHandle h)
{
    const auto order = canonical_closure(u, h);
    std::unordered_map<SetHandle, FinOrd> rank;
    const FinOrd one = FinOrd::chain(1);
    for (auto s : order) {
        std::vector<FinOrd> family;
        for (auto m : u.elements(s)) family.push_back(sum(rank.at(m), one));
        rank.emplace(s, sup(family));
    }
    return rank.at(h);
}

QuotientRank rank_quotient(const SetUniverse& u, SetHandle h, std::span<const SetHandle> presentation)
{
    u.check(h);
    std::vector<std::uint32_t> presented;
    for (auto p : presentation) {
        u.check(p);
        presented.push_back(p.index);
    }
    std::sort(presented.begin(), presented.end());
    presented.erase(std::unique(presented.begin(), presented.end()), presented.end());
    const auto members = u.member_indices(h);
    if (!std::equal(presented.begin(), presented.end(), members.begin(), members.end()))
        throw Error("presentation does not have the members of the given set as its image");
    if (!u.is_st_ordinal(h)) throw NotAnOrdinalError(format_set(u, h) + " is not a set-theoretic ordinal");

    QuotientRank q;
    std::vector<SetHandle> class_set;
    for (std::size_t a = 0; a < presentation.size(); ++a) {
        auto it = std::find(class_set.begin(), class_set.end(), presentation[a]);
        if (it == class_set.end()) {
            class_set.push_back(presentation[a]);
            q.classes.push_back({a});
        } else {
            q.classes[static_cast<std::size_t>(it - class_set.begin())].push_back(a);
        }
    }
    const std::size_t n = class_set.size();
    Relation lt(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (u.mem(class_set[i], class_set[j])) lt.set(i, j);
    q.order = FinOrd::validate(n, std::move(lt));
    return q;
}

FinOrd elements_ordinal(const SetUniverse& u, SetHandle h)
{
    if (!u.is_st_ordinal(h)) throw NotAnOrdinalError(format_set(u, h) + " is not a set-theoretic ordinal");
    const auto members = u.elements(h);
    Relation lt(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j)
            if (u.mem(members[i], members[j])) lt.set(i, j);
    return FinOrd::validate(members.size(), std::move(lt));
}

SetHandle phi_mewo(const Mewo& x, SetUniverse& u)
{
    const auto code = codes(x, u);
    std::vector<SetHandle> marked;
    for (std::size_t a = 0; a < x.size(); ++a)
        if (x.marked(a)) marked.push_back(code[a]);
    return u.mk_set(marked);
}

Mewo psi_mewo(const SetUniverse& u, SetHandle h)
{
    auto carrier = canonical_closure(u, h);
    carrier.pop_back(); // h itself
    const std::size_t n = carrier.size();
    Relation lt(n);
    std::vector<bool> marked(n);
    for (std::size_t i = 0; i < n; ++i) {
        marked[i] = u.mem(carrier[i], h);
        for (std::size_t j = 0; j < n; ++j)
            if (u.mem(carrier[i], carrier[j])) lt.set(i, j);
    }
    return Mewo::validate(n, std::move(lt), std::move(marked));
}

Mewo psi_mewo_literal(SetUniverse& u, SetHandle h)
{
    const auto order = canonical_closure(u, h);
    std::unordered_map<SetHandle, Mewo> image;
    for (auto s : order) {
        std::vector<Mewo> family;
        for (auto m : u.elements(s)) family.push_back(singleton(image.at(m)));
        image.emplace(s, mewo_union(family, u));
    }
    return image.at(h);
}

} // namespace hfkit
