#pragma once

#include "hfkit/mewo.hpp"
#include "hfkit/ordinal.hpp"
#include "hfkit/universe.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hfkit {

/// Φ on ordinals: the set of images of all initial segments, i.e. the
/// von Neumann numeral of the ordinal's order type.
SetHandle phi_ord(const FinOrd& alpha, SetUniverse& u);

/// Rank ordinal, sup over members m of (psi_ord(m) + 1), built with sum and
/// sup. Total on all sets; its order type is rank_nat(h).
FinOrd psi_ord(const SetUniverse& u, SetHandle h);

/// Presentation indices grouped into classes by the set they denote,
/// ordered by membership.
struct QuotientRank {
    /// classes[k] lists presentation indices, ascending; classes appear in
    /// order of their first index.
    std::vector<std::vector<std::size_t>> classes;
    /// Element k is classes[k]; [a] < [b] iff f(a) ∈ f(b).
    FinOrd order;
};

/// Quotient of a redundant presentation of an st-ordinal `h`. Throws
/// NotAnOrdinalError if `h` is not an st-ordinal and Error if the
/// presentation does not present `h`.
QuotientRank rank_quotient(const SetUniverse& u, SetHandle h, std::span<const SetHandle> presentation);

/// Members of `h` ordered by membership. Throws NotAnOrdinalError.
FinOrd elements_ordinal(const SetUniverse& u, SetHandle h);

/// Φ on mewos: the set of codes of the marked elements.
SetHandle phi_mewo(const Mewo& x, SetUniverse& u);

/// Ψ on sets, direct form: the hereditary members of `h` (canonical order)
/// ordered by membership, marked exactly when they are members of `h`.
Mewo psi_mewo(const SetUniverse& u, SetHandle h);

/// Ψ on sets as a union of singletons of the members' images.
Mewo psi_mewo_literal(SetUniverse& u, SetHandle h);

} // namespace hfkit
