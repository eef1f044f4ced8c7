#pragma once

#include "hfkit/lexer.hpp"
#include "hfkit/relation.hpp"
#include "hfkit/universe.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hfkit {

class FinOrd;

/// Marked extensional wellfounded order. The order need not be transitive;
/// the marking is an arbitrary subset of the carrier.
class Mewo {
public:
    /// The empty mewo.
    Mewo() = default;

    /// Checks shape, wellfoundedness and extensionality, in that order.
    /// Throws ValidationError with a witness on the first failure.
    static Mewo validate(std::size_t size, Relation lt, std::vector<bool> marked);
    static Mewo validate(std::size_t size, std::span<const std::pair<std::size_t, std::size_t>> pairs,
                         std::vector<bool> marked);

    std::size_t size() const noexcept { return lt_.size(); }
    const Relation& lt() const noexcept { return lt_; }
    bool less(std::size_t a, std::size_t b) const noexcept { return lt_(a, b); }
    bool marked(std::size_t a) const { return marked_.at(a); }
    const std::vector<bool>& marking() const noexcept { return marked_; }

    /// Structural equality (same labels); see mewo_equal for isomorphism.
    friend bool operator==(const Mewo&, const Mewo&) = default;

private:
    Mewo(Relation lt, std::vector<bool> marked) : lt_(std::move(lt)), marked_(std::move(marked)) {}

    Relation lt_;
    std::vector<bool> marked_;
};

inline Mewo validate_mewo(std::size_t size, Relation lt, std::vector<bool> marked)
{
    return Mewo::validate(size, std::move(lt), std::move(marked));
}

struct Closure {
    Relation plus; ///< transitive closure
    Relation star; ///< reflexive-transitive closure
};

Closure closure(const Mewo& x);

/// Every element lies reflexive-transitively below a marked one.
bool is_covered(const Mewo& x);

/// Elements strictly below `x` in the transitive closure, ascending.
std::vector<std::size_t> segment_plus_elements(const Mewo& m, std::size_t x);

/// Initial segment of everything transitively below `x`; its marked
/// elements are the immediate predecessors of `x`. Throws std::out_of_range.
Mewo down_plus(const Mewo& m, std::size_t x);

Mewo mark_all(const Mewo& m);

/// Mostowski code of each element: code(x) = { code(y) : y < x }.
using MewoCode = std::vector<SetHandle>;

MewoCode codes(const Mewo& m, SetUniverse& u);

/// Isomorphism preserving and reflecting order and marking, decided by
/// matching codes. The overload without a universe uses a private one.
bool mewo_equal(const Mewo& x, const Mewo& y, SetUniverse& u);
bool mewo_equal(const Mewo& x, const Mewo& y);

/// The code-matching isomorphism x -> y, if mewo_equal holds.
std::optional<std::vector<std::size_t>> mewo_isomorphism(const Mewo& x, const Mewo& y, SetUniverse& u);

struct MewoSimWitness {
    std::vector<std::size_t> map;
    /// image_marked[x] is whether map[x] is marked in the codomain; it holds
    /// at least wherever x is marked.
    std::vector<bool> image_marked;
    friend bool operator==(const MewoSimWitness&, const MewoSimWitness&) = default;
};

struct MewoBoundedSim {
    std::size_t bound = 0; ///< marked element of the codomain
    /// equivalence[x] is the codomain element (inside the segment below
    /// `bound`) matched with x.
    std::vector<std::size_t> equivalence;
    friend bool operator==(const MewoBoundedSim&, const MewoBoundedSim&) = default;
};

/// Pairs (x, y) of marked elements with equal segments, ordered by x.
struct PartialSim {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    friend bool operator==(const PartialSim&, const PartialSim&) = default;
};

std::optional<MewoSimWitness> simulation_mewo(const Mewo& x, const Mewo& y, SetUniverse& u);
std::optional<MewoSimWitness> simulation_mewo(const Mewo& x, const Mewo& y);

std::optional<MewoBoundedSim> bounded_sim_mewo(const Mewo& x, const Mewo& y, SetUniverse& u);
std::optional<MewoBoundedSim> bounded_sim_mewo(const Mewo& x, const Mewo& y);

std::optional<PartialSim> partial_sim(const Mewo& x, const Mewo& y, SetUniverse& u);
std::optional<PartialSim> partial_sim(const Mewo& x, const Mewo& y);

/// Whether `map` preserves marking, is monotone and has the initial segment
/// property, checked clause by clause.
bool is_mewo_simulation(const Mewo& x, const Mewo& y, std::span<const std::size_t> map);

/// Restriction to the covered elements, order and marking inherited.
Mewo covered_part(const Mewo& m);
/// Indices of covered elements, ascending.
std::vector<std::size_t> covered_elements(const Mewo& m);

/// Simulation x -> y exists iff a partial simulation x -> y exists.
bool principality_check(const Mewo& x, const Mewo& y);

/// Carrier x + 1: x's elements keep their indices and the new top element
/// (index size(x)) sits above exactly the marked elements, and is the only
/// marked element. Throws ValidationError when the result is not extensional.
Mewo singleton(const Mewo& m);

/// Union of a family: one element per distinct code, ordered by code
/// membership, marked when some representative is marked. Elements appear in
/// order of their least representative (member, element).
Mewo mewo_union(std::span<const Mewo> family, SetUniverse& u);
Mewo mewo_union(std::span<const Mewo> family);

/// Least representative (member, element) of each element of the union.
std::vector<std::pair<std::size_t, std::size_t>> union_representatives(std::span<const Mewo> family,
                                                                       SetUniverse& u);

/// Same carrier and order, everything marked.
Mewo from_ordinal(const FinOrd& a);

/// Relabels m so that element k of the result is perm[k] of m.
Mewo relabel(const Mewo& m, std::span<const std::size_t> perm);

/// `mewo { elems: e0 e1; lt: e0<e1; marked: e1 }`. Edges are printed in
/// lexicographic order of indices.
std::string to_text(const Mewo& m);
/// `{"size":n,"lt":[[i,j],...],"marked":[i,...]}`.
std::string to_json(const Mewo& m);
/// Graphviz digraph; edges point from smaller to larger element and marked
/// elements are filled.
std::string to_dot(const Mewo& m);

Mewo parse_mewo(Lexer& lex);
Mewo parse_mewo_text(const std::string& text);
Mewo mewo_from_json(const std::string& text);

} // namespace hfkit
