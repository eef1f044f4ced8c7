#pragma once

#include "hfkit/lexer.hpp"
#include "hfkit/relation.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hfkit {

/// Finite type-theoretic ordinal: a carrier {0..n-1} with a strict order that
/// is wellfounded, extensional and transitive. Instances are only produced
/// by validation, so every FinOrd satisfies those axioms (and is linear).
class FinOrd {
public:
    /// The empty ordinal.
    FinOrd() = default;

    /// Validates `lt` against the ordinal axioms, checked in the order
    /// shape, wellfoundedness, extensionality, transitivity.
    /// Throws ValidationError naming the first failing axiom with a witness.
    static FinOrd validate(std::size_t size, Relation lt);
    static FinOrd validate(std::size_t size, std::span<const std::pair<std::size_t, std::size_t>> pairs);

    /// The n-chain 0 < 1 < ... < n-1.
    static FinOrd chain(std::size_t n);

    std::size_t size() const noexcept { return lt_.size(); }
    const Relation& lt() const noexcept { return lt_; }
    bool less(std::size_t a, std::size_t b) const noexcept { return lt_(a, b); }

    /// Number of elements below `a`, i.e. its place in the linear order.
    std::size_t position(std::size_t a) const;

    /// Elements listed from least to greatest.
    std::vector<std::size_t> linearization() const;

    /// Structural equality: same carrier size and identical matrices.
    friend bool operator==(const FinOrd&, const FinOrd&) = default;

private:
    explicit FinOrd(Relation lt) : lt_(std::move(lt)) {}

    Relation lt_;
};

inline FinOrd validate_ord(std::size_t size, Relation lt) { return FinOrd::validate(size, std::move(lt)); }

/// Relabeling of `a` along its linearization; equal to the chain of its size.
FinOrd canonical_form(const FinOrd& a);

/// Isomorphism, decided by comparing canonical forms.
bool equivalent(const FinOrd& a, const FinOrd& b);

/// Elements strictly below `a`, ascending by index. These are the carrier of
/// down(alpha, a) in order.
std::vector<std::size_t> segment_elements(const FinOrd& alpha, std::size_t a);

/// Initial segment below `a` with the induced order. Throws std::out_of_range.
FinOrd down(const FinOrd& alpha, std::size_t a);

struct SimWitness {
    std::vector<std::size_t> map;
    friend bool operator==(const SimWitness&, const SimWitness&) = default;
};

struct BoundedSimWitness {
    std::size_t bound = 0;
    /// iso[x] is the element of the codomain (below `bound`) matched with x.
    std::vector<std::size_t> iso;
    friend bool operator==(const BoundedSimWitness&, const BoundedSimWitness&) = default;
};

/// Table t(x, y) of whether alpha↓x and beta↓y are isomorphic, built bottom-up
/// by matching predecessor sets.
Relation segment_matching(const FinOrd& alpha, const FinOrd& beta);

/// The unique simulation alpha -> beta, found by matching initial segments.
std::optional<SimWitness> simulation(const FinOrd& alpha, const FinOrd& beta);

/// Same result through order types: x goes to the element of beta with the
/// same position.
std::optional<SimWitness> simulation_by_order_type(const FinOrd& alpha, const FinOrd& beta);

std::optional<BoundedSimWitness> bounded_sim(const FinOrd& alpha, const FinOrd& beta);

/// Whether `map` satisfies monotonicity and the initial segment property.
bool is_simulation(const FinOrd& alpha, const FinOrd& beta, std::span<const std::size_t> map);

/// Bijective, order preserving and order reflecting.
bool is_isomorphism(const FinOrd& alpha, const FinOrd& beta, std::span<const std::size_t> map);

/// Ordered coproduct: alpha's elements keep their indices, beta's element b
/// becomes size(alpha) + b, and everything in alpha lies below beta.
FinOrd sum(const FinOrd& alpha, const FinOrd& beta);

/// Quotient of all pairs (i, x) by isomorphism of initial segments, ordered
/// by bounded simulation. Elements are the classes in order of their least
/// representative (i, x).
FinOrd sup(std::span<const FinOrd> family);

/// Least representative (i, x) of each element of sup(family).
std::vector<std::pair<std::size_t, std::size_t>> sup_representatives(std::span<const FinOrd> family);

/// Size of the carrier; throws std::logic_error if the order is not linear.
std::size_t order_type(const FinOrd& a);

/// `ord { size: n; lt: i<j, ... }` with pairs in lexicographic order.
std::string to_text(const FinOrd& a);
/// `{"size":n,"pairs":[[i,j],...]}` with pairs in lexicographic order.
std::string to_json(const FinOrd& a);

FinOrd parse_ord(Lexer& lex);
FinOrd parse_ord_text(const std::string& text);
FinOrd ord_from_json(const std::string& text);

} // namespace hfkit
