#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hfkit {

/// Dense square boolean matrix; `r(i, j)` reads as "i < j".
class Relation {
public:
    Relation() = default;
    explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}

    /// Throws ValidationError(Shape) on an out-of-range index.
    static Relation from_pairs(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> pairs);

    std::size_t size() const noexcept { return n_; }

    bool operator()(std::size_t i, std::size_t j) const noexcept { return bits_[i * n_ + j] != 0; }
    void set(std::size_t i, std::size_t j, bool v = true) noexcept { bits_[i * n_ + j] = v ? 1 : 0; }

    /// All related pairs in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

    /// Elements i with i < j, ascending.
    std::vector<std::size_t> predecessors(std::size_t j) const;

    /// The relation restricted to `keep`; element k of the result is keep[k].
    Relation induced(std::span<const std::size_t> keep) const;

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// A cycle x0 < x1 < ... < xk < x0 if one exists (self-loops give k = 0).
std::optional<std::vector<std::size_t>> find_cycle(const Relation& r);

/// Elements ordered so that every predecessor precedes its successors;
/// ties broken by index. Requires an acyclic relation.
std::vector<std::size_t> topological_order(const Relation& r);

Relation transitive_closure(const Relation& r);

/// First pair x < y (by index) with identical predecessor sets.
std::optional<std::pair<std::size_t, std::size_t>> find_extensionality_violation(const Relation& r);

} // namespace hfkit
