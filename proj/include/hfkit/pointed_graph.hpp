#pragma once

#include "hfkit/relation.hpp"
#include "hfkit/universe.hpp"

#include <cstddef>
#include <vector>

namespace hfkit {

/// Raw, possibly redundant presentation of a set: the root denotes the set
/// whose members are the sets denoted by its successors.
struct PointedGraph {
    std::vector<std::vector<std::size_t>> successors;
    std::size_t root = 0;

    std::size_t vertex_count() const noexcept { return successors.size(); }

    /// Throws Error if the graph is empty or an index is out of range.
    void validate() const;

    /// Membership graph of a set: one vertex per hereditary member, in
    /// canonical order, root last.
    static PointedGraph of_set(const SetUniverse& u, SetHandle h);
};

/// Mostowski collapse of the part of `g` reachable from its root.
/// Throws CyclicError if that part is not wellfounded.
SetHandle from_graph(const PointedGraph& g, SetUniverse& u);

/// Collapse of every vertex of a graph, as if each were the root.
std::vector<SetHandle> collapse_all(const std::vector<std::vector<std::size_t>>& successors, SetUniverse& u);

/// Greatest bisimulation on one graph, computed by naive fixpoint iteration
/// from the full relation. Throws CyclicError if the graph has a cycle.
/// Shares no code with the collapse; it serves as its independent oracle.
Relation greatest_bisimulation(const std::vector<std::vector<std::size_t>>& successors);

/// Roots related by the greatest bisimulation of the disjoint union.
bool bisimilar(const PointedGraph& g1, const PointedGraph& g2);

/// Membership on raw presentations: some successor of g2's root is
/// bisimilar to g1's root.
bool mem_raw(const PointedGraph& g1, const PointedGraph& g2);

} // namespace hfkit
