#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace hfkit {

/// Identifier of a hereditarily finite set inside one SetUniverse.
///
/// Handles from the same universe compare equal iff they denote the same set.
/// The ordering is by creation index and is only meaningful within a universe.
struct SetHandle {
    std::uint32_t universe = 0;
    std::uint32_t index = 0;

    friend auto operator<=>(const SetHandle&, const SetHandle&) = default;
};

/// Append-only hash-consed arena of hereditarily finite sets.
///
/// Every node is interned from its canonical child list (sorted by creation
/// index, no duplicates), so structural equality of sets is handle equality.
/// Children are always created before their parents, which makes the
/// membership digraph acyclic by construction.
///
/// Read-only members are safe to call concurrently. mk_set and the helpers
/// built on it mutate the arena and must be externally serialized; the usual
/// pattern is one universe per worker thread.
class SetUniverse {
public:
    static constexpr std::size_t default_node_limit = std::size_t{1} << 20;
    static constexpr std::size_t default_numeral_limit = 4096;

    explicit SetUniverse(std::size_t node_limit = default_node_limit);

    /// Node limit from HFKIT_NODE_LIMIT, falling back to the default.
    static std::size_t node_limit_from_env();

    SetUniverse(const SetUniverse&) = delete;
    SetUniverse& operator=(const SetUniverse&) = delete;
    SetUniverse(SetUniverse&&) noexcept = default;
    SetUniverse& operator=(SetUniverse&&) noexcept = default;

    std::uint32_t id() const noexcept { return id_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    std::size_t node_limit() const noexcept { return node_limit_; }

    bool owns(SetHandle h) const noexcept { return h.universe == id_ && h.index < nodes_.size(); }

    /// Throws ForeignHandleError unless `h` was created by this universe.
    void check(SetHandle h) const;

    SetHandle empty_set();
    SetHandle mk_set(std::span<const SetHandle> children);
    SetHandle mk_set(std::initializer_list<SetHandle> children)
    {
        return mk_set(std::span<const SetHandle>(children.begin(), children.size()));
    }

    /// Members of `h`, sorted by creation index.
    std::vector<SetHandle> elements(SetHandle h) const;
    std::span<const std::uint32_t> member_indices(SetHandle h) const;
    std::size_t cardinality(SetHandle h) const { return member_indices(h).size(); }

    bool mem(SetHandle x, SetHandle y) const;
    bool subset(SetHandle x, SetHandle y) const;
    bool is_transitive_set(SetHandle h) const;
    bool is_st_ordinal(SetHandle h) const;
    std::size_t rank_nat(SetHandle h) const;

    /// The numeral n = {0, ..., n-1}. Throws LimitError above the numeral limit.
    SetHandle von_neumann(std::size_t n);
    std::size_t numeral_limit() const noexcept { return numeral_limit_; }
    void set_numeral_limit(std::size_t n) noexcept { numeral_limit_ = n; }

    /// Recomputes the acyclicity of the membership digraph by a topological
    /// sort over all nodes, and checks canonical child lists.
    bool verify_invariants() const;

    SetHandle handle(std::uint32_t index) const { return SetHandle{id_, index}; }

private:
    struct Node {
        std::vector<std::uint32_t> children;
        std::uint32_t rank = 0;
        bool transitive = true;
        bool st_ordinal = true;
    };

    struct ChildListHash {
        std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept;
    };

    const Node& node(SetHandle h) const;

    std::uint32_t id_;
    std::size_t node_limit_;
    std::size_t numeral_limit_ = default_numeral_limit;
    std::vector<Node> nodes_;
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, ChildListHash> intern_;
    std::vector<std::uint32_t> numerals_;
};

/// Structural total order on hereditarily finite sets, independent of the
/// universe: lower rank first, then the set whose largest differing member
/// is larger. Negative, zero or positive like strcmp.
int canonical_compare(const SetUniverse& u, SetHandle a, SetHandle b);

/// `root` and all its hereditary members, sorted by canonical_compare
/// (so `root` comes last).
std::vector<SetHandle> canonical_closure(const SetUniverse& u, SetHandle root);

/// Brace notation with members in canonical order, e.g. "{{},{{}}}".
std::string format_set(const SetUniverse& u, SetHandle h);

/// JSON slice: {"nodes":[[child indices]...],"root":k}. Nodes are in
/// canonical order, which is topological; the text is a canonical form of
/// the set, so export/import round-trips bit-exactly.
std::string export_slice_json(const SetUniverse& u, SetHandle root);

/// Interns a JSON slice. Throws Error on malformed input or when a node
/// refers to itself or a later node.
SetHandle import_slice_json(SetUniverse& u, const std::string& text);

} // namespace hfkit

template <>
struct std::hash<hfkit::SetHandle> {
    std::size_t operator()(const hfkit::SetHandle& h) const noexcept
    {
        return std::hash<std::uint64_t>{}((std::uint64_t{h.universe} << 32) | h.index);
    }
};
