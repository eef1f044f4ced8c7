#include "hfkit/universe.hpp"

#include "hfkit/error.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace hfkit {

namespace {

std::uint32_t next_universe_id()
{
    static std::atomic<std::uint32_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}

} // namespace

std::size_t SetUniverse::ChildListHash::operator()(const std::vector<std::uint32_t>& v) const noexcept
{
    // FNV-1a over the indices.
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) {
        h ^= x;
        h *= 1099511628211ull;
    }
    h ^= v.size();
    return static_cast<std::size_t>(h);
}

SetUniverse::SetUniverse(std::size_t node_limit) : id_(next_universe_id()), node_limit_(node_limit) {}

std::size_t SetUniverse::node_limit_from_env()
{
    if (const char* env = std::getenv("HFKIT_NODE_LIMIT")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return default_node_limit;
}

void SetUniverse::check(SetHandle h) const
{
    if (!owns(h)) {
        throw ForeignHandleError("handle " + std::to_string(h.index) + " of universe " +
                                 std::to_string(h.universe) + " does not belong to universe " +
                                 std::to_string(id_));
    }
}

const SetUniverse::Node& SetUniverse::node(SetHandle h) const
{
    check(h);
    return nodes_[h.index];
}

SetHandle SetUniverse::empty_set()
{
    return mk_set(std::span<const SetHandle>{});
}

SetHandle SetUniverse::mk_set(std::span<const SetHandle> children)
{
    std::vector<std::uint32_t> key;
    key.reserve(children.size());
    for (auto c : children) {
        check(c);
        key.push_back(c.index);
    }
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());

    if (auto it = intern_.find(key); it != intern_.end()) return handle(it->second);

    if (nodes_.size() >= node_limit_) {
        throw LimitError("set universe node limit of " + std::to_string(node_limit_) + " exceeded");
    }

    Node n;
    for (auto c : key) {
        const Node& child = nodes_[c];
        n.rank = std::max(n.rank, child.rank + 1);
        if (n.transitive && !std::includes(key.begin(), key.end(), child.children.begin(), child.children.end()))
            n.transitive = false;
    }
    n.st_ordinal = n.transitive;
    for (auto c : key) n.st_ordinal = n.st_ordinal && nodes_[c].transitive;
    n.children = key;

    const auto index = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(std::move(n));
    intern_.emplace(std::move(key), index);
    return handle(index);
}

std::vector<SetHandle> SetUniverse::elements(SetHandle h) const
{
    std::vector<SetHandle> out;
    for (auto c : node(h).children) out.push_back(handle(c));
    return out;
}

std::span<const std::uint32_t> SetUniverse::member_indices(SetHandle h) const
{
    return node(h).children;
}

bool SetUniverse::mem(SetHandle x, SetHandle y) const
{
    check(x);
    const auto& ys = node(y).children;
    return std::binary_search(ys.begin(), ys.end(), x.index);
}

bool SetUniverse::subset(SetHandle x, SetHandle y) const
{
    const auto& xs = node(x).children;
    const auto& ys = node(y).children;
    return std::includes(ys.begin(), ys.end(), xs.begin(), xs.end());
}

bool SetUniverse::is_transitive_set(SetHandle h) const { return node(h).transitive; }

bool SetUniverse::is_st_ordinal(SetHandle h) const { return node(h).st_ordinal; }

std::size_t SetUniverse::rank_nat(SetHandle h) const { return node(h).rank; }

SetHandle SetUniverse::von_neumann(std::size_t n)
{
    if (n > numeral_limit_) {
        throw LimitError("numeral " + std::to_string(n) + " exceeds the limit of " +
                         std::to_string(numeral_limit_));
    }
    if (numerals_.empty()) numerals_.push_back(empty_set().index);
    while (numerals_.size() <= n) {
        // n+1 = n ∪ {n}
        std::vector<SetHandle> next;
        for (auto c : nodes_[numerals_.back()].children) next.push_back(handle(c));
        next.push_back(handle(numerals_.back()));
        numerals_.push_back(mk_set(next).index);
    }
    return handle(numerals_[n]);
}

bool SetUniverse::verify_invariants() const
{
    // Kahn's algorithm on the membership digraph (edge member -> set).
    const std::size_t n = nodes_.size();
    std::vector<std::vector<std::uint32_t>> parents(n);
    std::vector<std::size_t> pending(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& ch = nodes_[i].children;
        if (!std::is_sorted(ch.begin(), ch.end()) || std::adjacent_find(ch.begin(), ch.end()) != ch.end())
            return false;
        for (auto c : ch) {
            if (c >= n) return false;
            parents[c].push_back(static_cast<std::uint32_t>(i));
        }
        pending[i] = ch.size();
    }
    std::vector<std::uint32_t> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (pending[i] == 0) ready.push_back(static_cast<std::uint32_t>(i));
    std::size_t visited = 0;
    while (!ready.empty()) {
        const auto v = ready.back();
        ready.pop_back();
        ++visited;
        for (auto p : parents[v])
            if (--pending[p] == 0) ready.push_back(p);
    }
    return visited == n && intern_.size() == n;
}

namespace {

// Positions of `roots` and their hereditary members under canonical order.
// Returns the sorted closure; `pos` maps node index to position.
std::vector<SetHandle> sorted_closure(const SetUniverse& u, std::span<const SetHandle> roots,
                                      std::unordered_map<std::uint32_t, std::size_t>& pos)
{
    std::vector<std::uint32_t> stack;
    std::unordered_map<std::uint32_t, bool> seen;
    for (auto r : roots) {
        u.check(r);
        if (seen.emplace(r.index, true).second) stack.push_back(r.index);
    }
    std::vector<std::uint32_t> all;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        all.push_back(v);
        for (auto c : u.member_indices(u.handle(v)))
            if (seen.emplace(c, true).second) stack.push_back(c);
    }

    std::size_t max_rank = 0;
    for (auto v : all) max_rank = std::max(max_rank, u.rank_nat(u.handle(v)));
    std::vector<std::vector<std::uint32_t>> by_rank(max_rank + 1);
    for (auto v : all) by_rank[u.rank_nat(u.handle(v))].push_back(v);

    std::vector<SetHandle> out;
    out.reserve(all.size());
    for (auto& level : by_rank) {
        std::vector<std::pair<std::vector<std::size_t>, std::uint32_t>> keyed;
        keyed.reserve(level.size());
        for (auto v : level) {
            std::vector<std::size_t> key;
            for (auto c : u.member_indices(u.handle(v))) key.push_back(pos.at(c));
            std::sort(key.begin(), key.end(), std::greater<>());
            keyed.emplace_back(std::move(key), v);
        }
        std::sort(keyed.begin(), keyed.end());
        for (auto& [key, v] : keyed) {
            pos.emplace(v, out.size());
            out.push_back(u.handle(v));
        }
    }
    return out;
}

} // namespace

int canonical_compare(const SetUniverse& u, SetHandle a, SetHandle b)
{
    if (a == b) {
        u.check(a);
        return 0;
    }
    std::unordered_map<std::uint32_t, std::size_t> pos;
    const SetHandle roots[] = {a, b};
    sorted_closure(u, roots, pos);
    return pos.at(a.index) < pos.at(b.index) ? -1 : 1;
}

std::vector<SetHandle> canonical_closure(const SetUniverse& u, SetHandle root)
{
    std::unordered_map<std::uint32_t, std::size_t> pos;
    const SetHandle roots[] = {root};
    return sorted_closure(u, roots, pos);
}

std::string format_set(const SetUniverse& u, SetHandle h)
{
    std::unordered_map<std::uint32_t, std::size_t> pos;
    const SetHandle roots[] = {h};
    const auto order = sorted_closure(u, roots, pos);

    std::vector<std::string> text(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::vector<std::size_t> members;
        for (auto c : u.member_indices(order[i])) members.push_back(pos.at(c));
        std::sort(members.begin(), members.end());
        std::string s = "{";
        for (std::size_t k = 0; k < members.size(); ++k) {
            if (k) s += ',';
            s += text[members[k]];
        }
        s += '}';
        text[i] = std::move(s);
    }
    return text.back();
}

std::string export_slice_json(const SetUniverse& u, SetHandle root)
{
    std::unordered_map<std::uint32_t, std::size_t> pos;
    const SetHandle roots[] = {root};
    const auto order = sorted_closure(u, roots, pos);

    nlohmann::json nodes = nlohmann::json::array();
    for (auto h : order) {
        std::vector<std::size_t> members;
        for (auto c : u.member_indices(h)) members.push_back(pos.at(c));
        std::sort(members.begin(), members.end());
        nodes.push_back(members);
    }
    nlohmann::json doc;
    doc["nodes"] = std::move(nodes);
    doc["root"] = pos.at(root.index);
    return doc.dump();
}

SetHandle import_slice_json(SetUniverse& u, const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed set slice: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("root") || !doc["nodes"].is_array() ||
        !doc["root"].is_number_unsigned()) {
        throw Error("set slice must be an object with a 'nodes' array and a 'root' index");
    }
    const auto& nodes = doc["nodes"];
    std::vector<SetHandle> handles;
    handles.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!nodes[i].is_array()) throw Error("node " + std::to_string(i) + " is not an array");
        std::vector<SetHandle> children;
        for (const auto& c : nodes[i]) {
            if (!c.is_number_unsigned() || c.get<std::size_t>() >= i) {
                throw Error("node " + std::to_string(i) + " must only refer to earlier nodes");
            }
            children.push_back(handles[c.get<std::size_t>()]);
        }
        handles.push_back(u.mk_set(children));
    }
    const auto root = doc["root"].get<std::size_t>();
    if (root >= handles.size()) throw Error("root index out of range");
    return handles[root];
}

} // namespace hfkit
