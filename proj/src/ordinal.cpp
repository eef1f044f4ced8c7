#include "hfkit/ordinal.hpp"

#include "hfkit/error.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hfkit {

namespace {

void require_linear(const Relation& lt)
{
    for (std::size_t a = 0; a < lt.size(); ++a)
        for (std::size_t b = a + 1; b < lt.size(); ++b)
            if (!lt(a, b) && !lt(b, a))
                throw std::logic_error("validated ordinal is not linear at " + std::to_string(a) + ", " +
                                       std::to_string(b));
}

std::string join(const std::vector<std::size_t>& xs)
{
    std::string s;
    for (auto x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

} // namespace

FinOrd FinOrd::validate(std::size_t size, Relation lt)
{
    if (lt.size() != size) {
        throw ValidationError(Axiom::Shape, {size, lt.size()},
                              "relation has size " + std::to_string(lt.size()) + ", expected " +
                                  std::to_string(size));
    }
    if (auto cycle = find_cycle(lt)) {
        throw ValidationError(Axiom::Wellfoundedness, *cycle, "order is not wellfounded: cycle " + join(*cycle));
    }
    if (auto pair = find_extensionality_violation(lt)) {
        throw ValidationError(Axiom::Extensionality, {pair->first, pair->second},
                              "order is not extensional: " + std::to_string(pair->first) + " and " +
                                  std::to_string(pair->second) + " have the same predecessors");
    }
    const std::size_t n = size;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (lt(x, y))
                for (std::size_t z = 0; z < n; ++z)
                    if (lt(y, z) && !lt(x, z))
                        throw ValidationError(Axiom::Transitivity, {x, y, z},
                                              "order is not transitive: " + std::to_string(x) + "<" +
                                                  std::to_string(y) + "<" + std::to_string(z));
    require_linear(lt);
    return FinOrd(std::move(lt));
}

FinOrd FinOrd::validate(std::size_t size, std::span<const std::pair<std::size_t, std::size_t>> pairs)
{
    return validate(size, Relation::from_pairs(size, pairs));
}

FinOrd FinOrd::chain(std::size_t n)
{
    Relation lt(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) lt.set(i, j);
    return FinOrd(std::move(lt));
}

std::size_t FinOrd::position(std::size_t a) const
{
    if (a >= size()) throw std::out_of_range("element " + std::to_string(a) + " out of range");
    std::size_t k = 0;
    for (std::size_t x = 0; x < size(); ++x) k += lt_(x, a) ? 1 : 0;
    return k;
}

std::vector<std::size_t> FinOrd::linearization() const
{
    std::vector<std::size_t> out(size());
    for (std::size_t a = 0; a < size(); ++a) out[position(a)] = a;
    return out;
}

FinOrd canonical_form(const FinOrd& a)
{
    const auto lin = a.linearization();
    return FinOrd::validate(a.size(), a.lt().induced(lin));
}

bool equivalent(const FinOrd& a, const FinOrd& b)
{
    return canonical_form(a) == canonical_form(b);
}

std::vector<std::size_t> segment_elements(const FinOrd& alpha, std::size_t a)
{
    if (a >= alpha.size()) throw std::out_of_range("element " + std::to_string(a) + " out of range");
    return alpha.lt().predecessors(a);
}

FinOrd down(const FinOrd& alpha, std::size_t a)
{
    const auto keep = segment_elements(alpha, a);
    return FinOrd::validate(keep.size(), alpha.lt().induced(keep));
}

Relation segment_matching(const FinOrd& alpha, const FinOrd& beta)
{
    Relation t(std::max(alpha.size(), beta.size()));
    const auto lin_a = alpha.linearization();
    const auto lin_b = beta.linearization();
    for (auto x : lin_a) {
        const auto px = alpha.lt().predecessors(x);
        for (auto y : lin_b) {
            const auto py = beta.lt().predecessors(y);
            auto covered = [&](const std::vector<std::size_t>& from, const std::vector<std::size_t>& to, bool flip) {
                return std::all_of(from.begin(), from.end(), [&](std::size_t u) {
                    return std::any_of(to.begin(), to.end(), [&](std::size_t v) { return flip ? t(v, u) : t(u, v); });
                });
            };
            t.set(x, y, covered(px, py, false) && covered(py, px, true));
        }
    }
    return t;
}

std::optional<SimWitness> simulation(const FinOrd& alpha, const FinOrd& beta)
{
    const auto t = segment_matching(alpha, beta);
    SimWitness w;
    w.map.resize(alpha.size());
    for (std::size_t x = 0; x < alpha.size(); ++x) {
        std::size_t hits = 0;
        for (std::size_t y = 0; y < beta.size(); ++y) {
            if (t(x, y)) {
                w.map[x] = y;
                ++hits;
            }
        }
        if (hits == 0) return std::nullopt;
        if (hits > 1) throw std::logic_error("initial segments of an ordinal are not distinct");
    }
    return w;
}

std::optional<SimWitness> simulation_by_order_type(const FinOrd& alpha, const FinOrd& beta)
{
    if (order_type(alpha) > order_type(beta)) return std::nullopt;
    const auto lin_b = beta.linearization();
    SimWitness w;
    for (std::size_t x = 0; x < alpha.size(); ++x) w.map.push_back(lin_b[alpha.position(x)]);
    return w;
}

std::optional<BoundedSimWitness> bounded_sim(const FinOrd& alpha, const FinOrd& beta)
{
    for (auto b : beta.linearization()) {
        if (!equivalent(alpha, down(beta, b))) continue;
        const auto lin_b = beta.linearization();
        BoundedSimWitness w{b, {}};
        for (std::size_t x = 0; x < alpha.size(); ++x) w.iso.push_back(lin_b[alpha.position(x)]);
        return w;
    }
    return std::nullopt;
}

bool is_simulation(const FinOrd& alpha, const FinOrd& beta, std::span<const std::size_t> map)
{
    if (map.size() != alpha.size()) return false;
    for (auto y : map)
        if (y >= beta.size()) return false;
    for (std::size_t x1 = 0; x1 < alpha.size(); ++x1)
        for (std::size_t x2 = 0; x2 < alpha.size(); ++x2)
            if (alpha.less(x1, x2) && !beta.less(map[x1], map[x2])) return false;
    for (std::size_t x = 0; x < alpha.size(); ++x) {
        for (std::size_t y = 0; y < beta.size(); ++y) {
            if (!beta.less(y, map[x])) continue;
            bool hit = false;
            for (std::size_t x1 = 0; x1 < alpha.size() && !hit; ++x1) hit = alpha.less(x1, x) && map[x1] == y;
            if (!hit) return false;
        }
    }
    return true;
}

bool is_isomorphism(const FinOrd& alpha, const FinOrd& beta, std::span<const std::size_t> map)
{
    if (map.size() != alpha.size() || alpha.size() != beta.size()) return false;
    std::vector<bool> hit(beta.size(), false);
    for (auto y : map) {
        if (y >= beta.size() || hit[y]) return false;
        hit[y] = true;
    }
    for (std::size_t a = 0; a < alpha.size(); ++a)
        for (std::size_t b = 0; b < alpha.size(); ++b)
            if (alpha.less(a, b) != beta.less(map[a], map[b])) return false;
    return true;
}

FinOrd sum(const FinOrd& alpha, const FinOrd& beta)
{
    const std::size_t n = alpha.size();
    const std::size_t m = beta.size();
    Relation lt(n + m);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t a2 = 0; a2 < n; ++a2) lt.set(a, a2, alpha.less(a, a2));
        for (std::size_t b = 0; b < m; ++b) lt.set(a, n + b);
    }
    for (std::size_t b = 0; b < m; ++b)
        for (std::size_t b2 = 0; b2 < m; ++b2) lt.set(n + b, n + b2, beta.less(b, b2));
    return FinOrd::validate(n + m, std::move(lt));
}

namespace {

struct SupClasses {
    std::vector<std::pair<std::size_t, std::size_t>> reps;
    std::vector<FinOrd> segments;
};

SupClasses sup_classes(std::span<const FinOrd> family)
{
    SupClasses c;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t x = 0; x < family[i].size(); ++x) {
            FinOrd seg = down(family[i], x);
            const bool known = std::any_of(c.segments.begin(), c.segments.end(),
                                           [&](const FinOrd& s) { return equivalent(s, seg); });
            if (known) continue;
            c.reps.emplace_back(i, x);
            c.segments.push_back(std::move(seg));
        }
    }
    return c;
}

} // namespace

FinOrd sup(std::span<const FinOrd> family)
{
    const auto c = sup_classes(family);
    const std::size_t n = c.reps.size();
    Relation lt(n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (p != q && bounded_sim(c.segments[p], c.segments[q])) lt.set(p, q);
    return FinOrd::validate(n, std::move(lt));
}

std::vector<std::pair<std::size_t, std::size_t>> sup_representatives(std::span<const FinOrd> family)
{
    return sup_classes(family).reps;
}

std::size_t order_type(const FinOrd& a)
{
    require_linear(a.lt());
    return a.size();
}

std::string to_text(const FinOrd& a)
{
    std::ostringstream os;
    os << "ord { size: " << a.size() << "; lt:";
    bool first = true;
    for (auto [i, j] : a.lt().pairs()) {
        os << (first ? " " : ", ") << i << '<' << j;
        first = false;
    }
    os << " }";
    return os.str();
}

std::string to_json(const FinOrd& a)
{
    nlohmann::json doc;
    doc["size"] = a.size();
    doc["pairs"] = nlohmann::json::array();
    for (auto [i, j] : a.lt().pairs()) doc["pairs"].push_back({i, j});
    return doc.dump();
}

FinOrd parse_ord(Lexer& lex)
{
    lex.expect_word("ord");
    lex.expect(TokenKind::LBrace);
    lex.expect_word("size");
    lex.expect(TokenKind::Colon);
    const std::size_t size = std::stoul(lex.expect(TokenKind::Nat).text);
    lex.expect(TokenKind::Semicolon);
    lex.expect_word("lt");
    lex.expect(TokenKind::Colon);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (lex.peek().kind == TokenKind::Nat) {
        do {
            const auto i = std::stoul(lex.expect(TokenKind::Nat).text);
            lex.expect(TokenKind::Less);
            const auto j = std::stoul(lex.expect(TokenKind::Nat).text);
            pairs.emplace_back(i, j);
        } while (lex.accept(TokenKind::Comma));
    }
    lex.accept(TokenKind::Semicolon);
    lex.expect(TokenKind::RBrace, {token_name(TokenKind::RBrace), token_name(TokenKind::Nat)});
    return FinOrd::validate(size, pairs);
}

FinOrd parse_ord_text(const std::string& text)
{
    Lexer lex(text);
    FinOrd a = parse_ord(lex);
    lex.expect(TokenKind::End);
    return a;
}

FinOrd ord_from_json(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed ordinal JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("size") || !doc["size"].is_number_unsigned() || !doc.contains("pairs") ||
        !doc["pairs"].is_array()) {
        throw Error("ordinal JSON must be {\"size\": n, \"pairs\": [[i, j], ...]}");
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& p : doc["pairs"]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned())
            throw Error("ordinal JSON pair must be [i, j]");
        pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
    }
    return FinOrd::validate(doc["size"].get<std::size_t>(), pairs);
}

} // namespace hfkit
