#include "hfkit/error.hpp"
#include "hfkit/mewo.hpp"

#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace hfkit {

namespace {

std::string name_of(std::size_t i) { return "e" + std::to_string(i); }

std::string read_name(Lexer& lex)
{
    const auto kind = lex.peek().kind;
    if (kind != TokenKind::Ident && kind != TokenKind::Nat) lex.fail({token_name(TokenKind::Ident), token_name(TokenKind::Nat)});
    return lex.next().text;
}

bool at_name(const Lexer& lex)
{
    return lex.peek().kind == TokenKind::Ident || lex.peek().kind == TokenKind::Nat;
}

} // namespace

std::string to_text(const Mewo& m)
{
    std::ostringstream os;
    os << "mewo { elems:";
    for (std::size_t i = 0; i < m.size(); ++i) os << ' ' << name_of(i);
    if (m.size() == 0) os << ' ';
    os << "; lt:";
    bool first = true;
    for (auto [i, j] : m.lt().pairs()) {
        os << (first ? " " : ", ") << name_of(i) << '<' << name_of(j);
        first = false;
    }
    if (first) os << ' ';
    os << "; marked:";
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.marked(i)) os << ' ' << name_of(i);
    os << " }";
    return os.str();
}

std::string to_json(const Mewo& m)
{
    nlohmann::json doc;
    doc["size"] = m.size();
    doc["lt"] = nlohmann::json::array();
    for (auto [i, j] : m.lt().pairs()) doc["lt"].push_back({i, j});
    doc["marked"] = nlohmann::json::array();
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.marked(i)) doc["marked"].push_back(i);
    return doc.dump();
}

std::string to_dot(const Mewo& m)
{
    std::ostringstream os;
    os << "digraph mewo {\n  node [shape=circle];\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << "  " << name_of(i);
        if (m.marked(i)) os << " [style=filled, fillcolor=black, fontcolor=white]";
        os << ";\n";
    }
    for (auto [i, j] : m.lt().pairs()) os << "  " << name_of(i) << " -> " << name_of(j) << ";\n";
    os << "}\n";
    return os.str();
}

Mewo parse_mewo(Lexer& lex)
{
    lex.expect_word("mewo");
    lex.expect(TokenKind::LBrace);

    lex.expect_word("elems");
    lex.expect(TokenKind::Colon);
    std::unordered_map<std::string, std::size_t> index;
    while (at_name(lex)) {
        const Token t = lex.peek();
        const std::string name = read_name(lex);
        if (!index.emplace(name, index.size()).second)
            throw ParseError(t.line, t.column, {"a fresh element name"}, "'" + name + "'");
    }
    lex.expect(TokenKind::Semicolon, {token_name(TokenKind::Ident), token_name(TokenKind::Semicolon)});

    auto lookup = [&](Lexer& l) {
        const Token t = l.peek();
        const std::string name = read_name(l);
        auto it = index.find(name);
        if (it == index.end()) throw ParseError(t.line, t.column, {"a declared element"}, "'" + name + "'");
        return it->second;
    };

    lex.expect_word("lt");
    lex.expect(TokenKind::Colon);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (at_name(lex)) {
        do {
            const auto a = lookup(lex);
            lex.expect(TokenKind::Less);
            const auto b = lookup(lex);
            pairs.emplace_back(a, b);
        } while (lex.accept(TokenKind::Comma));
    }
    lex.expect(TokenKind::Semicolon, {token_name(TokenKind::Comma), token_name(TokenKind::Semicolon)});

    lex.expect_word("marked");
    lex.expect(TokenKind::Colon);
    std::vector<bool> marked(index.size(), false);
    while (at_name(lex)) marked[lookup(lex)] = true;
    lex.accept(TokenKind::Semicolon);
    lex.expect(TokenKind::RBrace, {token_name(TokenKind::Ident), token_name(TokenKind::RBrace)});
    return Mewo::validate(index.size(), pairs, std::move(marked));
}

Mewo parse_mewo_text(const std::string& text)
{
    Lexer lex(text);
    Mewo m = parse_mewo(lex);
    lex.expect(TokenKind::End);
    return m;
}

Mewo mewo_from_json(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed mewo JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("size") || !doc["size"].is_number_unsigned() || !doc.contains("lt") ||
        !doc["lt"].is_array() || !doc.contains("marked") || !doc["marked"].is_array()) {
        throw Error("mewo JSON must be {\"size\": n, \"lt\": [[i, j], ...], \"marked\": [i, ...]}");
    }
    const auto n = doc["size"].get<std::size_t>();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& p : doc["lt"]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned())
            throw Error("mewo JSON edge must be [i, j]");
        pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
    }
    std::vector<bool> marked(n, false);
    for (const auto& i : doc["marked"]) {
        if (!i.is_number_unsigned() || i.get<std::size_t>() >= n) throw Error("mewo JSON marked index out of range");
        marked[i.get<std::size_t>()] = true;
    }
    return Mewo::validate(n, pairs, std::move(marked));
}

} // namespace hfkit
