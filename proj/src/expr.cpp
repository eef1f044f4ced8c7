#include "hfkit/expr.hpp"

#include "hfkit/error.hpp"

#include <array>
#include <charconv>
#include <utility>

namespace hfkit {

namespace {

struct CommandInfo {
    std::string_view name;
    std::size_t arity;
    bool infix;
};

constexpr std::array<CommandInfo, 13> commands{{
    {"canon", 1, false},
    {"rank", 1, false},
    {"ord?", 1, false},
    {"transitive?", 1, false},
    {"in", 2, true},
    {"sub", 2, true},
    {"phi", 1, false},
    {"psi", 1, false},
    {"tomewo", 1, false},
    {"tov", 1, false},
    {"eq", 2, true},
    {"dot", 1, false},
    {"json", 1, false},
}};

const std::vector<std::string>& primary_names()
{
    static const std::vector<std::string> names{"'{'", "numeral", "identifier", "'('", "command", "'ord'", "'mewo'"};
    return names;
}

bool is_keyword(std::string_view w)
{
    return w == "let" || w == "ord" || w == "mewo" || command_arity(w).has_value();
}

Expr parse_unary(Lexer& lex);

Expr parse_primary(Lexer& lex)
{
    const Token& t = lex.peek();
    switch (t.kind) {
    case TokenKind::LBrace: {
        lex.next();
        std::vector<Expr> members;
        if (!lex.accept(TokenKind::RBrace)) {
            do {
                members.push_back(parse_expr(lex));
            } while (lex.accept(TokenKind::Comma));
            lex.expect(TokenKind::RBrace, {token_name(TokenKind::Comma), token_name(TokenKind::RBrace)});
        }
        return Expr::braces(std::move(members));
    }
    case TokenKind::Nat: {
        const Token n = lex.next();
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(n.text.data(), n.text.data() + n.text.size(), value);
        if (ec != std::errc() || ptr != n.text.data() + n.text.size())
            throw ParseError(n.line, n.column, {"a numeral that fits in 64 bits"}, "'" + n.text + "'");
        return Expr::numeral(value);
    }
    case TokenKind::LParen: {
        lex.next();
        Expr e = parse_expr(lex);
        lex.expect(TokenKind::RParen);
        return e;
    }
    case TokenKind::Ident:
        if (t.text == "ord") {
            Expr e;
            e.kind = Expr::Kind::OrdLit;
            e.ord = parse_ord(lex);
            return e;
        }
        if (t.text == "mewo") {
            Expr e;
            e.kind = Expr::Kind::MewoLit;
            e.mewo = parse_mewo(lex);
            return e;
        }
        if (!is_keyword(t.text)) return Expr::ident(lex.next().text);
        break;
    default:
        break;
    }
    lex.fail(primary_names());
}

Expr parse_unary(Lexer& lex)
{
    const Token& t = lex.peek();
    if (t.kind == TokenKind::Ident) {
        if (const auto arity = command_arity(t.text)) {
            std::string name = lex.next().text;
            std::vector<Expr> args;
            for (std::size_t i = 0; i < *arity; ++i) args.push_back(parse_unary(lex));
            return Expr::op(std::move(name), std::move(args));
        }
    }
    return parse_primary(lex);
}

bool is_infix_op(const Expr& e) { return e.kind == Expr::Kind::Op && is_infix_command(e.name); }

std::string print_operand(const Expr& e)
{
    return is_infix_op(e) ? "(" + print(e) + ")" : print(e);
}

} // namespace

Expr Expr::braces(std::vector<Expr> members)
{
    Expr e;
    if (members.empty()) return e;
    e.kind = Kind::Braces;
    e.args = std::move(members);
    return e;
}

Expr Expr::numeral(std::size_t n)
{
    Expr e;
    e.kind = Kind::Numeral;
    e.number = n;
    return e;
}

Expr Expr::ident(std::string name)
{
    Expr e;
    e.kind = Kind::Ident;
    e.name = std::move(name);
    return e;
}

Expr Expr::op(std::string name, std::vector<Expr> args)
{
    Expr e;
    e.kind = Kind::Op;
    e.name = std::move(name);
    e.args = std::move(args);
    return e;
}

std::optional<std::size_t> command_arity(std::string_view word)
{
    for (const auto& c : commands)
        if (c.name == word) return c.arity;
    return std::nullopt;
}

bool is_infix_command(std::string_view word)
{
    for (const auto& c : commands)
        if (c.name == word) return c.infix;
    return false;
}

Expr parse_expr(Lexer& lex)
{
    Expr lhs = parse_unary(lex);
    const Token& t = lex.peek();
    if (t.kind == TokenKind::Ident && is_infix_command(t.text)) {
        std::string name = lex.next().text;
        Expr rhs = parse_unary(lex);
        return Expr::op(std::move(name), {std::move(lhs), std::move(rhs)});
    }
    return lhs;
}

Stmt parse_stmt(Lexer& lex)
{
    Stmt s;
    if (lex.accept_word("let")) {
        const Token name = lex.expect(TokenKind::Ident, {"identifier"});
        if (is_keyword(name.text)) throw ParseError(name.line, name.column, {"identifier"}, "'" + name.text + "'");
        s.let = name.text;
        lex.expect(TokenKind::Equals);
    }
    s.expr = parse_expr(lex);
    return s;
}

Expr parse(const std::string& text)
{
    Lexer lex(text);
    Expr e = parse_expr(lex);
    lex.expect(TokenKind::End, {"end of input", "'in'", "'sub'", "'eq'"});
    return e;
}

std::vector<Stmt> parse_line(const std::string& text)
{
    Lexer lex(text);
    std::vector<Stmt> out;
    while (!lex.at_end()) {
        out.push_back(parse_stmt(lex));
        if (!lex.accept(TokenKind::Semicolon))
            lex.expect(TokenKind::End, {"end of input", token_name(TokenKind::Semicolon), "'in'", "'sub'", "'eq'"});
    }
    return out;
}

std::string print(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::EmptySet:
        return "{}";
    case Expr::Kind::Braces: {
        std::string s = "{";
        for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? "," : "") + print(e.args[i]);
        return s + "}";
    }
    case Expr::Kind::Numeral:
        return std::to_string(e.number);
    case Expr::Kind::Ident:
        return e.name;
    case Expr::Kind::Op:
        if (is_infix_command(e.name)) return print_operand(e.args[0]) + " " + e.name + " " + print_operand(e.args[1]);
        {
            std::string s = e.name;
            for (const auto& a : e.args) s += " " + print_operand(a);
            return s;
        }
    case Expr::Kind::OrdLit:
        return to_text(e.ord);
    case Expr::Kind::MewoLit:
        return to_text(e.mewo);
    }
    return {};
}

std::string print(const Stmt& s)
{
    return s.let ? "let " + *s.let + " = " + print(s.expr) : print(s.expr);
}

} // namespace hfkit
