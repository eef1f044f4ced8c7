#pragma once

#include "hfkit/lexer.hpp"
#include "hfkit/mewo.hpp"
#include "hfkit/ordinal.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hfkit {

/// Syntax tree of the set-expression language.
///
///     expr    := unary [ ('in' | 'sub' | 'eq') unary ]
///     unary   := CMD unary... | primary          (fixed arity per command)
///     primary := '{' [expr {',' expr}] '}' | NAT | IDENT | '(' expr ')'
///              | ord-literal | mewo-literal
///     stmt    := 'let' IDENT '=' expr | expr
///
/// Binary commands may be written prefix (`in 2 3`) or infix (`2 in 3`);
/// both give the same tree.
struct Expr {
    enum class Kind { EmptySet, Braces, Numeral, Ident, Op, OrdLit, MewoLit };

    Kind kind = Kind::EmptySet;
    std::size_t number = 0;  ///< Numeral
    std::string name;        ///< Ident, Op
    std::vector<Expr> args;  ///< Braces members, Op arguments
    FinOrd ord;              ///< OrdLit
    Mewo mewo;               ///< MewoLit

    static Expr empty_set() { return {}; }
    static Expr braces(std::vector<Expr> members);
    static Expr numeral(std::size_t n);
    static Expr ident(std::string name);
    static Expr op(std::string name, std::vector<Expr> args);

    friend bool operator==(const Expr&, const Expr&) = default;
};

struct Stmt {
    std::optional<std::string> let;  ///< bound name for `let`
    Expr expr;

    friend bool operator==(const Stmt&, const Stmt&) = default;
};

/// Number of arguments of a command, or nullopt if `word` is not one.
std::optional<std::size_t> command_arity(std::string_view word);
bool is_infix_command(std::string_view word);

Expr parse_expr(Lexer& lex);
Stmt parse_stmt(Lexer& lex);

/// Parses exactly one expression.
Expr parse(const std::string& text);

/// Parses a line of statements separated by ';'.
std::vector<Stmt> parse_line(const std::string& text);

/// Prints an expression so that `parse(print(e)) == e`.
std::string print(const Expr& e);
std::string print(const Stmt& s);

} // namespace hfkit
