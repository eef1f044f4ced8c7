#include "hfkit/lexer.hpp"

#include "hfkit/error.hpp"

#include <cctype>

namespace hfkit {

std::string token_name(TokenKind k)
{
    switch (k) {
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Less: return "'<'";
    case TokenKind::Equals: return "'='";
    case TokenKind::Nat: return "NAT";
    case TokenKind::Ident: return "IDENT";
    case TokenKind::End: return "end of input";
    }
    return "?";
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

} // namespace

Lexer::Lexer(std::string_view text)
{
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto advance = [&] {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance();
            continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = TokenKind::Nat;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                t.text += text[i];
                advance();
            }
        } else if (ident_start(c)) {
            t.kind = TokenKind::Ident;
            while (i < text.size() && ident_char(text[i])) {
                t.text += text[i];
                advance();
            }
            if (i < text.size() && text[i] == '?') {
                t.text += '?';
                advance();
            }
        } else {
            switch (c) {
            case '{': t.kind = TokenKind::LBrace; break;
            case '}': t.kind = TokenKind::RBrace; break;
            case '(': t.kind = TokenKind::LParen; break;
            case ')': t.kind = TokenKind::RParen; break;
            case ',': t.kind = TokenKind::Comma; break;
            case ';': t.kind = TokenKind::Semicolon; break;
            case ':': t.kind = TokenKind::Colon; break;
            case '<': t.kind = TokenKind::Less; break;
            case '=': t.kind = TokenKind::Equals; break;
            default:
                throw ParseError(line, col, {"a token"}, std::string("'") + c + "'");
            }
            t.text = std::string(1, c);
            advance();
        }
        tokens_.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.column = col;
    tokens_.push_back(end);
}

const Token& Lexer::peek(std::size_t ahead) const
{
    const std::size_t at = pos_ + ahead;
    return at < tokens_.size() ? tokens_[at] : tokens_.back();
}

Token Lexer::next()
{
    Token t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
}

bool Lexer::accept(TokenKind k)
{
    if (peek().kind != k) return false;
    next();
    return true;
}

bool Lexer::accept_word(std::string_view word)
{
    if (peek().kind != TokenKind::Ident || peek().text != word) return false;
    next();
    return true;
}

Token Lexer::expect(TokenKind k, std::vector<std::string> expected)
{
    if (peek().kind != k) {
        if (expected.empty()) expected.push_back(token_name(k));
        fail(std::move(expected));
    }
    return next();
}

void Lexer::expect_word(std::string_view word)
{
    if (!accept_word(word)) fail({"'" + std::string(word) + "'"});
}

void Lexer::fail(std::vector<std::string> expected) const
{
    const Token& t = peek();
    const std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, std::move(expected), found);
}

} // namespace hfkit
