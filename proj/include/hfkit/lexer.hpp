#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hfkit {

enum class TokenKind { LBrace, RBrace, LParen, RParen, Comma, Semicolon, Colon, Less, Equals, Nat, Ident, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

/// Display name of a token kind as used in ParseError expected sets.
std::string token_name(TokenKind k);

/// Tokenizer for the brace-notation language and the ord/mewo text formats.
/// Identifiers may end in '?' (e.g. `ord?`); `#` starts a line comment.
class Lexer {
public:
    explicit Lexer(std::string_view text);

    const Token& peek() const { return tokens_[pos_]; }
    const Token& peek(std::size_t ahead) const;
    Token next();
    bool at_end() const { return peek().kind == TokenKind::End; }

    bool accept(TokenKind k);
    bool accept_word(std::string_view word);

    /// Consumes a token of kind `k` or throws ParseError listing `expected`
    /// (defaults to the name of `k`).
    Token expect(TokenKind k, std::vector<std::string> expected = {});
    void expect_word(std::string_view word);

    [[noreturn]] void fail(std::vector<std::string> expected) const;

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace hfkit
