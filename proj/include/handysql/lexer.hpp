#pragma once

#include "handysql/errors.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace handysql {

enum class TokenKind {
    Keyword,
    Identifier,
    QuotedIdentifier,
    StringLiteral,
    NumberLiteral,
    Punctuation,
    SubstitutionMarker,
};

/// Keywords and bare identifiers are uppercased; quoted identifiers and
/// string literals keep their original case (quotes stripped).
struct Token {
    TokenKind kind = TokenKind::Punctuation;
    std::string lexeme;
    SourcePos pos;

    bool is(TokenKind k, std::string_view text) const { return kind == k && lexeme == text; }
    bool isKeyword(std::string_view word) const { return is(TokenKind::Keyword, word); }
    bool isPunct(std::string_view p) const { return is(TokenKind::Punctuation, p); }

    friend bool operator==(const Token &, const Token &) = default;
};

bool isKeyword(std::string_view upperWord);

/// Keywords that may still be used as column names and aliases (COUNT, KEY, ...).
bool isNonReservedKeyword(std::string_view upperWord);

/// Splits one statement (terminator already removed) into tokens.
/// Throws ORA-01756 for an unterminated string literal.
std::vector<Token> tokenize(std::string_view raw);

} // namespace handysql
