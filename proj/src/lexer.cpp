#include "handysql/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace handysql {

namespace {

constexpr std::array<std::string_view, 37> kKeywords = {
    "ADD",    "ALTER",    "AND",      "AS",   "AVG",     "CHECK",  "CONSTRAINT", "COUNT",   "CREATE",
    "DATE",   "DESC",     "DESCRIBE", "FROM", "INNER",   "INSERT", "INTEGER",    "INTO",    "IS",
    "JOIN",   "KEY",      "MAX",      "MIN",  "MODIFY",  "NOT",    "NULL",       "NUMBER",  "ON",
    "OR",     "PRIMARY",  "SELECT",   "SUM",  "TABLE",   "UNIQUE", "VALUES",     "VARCHAR", "VARCHAR2", "WHERE",
};

constexpr std::array<std::string_view, 7> kNonReserved = {"AVG", "COUNT", "DESCRIBE", "KEY", "MAX", "MIN", "SUM"};

constexpr std::array<std::string_view, 6> kTwoCharPunct = {"<>", "!=", "<=", ">=", "||", ":="};

bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

bool identChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '$' || c == '#';
}

bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

} // namespace

bool isKeyword(std::string_view upperWord) {
    return std::find(kKeywords.begin(), kKeywords.end(), upperWord) != kKeywords.end();
}

bool isNonReservedKeyword(std::string_view upperWord) {
    return std::find(kNonReserved.begin(), kNonReserved.end(), upperWord) != kNonReserved.end();
}

std::vector<Token> tokenize(std::string_view raw) {
    std::vector<Token> out;
    int line = 1, column = 1;
    size_t i = 0;

    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n && i < raw.size(); ++k, ++i) {
            if (raw[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };

    while (i < raw.size()) {
        char c = raw[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        // "--" comments run to end of line.
        if (c == '-' && i + 1 < raw.size() && raw[i + 1] == '-') {
            while (i < raw.size() && raw[i] != '\n')
                advance(1);
            continue;
        }
        SourcePos pos{line, column};

        if (identStart(c)) {
            size_t j = i;
            while (j < raw.size() && identChar(raw[j]))
                ++j;
            std::string word = upper(raw.substr(i, j - i));
            TokenKind kind = isKeyword(word) ? TokenKind::Keyword : TokenKind::Identifier;
            out.push_back({kind, std::move(word), pos});
            advance(j - i);
            continue;
        }

        if (digit(c) || (c == '.' && i + 1 < raw.size() && digit(raw[i + 1]))) {
            size_t j = i;
            while (j < raw.size() && digit(raw[j]))
                ++j;
            if (j < raw.size() && raw[j] == '.') {
                ++j;
                while (j < raw.size() && digit(raw[j]))
                    ++j;
            }
            out.push_back({TokenKind::NumberLiteral, std::string(raw.substr(i, j - i)), pos});
            advance(j - i);
            continue;
        }

        if (c == '\'' || c == '"') {
            std::string text;
            size_t j = i + 1;
            bool closed = false;
            while (j < raw.size()) {
                if (raw[j] == c) {
                    // doubled quote inside a string literal is an escaped quote
                    if (c == '\'' && j + 1 < raw.size() && raw[j + 1] == '\'') {
                        text.push_back('\'');
                        j += 2;
                        continue;
                    }
                    closed = true;
                    break;
                }
                text.push_back(raw[j]);
                ++j;
            }
            if (!closed)
                throw OraError(c == '\'' ? ora::QuotedStringNotTerminated : ora::MissingDoubleQuote, pos);
            out.push_back({c == '\'' ? TokenKind::StringLiteral : TokenKind::QuotedIdentifier, std::move(text), pos});
            advance(j + 1 - i);
            continue;
        }

        if (c == '&' && i + 1 < raw.size() && identChar(raw[i + 1])) {
            size_t j = i + 1;
            while (j < raw.size() && identChar(raw[j]))
                ++j;
            out.push_back({TokenKind::SubstitutionMarker, upper(raw.substr(i + 1, j - i - 1)), pos});
            advance(j - i);
            continue;
        }

        if (i + 1 < raw.size()) {
            std::string_view two = raw.substr(i, 2);
            if (std::find(kTwoCharPunct.begin(), kTwoCharPunct.end(), two) != kTwoCharPunct.end()) {
                out.push_back({TokenKind::Punctuation, std::string(two), pos});
                advance(2);
                continue;
            }
        }
        out.push_back({TokenKind::Punctuation, std::string(1, c), pos});
        advance(1);
    }
    return out;
}

} // namespace handysql
