#pragma once

#include "handysql/ast.hpp"
#include "handysql/lexer.hpp"

#include <span>
#include <string_view>

namespace handysql {

/// Recursive descent over one statement's tokens, one token of lookahead.
///
/// Error codes follow sqlplus where the behaviour is known: an empty slot
/// where a value belongs is ORA-00936, anything but "," or FROM after a
/// select item (a quoted 'alias' included) is ORA-00923, and everything else
/// the grammar rejects is the generic ORA-00900.
ast::Statement parse(std::span<const Token> tokens);

/// tokenize() followed by parse().
ast::Statement parseSql(std::string_view raw);

/// A standalone type such as "NUMBER(7,2)" or "VARCHAR2(20)".
SqlType parseType(std::string_view raw);

/// A standalone predicate such as "S_MARKS >= 60".
ast::Predicate parsePredicate(std::string_view raw);

} // namespace handysql
