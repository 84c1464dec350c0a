#pragma once

#include "handysql/ast.hpp"

#include <string>

namespace handysql {

/// Canonical single-line SQL for a statement; parses back to an equal AST.
std::string render(const ast::Statement &stmt);

std::string renderExpr(const ast::Expr &e);
std::string renderPredicate(const ast::Predicate &p);
std::string renderLiteral(const Value &v);

} // namespace handysql
