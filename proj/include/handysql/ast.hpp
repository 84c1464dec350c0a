#pragma once

#include "handysql/errors.hpp"
#include "handysql/lexer.hpp"
#include "handysql/value.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

// Parsed statements. Every node keeps the SourcePos of its defining token;
// SourcePos compares equal unconditionally, so defaulted operator== gives
// position-insensitive AST equality.

namespace handysql::ast {

struct Ident {
    std::string name;
    SourcePos pos;
    friend bool operator==(const Ident &, const Ident &) = default;
};

struct ColumnRef {
    std::string qualifier; // empty when unqualified
    std::string name;
    bool quoted = false;
    SourcePos pos;
    friend bool operator==(const ColumnRef &, const ColumnRef &) = default;
};

struct Literal {
    Value value;
    SourcePos pos;
    friend bool operator==(const Literal &, const Literal &) = default;
};

enum class AggregateFn { Avg, Min, Max, Sum, Count };

std::string_view aggregateName(AggregateFn fn);

struct AggregateCall {
    AggregateFn fn = AggregateFn::Count;
    std::optional<ColumnRef> argument; // nullopt means "*"
    SourcePos pos;
    friend bool operator==(const AggregateCall &, const AggregateCall &) = default;
};

using Expr = std::variant<ColumnRef, Literal, AggregateCall>;

SourcePos exprPos(const Expr &e);

struct Predicate {
    enum class Kind { Compare, IsNull, And, Or, Not };

    Kind kind = Kind::Compare;
    CompareOp op = CompareOp::Eq;  // Compare
    std::vector<Expr> operands;    // Compare: 2, IsNull: 1
    bool negated = false;          // IS NOT NULL
    std::vector<Predicate> children; // And/Or: 2, Not: 1
    SourcePos pos;

    static Predicate comparison(Expr lhs, CompareOp op, Expr rhs, SourcePos pos);
    static Predicate isNull(Expr operand, bool negated, SourcePos pos);
    static Predicate logical(Kind kind, std::vector<Predicate> children, SourcePos pos);

    friend bool operator==(const Predicate &, const Predicate &) = default;
};

struct ColumnDef {
    Ident name;
    SqlType type; // as written; normalization is the catalog's job
    friend bool operator==(const ColumnDef &, const ColumnDef &) = default;
};

struct CreateTable {
    Ident table;
    std::vector<ColumnDef> columns;
    SourcePos pos;
    friend bool operator==(const CreateTable &, const CreateTable &) = default;
};

struct Describe {
    Ident table;
    SourcePos pos;
    friend bool operator==(const Describe &, const Describe &) = default;
};

struct Insert {
    Ident table;
    std::vector<Ident> columns; // empty: positional insert
    std::vector<Literal> values;
    SourcePos pos;
    friend bool operator==(const Insert &, const Insert &) = default;
};

struct SelectItem {
    Expr expr;
    std::optional<std::string> alias;
    bool aliasQuoted = false;
    friend bool operator==(const SelectItem &, const SelectItem &) = default;
};

struct TableRef {
    Ident table;
    std::string alias; // empty when absent
    friend bool operator==(const TableRef &, const TableRef &) = default;
};

struct Select {
    bool star = false;
    std::vector<SelectItem> items;
    std::vector<TableRef> from;
    bool innerJoin = false;            // "A INNER JOIN B ON pred"; from has 2 entries
    std::optional<Predicate> joinOn;
    std::optional<Predicate> where;
    SourcePos pos;
    friend bool operator==(const Select &, const Select &) = default;
};

struct ConstraintBody {
    enum class Kind { PrimaryKey, Unique, Check, Fallback };

    Kind kind = Kind::PrimaryKey;
    std::vector<Ident> columns;      // PrimaryKey, Unique
    std::optional<Predicate> check;  // Check
    // Fallback: the clause was not a constraint body. The first token names
    // the column the clause tries to add; the rest is kept for rendering.
    std::vector<Token> fallbackTokens;
    friend bool operator==(const ConstraintBody &, const ConstraintBody &) = default;
};

struct AlterAddConstraint {
    Ident table;
    Ident constraint;
    ConstraintBody body;
    SourcePos pos;
    friend bool operator==(const AlterAddConstraint &, const AlterAddConstraint &) = default;
};

enum class Nullability { Unchanged, NotNull, Null };

struct AlterModify {
    Ident table;
    Ident column;
    SqlType type;
    Nullability nullability = Nullability::Unchanged;
    SourcePos pos;
    friend bool operator==(const AlterModify &, const AlterModify &) = default;
};

using Statement = std::variant<CreateTable, Describe, Insert, Select, AlterAddConstraint, AlterModify>;

} // namespace handysql::ast
