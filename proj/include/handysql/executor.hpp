#pragma once

#include "handysql/ast.hpp"
#include "handysql/catalog.hpp"
#include "handysql/scope.hpp"

#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace handysql {

struct ResultSet {
    std::vector<std::string> headers;
    std::vector<bool> numeric; // right-align flag per column
    std::vector<Row> rows;

    friend bool operator==(const ResultSet &, const ResultSet &) = default;
};

/// Rows of one user table in insertion order.
struct StoredTable {
    std::vector<Row> rows;
    friend bool operator==(const StoredTable &, const StoredTable &) = default;
};

/// One database: catalog plus row storage. Single-owner, no internal locking.
class Database {
public:
    Catalog &catalog() { return catalog_; }
    const Catalog &catalog() const { return catalog_; }

    std::span<const Row> rows(std::string_view table) const;
    /// Raw append used when restoring snapshots; no coercion or constraint checks.
    void appendRowUnchecked(std::string_view table, Row row);
    void replaceRows(std::string_view table, std::vector<Row> rows);

    /// Rows of a relation visible to SELECT, built-ins included.
    std::vector<Row> relationRows(std::string_view name) const;

    const std::map<std::string, StoredTable, std::less<>> &storage() const { return storage_; }

private:
    friend class Executor;
    Catalog catalog_;
    std::map<std::string, StoredTable, std::less<>> storage_;
};

/// A finished statement: a feedback line, a query result, or a DESC listing.
struct Feedback {
    std::string text;
};
struct Listing {
    std::string text;
};
using Outcome = std::variant<Feedback, ResultSet, Listing>;

class Executor {
public:
    explicit Executor(Database &db) : db_(db) {}

    Outcome execute(const ast::Statement &stmt);

    std::string executeInsert(const ast::Insert &stmt);
    ResultSet executeSelect(const ast::Select &stmt) const;

private:
    Database &db_;
};

/// Tokenize, parse, execute. Errors carry the statement text for rendering.
Outcome executeSql(Database &db, std::string_view text);

/// NULLs are skipped; COUNT of nothing is 0, every other aggregate of nothing
/// is NULL. AVG divides exactly and rounds half up to 38 significant digits.
/// `countStar` makes COUNT count every input, NULL or not.
Value evalAggregate(ast::AggregateFn fn, std::span<const Value> values, bool countStar = false);

/// Column resolution against a FROM clause's scope (see Scope::resolve).
ResolvedColumn resolveColumn(const ast::ColumnRef &ref, const Scope &scope);

inline constexpr int kAvgSignificantDigits = 38;

} // namespace handysql
