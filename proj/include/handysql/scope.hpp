#pragma once

#include "handysql/ast.hpp"
#include "handysql/catalog.hpp"

#include <span>
#include <string>
#include <vector>

namespace handysql {

struct ResolvedColumn {
    const TableSchema *table = nullptr;
    size_t column = 0; // index within table->columns
    size_t index = 0;  // index within the concatenated scope row
};

/// Name resolution for the tables of one FROM clause (or the single table a
/// CHECK constraint belongs to). Rows evaluated against a scope are the
/// concatenation of each table's columns in scope order.
class Scope {
public:
    Scope() = default;
    explicit Scope(const TableSchema &single) { add(single.name, single); }

    /// visibleName is the alias when one was given, else the table name.
    void add(std::string visibleName, const TableSchema &schema);

    /// Qualified refs go through the visible name; unqualified refs must hit
    /// exactly one column. ORA-00904 on no match, ORA-00918 on several.
    ResolvedColumn resolve(const ast::ColumnRef &ref) const;

    size_t width() const { return width_; }

    struct Entry {
        std::string visibleName;
        const TableSchema *schema;
        size_t offset;
    };
    const std::vector<Entry> &entries() const { return entries_; }

private:
    std::vector<Entry> entries_;
    size_t width_ = 0;
};

/// Column refs and literals only; aggregates are the executor's business.
Value evalScalar(const ast::Expr &e, const Scope &scope, std::span<const Value> row);

/// Three-valued evaluation. A string literal compared with a DATE column is
/// read as a date first.
Tristate evalPredicate(const ast::Predicate &p, const Scope &scope, std::span<const Value> row);

/// Resolve every column the predicate mentions, raising name errors up front.
void resolvePredicate(const ast::Predicate &p, const Scope &scope);

} // namespace handysql
