#pragma once

#include "handysql/ast.hpp"
#include "handysql/errors.hpp"
#include "handysql/value.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace handysql {

using Row = std::vector<Value>;

struct Column {
    std::string name;
    SqlType type;
    bool notNull = false;
    friend bool operator==(const Column &, const Column &) = default;
};

/// Column order is creation order, which is also DESC and SELECT * order.
struct TableSchema {
    std::string name;
    std::vector<Column> columns;

    std::optional<size_t> columnIndex(std::string_view column) const;
    friend bool operator==(const TableSchema &, const TableSchema &) = default;
};

struct ConstraintDef {
    std::string name;
    std::string table;
    ConstraintKind kind = ConstraintKind::Check;
    std::vector<std::string> columns;   // PrimaryKey, Unique; NotNull holds exactly one
    std::optional<ast::Predicate> check; // Check

    friend bool operator==(const ConstraintDef &, const ConstraintDef &) = default;
};

/// 'P', 'U' or 'C' (NOT NULL constraints report as 'C').
char constraintTypeCode(ConstraintKind kind);

inline constexpr int kFirstSysNameCounter = 5545;
inline constexpr std::string_view kDualTable = "DUAL";
inline constexpr std::string_view kUserConstraintsView = "USER_CONSTRAINTS";

/// Schema state: tables, constraints, and the SYS_C name counter.
///
/// Names are stored uppercase. Operations that must look at stored rows
/// (adding a constraint, tightening nullability) receive them from the caller;
/// the catalog never owns row data.
class Catalog {
public:
    std::string createTable(const ast::CreateTable &stmt);

    /// Fixed-width DESC listing; throws ORA-04043 for an unknown object.
    std::string describe(const ast::Ident &table) const;

    std::string addConstraint(const ast::AlterAddConstraint &stmt, std::span<const Row> rows);
    std::string modifyColumn(const ast::AlterModify &stmt, std::span<const Row> rows);

    /// "SYS_C" + 6-digit counter; skips names a user has already taken.
    std::string nextSysName();

    /// USER_CONSTRAINTS as rows of (CONSTRAINT_NAME, TABLE_NAME, CONSTRAINT_TYPE).
    std::vector<Row> userConstraintsRows() const;

    /// User tables only.
    const TableSchema *findTable(std::string_view name) const;
    /// User tables plus the built-in DUAL and USER_CONSTRAINTS relations.
    const TableSchema *findRelation(std::string_view name) const;
    static bool isBuiltin(std::string_view name);

    const std::vector<TableSchema> &tables() const { return tables_; }
    const std::vector<ConstraintDef> &constraints() const { return constraints_; }
    std::vector<const ConstraintDef *> constraintsOf(std::string_view table) const;
    const ConstraintDef *primaryKeyOf(std::string_view table) const;

    int sysNameCounter() const { return sysNameCounter_; }

    // -- restore path used by persistence; no row validation here ----------
    void restoreTable(TableSchema schema);
    void restoreConstraint(ConstraintDef def);
    void restoreSysNameCounter(int counter) { sysNameCounter_ = counter; }

    /// NOT NULL flags equal (PK member or NOTNULL constraint) for every column.
    bool nullabilityConsistent() const;

private:
    TableSchema &table(const ast::Ident &name);
    bool constraintNameUsed(std::string_view name) const;
    void refreshNotNullFlags(std::string_view table);

    std::vector<TableSchema> tables_;
    std::vector<ConstraintDef> constraints_;
    int sysNameCounter_ = kFirstSysNameCounter;
};

} // namespace handysql
