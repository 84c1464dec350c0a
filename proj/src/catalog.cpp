#include "handysql/catalog.hpp"

#include "handysql/constraints.hpp"
#include "handysql/scope.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace handysql {

using namespace ast;

namespace {

const TableSchema &dualSchema() {
    static const TableSchema kDual{std::string(kDualTable), {{"DUMMY", Varchar2Type{1}, false}}};
    return kDual;
}

const TableSchema &userConstraintsSchema() {
    static const TableSchema kView{std::string(kUserConstraintsView),
                                   {{"CONSTRAINT_NAME", Varchar2Type{30}, true},
                                    {"TABLE_NAME", Varchar2Type{30}, true},
                                    {"CONSTRAINT_TYPE", Varchar2Type{1}, false}}};
    return kView;
}

std::string padRight(const std::string &s, size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string rtrim(std::string s) {
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    return s;
}

// Same kind, and nothing that could stop an existing value from fitting.
bool widens(const SqlType &from, const SqlType &to) {
    if (const auto *a = std::get_if<NumberType>(&from)) {
        const auto *b = std::get_if<NumberType>(&to);
        return b && b->scale >= a->scale && b->precision - b->scale >= a->precision - a->scale;
    }
    if (const auto *a = std::get_if<Varchar2Type>(&from)) {
        const auto *b = std::get_if<Varchar2Type>(&to);
        return b && b->maxLength >= a->maxLength;
    }
    return std::holds_alternative<DateType>(to);
}

void checkColumnsFor(const TableSchema &table, const ConstraintBody &body) {
    std::set<std::string> seen;
    for (const Ident &col : body.columns) {
        if (!table.columnIndex(col.name))
            throw OraError(ora::InvalidIdentifier, col.pos);
        if (!seen.insert(col.name).second)
            throw OraError(ora::DuplicateColumnName, col.pos);
    }
}

void checkPredicateFor(const TableSchema &table, const Predicate &pred) {
    Scope scope(table);
    resolvePredicate(pred, scope);
}

} // namespace

std::optional<size_t> TableSchema::columnIndex(std::string_view column) const {
    for (size_t i = 0; i < columns.size(); ++i)
        if (columns[i].name == column)
            return i;
    return std::nullopt;
}

char constraintTypeCode(ConstraintKind kind) {
    switch (kind) {
    case ConstraintKind::PrimaryKey:
        return 'P';
    case ConstraintKind::Unique:
        return 'U';
    default:
        return 'C';
    }
}

bool Catalog::isBuiltin(std::string_view name) { return name == kDualTable || name == kUserConstraintsView; }

const TableSchema *Catalog::findTable(std::string_view name) const {
    for (const TableSchema &t : tables_)
        if (t.name == name)
            return &t;
    return nullptr;
}

const TableSchema *Catalog::findRelation(std::string_view name) const {
    if (name == kDualTable)
        return &dualSchema();
    if (name == kUserConstraintsView)
        return &userConstraintsSchema();
    return findTable(name);
}

TableSchema &Catalog::table(const Ident &name) {
    for (TableSchema &t : tables_)
        if (t.name == name.name)
            return t;
    throw OraError(ora::TableDoesNotExist, name.pos);
}

std::vector<const ConstraintDef *> Catalog::constraintsOf(std::string_view table) const {
    std::vector<const ConstraintDef *> out;
    for (const ConstraintDef &c : constraints_)
        if (c.table == table)
            out.push_back(&c);
    return out;
}

const ConstraintDef *Catalog::primaryKeyOf(std::string_view table) const {
    for (const ConstraintDef &c : constraints_)
        if (c.table == table && c.kind == ConstraintKind::PrimaryKey)
            return &c;
    return nullptr;
}

bool Catalog::constraintNameUsed(std::string_view name) const {
    return std::any_of(constraints_.begin(), constraints_.end(),
                       [&](const ConstraintDef &c) { return c.name == name; });
}

std::string Catalog::createTable(const CreateTable &stmt) {
    if (findTable(stmt.table.name) || isBuiltin(stmt.table.name))
        throw OraError(ora::NameAlreadyUsed, stmt.table.pos);
    TableSchema schema{stmt.table.name, {}};
    for (const ColumnDef &def : stmt.columns) {
        if (schema.columnIndex(def.name.name))
            throw OraError(ora::DuplicateColumnName, def.name.pos);
        SqlType type;
        try {
            type = normalizeType(def.type);
        } catch (const OraError &e) {
            throw OraError(e.code(), def.name.pos);
        }
        schema.columns.push_back({def.name.name, std::move(type), false});
    }
    tables_.push_back(std::move(schema));
    return "Table created.";
}

std::string Catalog::describe(const Ident &name) const {
    const TableSchema *t = findRelation(name.name);
    if (!t)
        throw OraError(ora::ObjectDoesNotExist, name.pos);
    constexpr size_t kNameWidth = 30;
    constexpr size_t kNullWidth = 8;
    size_t typeWidth = 4;
    for (const Column &c : t->columns)
        typeWidth = std::max(typeWidth, typeDisplay(c.type).size());

    std::string out = rtrim(padRight("Name", kNameWidth) + " " + padRight("Null?", kNullWidth) + " Type") + "\n";
    out += std::string(kNameWidth, '-') + " " + std::string(kNullWidth, '-') + " " + std::string(typeWidth, '-') + "\n";
    for (const Column &c : t->columns) {
        out += rtrim(padRight(c.name, kNameWidth) + " " + padRight(c.notNull ? "NOT NULL" : "", kNullWidth) + " " +
                     typeDisplay(c.type)) +
               "\n";
    }
    return out;
}

std::string Catalog::addConstraint(const AlterAddConstraint &stmt, std::span<const Row> rows) {
    TableSchema &t = table(stmt.table);
    const ConstraintBody &body = stmt.body;

    if (body.kind == ConstraintBody::Kind::Fallback) {
        // The clause reads as ADD <column> ...; only an existing column name
        // gives Oracle's "already exists" answer.
        const Token &column = body.fallbackTokens.front();
        if (t.columnIndex(column.lexeme))
            throw OraError(ora::ColumnAlreadyExists, column.pos);
        throw OraError(ora::InvalidSqlStatement, column.pos);
    }

    if (constraintNameUsed(stmt.constraint.name))
        throw OraError(ora::ConstraintNameInUse, stmt.constraint.pos);

    ConstraintDef def{stmt.constraint.name, t.name, ConstraintKind::Check, {}, std::nullopt};
    switch (body.kind) {
    case ConstraintBody::Kind::PrimaryKey:
        if (primaryKeyOf(t.name))
            throw OraError(ora::OnlyOnePrimaryKey, stmt.constraint.pos);
        def.kind = ConstraintKind::PrimaryKey;
        break;
    case ConstraintBody::Kind::Unique:
        def.kind = ConstraintKind::Unique;
        break;
    default:
        def.kind = ConstraintKind::Check;
        break;
    }
    if (def.kind == ConstraintKind::Check) {
        checkPredicateFor(t, *body.check);
        def.check = body.check;
    } else {
        checkColumnsFor(t, body);
        for (const Ident &col : body.columns)
            def.columns.push_back(col.name);
    }

    if (auto v = validateExisting(t, def, rows))
        throw violationError(*v, true, stmt.constraint.pos);

    constraints_.push_back(std::move(def));
    refreshNotNullFlags(t.name);
    return "Table altered.";
}

std::string Catalog::modifyColumn(const AlterModify &stmt, std::span<const Row> rows) {
    TableSchema &t = table(stmt.table);
    auto idx = t.columnIndex(stmt.column.name);
    if (!idx)
        throw OraError(ora::InvalidIdentifier, stmt.column.pos);
    Column &col = t.columns[*idx];

    SqlType type;
    try {
        type = normalizeType(stmt.type);
    } catch (const OraError &e) {
        throw OraError(e.code(), stmt.column.pos);
    }
    if (!widens(col.type, type))
        throw OraError(ora::ModifyMustBeEmpty, stmt.column.pos);

    const ConstraintDef *pk = primaryKeyOf(t.name);
    bool inPk = pk && std::find(pk->columns.begin(), pk->columns.end(), col.name) != pk->columns.end();
    auto notNullDef = std::find_if(constraints_.begin(), constraints_.end(), [&](const ConstraintDef &c) {
        return c.table == t.name && c.kind == ConstraintKind::NotNull && c.columns.front() == col.name;
    });

    if (stmt.nullability == Nullability::NotNull) {
        if (col.notNull)
            throw OraError(ora::AlreadyNotNull, stmt.column.pos);
        ConstraintDef def{"", t.name, ConstraintKind::NotNull, {col.name}, std::nullopt};
        if (auto v = validateExisting(t, def, rows))
            throw violationError(*v, true, stmt.column.pos);
        def.name = nextSysName();
        col.type = std::move(type);
        constraints_.push_back(std::move(def));
    } else if (stmt.nullability == Nullability::Null) {
        if (!col.notNull || inPk)
            throw OraError(ora::CannotModifyToNull, stmt.column.pos);
        col.type = std::move(type);
        constraints_.erase(notNullDef);
    } else {
        col.type = std::move(type);
    }
    refreshNotNullFlags(t.name);
    return "Table altered.";
}

std::string Catalog::nextSysName() {
    for (;;) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "SYS_C%06d", sysNameCounter_++);
        if (!constraintNameUsed(buf))
            return buf;
    }
}

std::vector<Row> Catalog::userConstraintsRows() const {
    std::vector<Row> rows;
    for (const ConstraintDef &c : constraints_)
        rows.push_back({c.name, c.table, std::string(1, constraintTypeCode(c.kind))});
    return rows;
}

void Catalog::restoreTable(TableSchema schema) { tables_.push_back(std::move(schema)); }

void Catalog::restoreConstraint(ConstraintDef def) {
    std::string table = def.table;
    constraints_.push_back(std::move(def));
    refreshNotNullFlags(table);
}

void Catalog::refreshNotNullFlags(std::string_view tableName) {
    for (TableSchema &t : tables_) {
        if (t.name != tableName)
            continue;
        for (Column &c : t.columns)
            c.notNull = false;
        for (const ConstraintDef &def : constraints_) {
            if (def.table != t.name || (def.kind != ConstraintKind::PrimaryKey && def.kind != ConstraintKind::NotNull))
                continue;
            for (const std::string &name : def.columns)
                if (auto i = t.columnIndex(name))
                    t.columns[*i].notNull = true;
        }
    }
}

bool Catalog::nullabilityConsistent() const {
    for (const TableSchema &t : tables_) {
        for (const Column &c : t.columns) {
            bool required = false;
            for (const ConstraintDef &def : constraints_) {
                if (def.table == t.name &&
                    (def.kind == ConstraintKind::PrimaryKey || def.kind == ConstraintKind::NotNull) &&
                    std::find(def.columns.begin(), def.columns.end(), c.name) != def.columns.end())
                    required = true;
            }
            if (required != c.notNull)
                return false;
        }
    }
    return true;
}

} // namespace handysql
