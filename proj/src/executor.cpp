#include "handysql/executor.hpp"

#include "handysql/constraints.hpp"
#include "handysql/parser.hpp"
#include "handysql/render.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace handysql {

using namespace ast;

// ---------------------------------------------------------------------------
// Database

std::span<const Row> Database::rows(std::string_view table) const {
    auto it = storage_.find(table);
    if (it == storage_.end())
        return {};
    return it->second.rows;
}

void Database::appendRowUnchecked(std::string_view table, Row row) {
    storage_[std::string(table)].rows.push_back(std::move(row));
}

void Database::replaceRows(std::string_view table, std::vector<Row> rows) {
    storage_[std::string(table)].rows = std::move(rows);
}

std::vector<Row> Database::relationRows(std::string_view name) const {
    if (name == kDualTable)
        return {Row{std::string("X")}};
    if (name == kUserConstraintsView)
        return catalog_.userConstraintsRows();
    auto r = rows(name);
    return {r.begin(), r.end()};
}

// ---------------------------------------------------------------------------
// Aggregates

Value evalAggregate(AggregateFn fn, std::span<const Value> values, bool countStar) {
    if (fn == AggregateFn::Count) {
        if (countStar)
            return Decimal(static_cast<std::int64_t>(values.size()));
        auto n = std::count_if(values.begin(), values.end(), [](const Value &v) { return !isNull(v); });
        return Decimal(static_cast<std::int64_t>(n));
    }

    std::optional<Value> best;
    Decimal sum;
    std::int64_t count = 0;
    for (const Value &v : values) {
        if (isNull(v))
            continue;
        ++count;
        if (fn == AggregateFn::Sum || fn == AggregateFn::Avg) {
            const auto *d = std::get_if<Decimal>(&v);
            if (!d)
                throw OraError(ora::InvalidNumber);
            sum = sum + *d;
        } else if (!best) {
            best = v;
        } else {
            auto ord = orderValues(v, *best);
            if ((fn == AggregateFn::Min && ord < 0) || (fn == AggregateFn::Max && ord > 0))
                best = v;
        }
    }
    if (count == 0)
        return Null{};
    switch (fn) {
    case AggregateFn::Sum:
        return sum;
    case AggregateFn::Avg:
        return Decimal::divide(sum, count, kAvgSignificantDigits).value;
    default:
        return *best;
    }
}

ResolvedColumn resolveColumn(const ColumnRef &ref, const Scope &scope) { return scope.resolve(ref); }

// ---------------------------------------------------------------------------
// Executor

Outcome Executor::execute(const Statement &stmt) {
    Catalog &cat = db_.catalog_;
    return std::visit(
        [&](const auto &s) -> Outcome {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CreateTable>) {
                Feedback f{cat.createTable(s)};
                db_.storage_[s.table.name];
                return f;
            } else if constexpr (std::is_same_v<T, Describe>) {
                return Listing{cat.describe(s.table)};
            } else if constexpr (std::is_same_v<T, Insert>) {
                return Feedback{executeInsert(s)};
            } else if constexpr (std::is_same_v<T, Select>) {
                return executeSelect(s);
            } else if constexpr (std::is_same_v<T, AlterAddConstraint>) {
                return Feedback{cat.addConstraint(s, db_.rows(s.table.name))};
            } else {
                return Feedback{cat.modifyColumn(s, db_.rows(s.table.name))};
            }
        },
        stmt);
}

std::string Executor::executeInsert(const Insert &stmt) {
    const TableSchema *table = db_.catalog_.findTable(stmt.table.name);
    if (!table)
        throw OraError(ora::TableDoesNotExist, stmt.table.pos);

    std::vector<size_t> targets;
    if (stmt.columns.empty()) {
        for (size_t i = 0; i < table->columns.size(); ++i)
            targets.push_back(i);
    } else {
        std::set<size_t> seen;
        for (const Ident &col : stmt.columns) {
            auto idx = table->columnIndex(col.name);
            if (!idx)
                throw OraError(ora::InvalidIdentifier, col.pos);
            if (!seen.insert(*idx).second)
                throw OraError(ora::DuplicateColumnName, col.pos);
            targets.push_back(*idx);
        }
    }
    if (stmt.values.size() > targets.size())
        throw OraError(ora::TooManyValues, stmt.values[targets.size()].pos);
    if (stmt.values.size() < targets.size())
        throw OraError(ora::NotEnoughValues, stmt.values.empty() ? stmt.pos : stmt.values.back().pos);

    Row row(table->columns.size(), Null{});
    for (size_t i = 0; i < targets.size(); ++i) {
        const Literal &lit = stmt.values[i];
        row[targets[i]] = coerce(lit.value, table->columns[targets[i]].type, lit.pos);
    }

    auto &stored = db_.storage_[table->name].rows;
    if (auto v = checkRow(db_.catalog_, *table, stored, row))
        throw violationError(*v, false, stmt.pos);
    stored.push_back(std::move(row));
    return "1 row created.";
}

namespace {

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

bool isNumberColumn(const ResolvedColumn &c) {
    return std::holds_alternative<NumberType>(c.table->columns[c.column].type);
}

Row concat(const Row &a, const Row &b) {
    Row out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace

ResultSet Executor::executeSelect(const Select &stmt) const {
    // Scope and source relations.
    Scope scope;
    std::vector<std::vector<Row>> sources;
    for (const TableRef &ref : stmt.from) {
        const TableSchema *schema = db_.catalog_.findRelation(ref.table.name);
        if (!schema)
            throw OraError(ora::TableDoesNotExist, ref.table.pos);
        scope.add(ref.alias.empty() ? ref.table.name : ref.alias, *schema);
        sources.push_back(db_.relationRows(ref.table.name));
    }

    // Name errors surface before any row is touched.
    if (stmt.joinOn)
        resolvePredicate(*stmt.joinOn, scope);
    if (stmt.where)
        resolvePredicate(*stmt.where, scope);
    bool aggregate = false;
    for (const SelectItem &item : stmt.items) {
        if (const auto *c = std::get_if<ColumnRef>(&item.expr))
            scope.resolve(*c);
        if (const auto *a = std::get_if<AggregateCall>(&item.expr)) {
            aggregate = true;
            if (a->argument)
                scope.resolve(*a->argument);
        }
    }
    if (aggregate) {
        for (const SelectItem &item : stmt.items)
            if (std::holds_alternative<ColumnRef>(item.expr))
                throw OraError(ora::NotSingleGroup, exprPos(item.expr));
    }

    // FROM: nested loops, leftmost relation outermost.
    std::vector<Row> joined;
    if (stmt.innerJoin) {
        for (const Row &l : sources[0])
            for (const Row &r : sources[1]) {
                Row combined = concat(l, r);
                if (evalPredicate(*stmt.joinOn, scope, combined) == Tristate::True)
                    joined.push_back(std::move(combined));
            }
    } else {
        joined.push_back({});
        for (const auto &source : sources) {
            std::vector<Row> next;
            for (const Row &partial : joined)
                for (const Row &r : source)
                    next.push_back(concat(partial, r));
            joined = std::move(next);
        }
    }

    std::vector<Row> filtered;
    for (Row &row : joined)
        if (!stmt.where || evalPredicate(*stmt.where, scope, row) == Tristate::True)
            filtered.push_back(std::move(row));

    ResultSet rs;
    if (stmt.star) {
        for (const auto &entry : scope.entries())
            for (const Column &c : entry.schema->columns) {
                rs.headers.push_back(c.name);
                rs.numeric.push_back(std::holds_alternative<NumberType>(c.type));
            }
        rs.rows = std::move(filtered);
        return rs;
    }

    for (const SelectItem &item : stmt.items) {
        std::string header;
        bool numeric = false;
        if (const auto *c = std::get_if<ColumnRef>(&item.expr)) {
            header = c->name;
            numeric = isNumberColumn(scope.resolve(*c));
        } else if (const auto *l = std::get_if<Literal>(&item.expr)) {
            header = upper(renderExpr(item.expr));
            numeric = std::holds_alternative<Decimal>(l->value);
        } else {
            const auto &a = std::get<AggregateCall>(item.expr);
            header = upper(renderExpr(item.expr));
            numeric = a.fn == AggregateFn::Count || a.fn == AggregateFn::Sum || a.fn == AggregateFn::Avg ||
                      isNumberColumn(scope.resolve(*a.argument));
        }
        rs.headers.push_back(item.alias ? *item.alias : header);
        rs.numeric.push_back(numeric);
    }

    if (aggregate) {
        Row out;
        for (const SelectItem &item : stmt.items) {
            if (const auto *a = std::get_if<AggregateCall>(&item.expr)) {
                std::vector<Value> column;
                for (const Row &row : filtered)
                    column.push_back(a->argument ? row[scope.resolve(*a->argument).index] : Value(Null{}));
                try {
                    out.push_back(evalAggregate(a->fn, column, !a->argument));
                } catch (const OraError &e) {
                    throw OraError(e.code(), a->pos);
                }
            } else {
                out.push_back(std::get<Literal>(item.expr).value);
            }
        }
        rs.rows.push_back(std::move(out));
        return rs;
    }

    for (const Row &row : filtered) {
        Row out;
        for (const SelectItem &item : stmt.items)
            out.push_back(evalScalar(item.expr, scope, row));
        rs.rows.push_back(std::move(out));
    }
    return rs;
}

Outcome executeSql(Database &db, std::string_view text) {
    try {
        Statement stmt = parseSql(text);
        return Executor(db).execute(stmt);
    } catch (OraError &e) {
        e.setStatementText(std::string(text));
        throw;
    }
}

} // namespace handysql
