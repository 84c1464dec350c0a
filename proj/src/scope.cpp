#include "handysql/scope.hpp"

namespace handysql {

using namespace ast;

void Scope::add(std::string visibleName, const TableSchema &schema) {
    entries_.push_back({std::move(visibleName), &schema, width_});
    width_ += schema.columns.size();
}

ResolvedColumn Scope::resolve(const ColumnRef &ref) const {
    std::optional<ResolvedColumn> found;
    for (const Entry &e : entries_) {
        if (!ref.qualifier.empty() && e.visibleName != ref.qualifier)
            continue;
        auto idx = e.schema->columnIndex(ref.name);
        if (!idx)
            continue;
        if (found)
            throw OraError(ora::ColumnAmbiguous, ref.pos);
        found = ResolvedColumn{e.schema, *idx, e.offset + *idx};
    }
    if (!found)
        throw OraError(ora::InvalidIdentifier, ref.pos);
    return *found;
}

Value evalScalar(const Expr &e, const Scope &scope, std::span<const Value> row) {
    if (const auto *c = std::get_if<ColumnRef>(&e))
        return row[scope.resolve(*c).index];
    if (const auto *l = std::get_if<Literal>(&e))
        return l->value;
    throw OraError(ora::GroupFunctionNotAllowed, exprPos(e));
}

namespace {

bool isDateColumn(const Expr &e, const Scope &scope) {
    const auto *c = std::get_if<ColumnRef>(&e);
    if (!c)
        return false;
    ResolvedColumn r = scope.resolve(*c);
    return std::holds_alternative<DateType>(r.table->columns[r.column].type);
}

Value operand(const Expr &e, const Expr &other, const Scope &scope, std::span<const Value> row) {
    Value v = evalScalar(e, scope, row);
    if (std::holds_alternative<Literal>(e) && std::holds_alternative<std::string>(v) && isDateColumn(other, scope))
        return coerce(v, DateType{}, exprPos(e));
    return v;
}

} // namespace

Tristate evalPredicate(const Predicate &p, const Scope &scope, std::span<const Value> row) {
    switch (p.kind) {
    case Predicate::Kind::Compare: {
        Value a = operand(p.operands[0], p.operands[1], scope, row);
        Value b = operand(p.operands[1], p.operands[0], scope, row);
        return compare(a, b, p.op, exprPos(p.operands[1]));
    }
    case Predicate::Kind::IsNull: {
        bool null = isNull(evalScalar(p.operands[0], scope, row));
        return fromBool(p.negated ? !null : null);
    }
    case Predicate::Kind::And:
        return evalPredicate(p.children[0], scope, row) && evalPredicate(p.children[1], scope, row);
    case Predicate::Kind::Or:
        return evalPredicate(p.children[0], scope, row) || evalPredicate(p.children[1], scope, row);
    case Predicate::Kind::Not:
        return !evalPredicate(p.children[0], scope, row);
    }
    return Tristate::Unknown;
}

void resolvePredicate(const Predicate &p, const Scope &scope) {
    for (const Expr &e : p.operands) {
        if (const auto *c = std::get_if<ColumnRef>(&e))
            scope.resolve(*c);
        else if (std::holds_alternative<AggregateCall>(e))
            throw OraError(ora::GroupFunctionNotAllowed, exprPos(e));
    }
    for (const Predicate &child : p.children)
        resolvePredicate(child, scope);
}

} // namespace handysql
