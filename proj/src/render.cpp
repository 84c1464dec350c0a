#include "handysql/render.hpp"

#include <sstream>

namespace handysql {

namespace ast {

std::string_view aggregateName(AggregateFn fn) {
    switch (fn) {
    case AggregateFn::Avg:
        return "AVG";
    case AggregateFn::Min:
        return "MIN";
    case AggregateFn::Max:
        return "MAX";
    case AggregateFn::Sum:
        return "SUM";
    case AggregateFn::Count:
        return "COUNT";
    }
    return "COUNT";
}

SourcePos exprPos(const Expr &e) {
    return std::visit([](const auto &node) { return node.pos; }, e);
}

Predicate Predicate::comparison(Expr lhs, CompareOp op, Expr rhs, SourcePos pos) {
    Predicate p;
    p.kind = Kind::Compare;
    p.op = op;
    p.operands.push_back(std::move(lhs));
    p.operands.push_back(std::move(rhs));
    p.pos = pos;
    return p;
}

Predicate Predicate::isNull(Expr operand, bool negated, SourcePos pos) {
    Predicate p;
    p.kind = Kind::IsNull;
    p.operands.push_back(std::move(operand));
    p.negated = negated;
    p.pos = pos;
    return p;
}

Predicate Predicate::logical(Kind kind, std::vector<Predicate> children, SourcePos pos) {
    Predicate p;
    p.kind = kind;
    p.children = std::move(children);
    p.pos = pos;
    return p;
}

} // namespace ast

using namespace ast;

namespace {

std::string quoteIdent(const std::string &name) { return "\"" + name + "\""; }

std::string renderColumn(const ColumnRef &c) {
    std::string out;
    if (!c.qualifier.empty())
        out = c.qualifier + ".";
    return out + (c.quoted ? quoteIdent(c.name) : c.name);
}

std::string joinIdents(const std::vector<Ident> &ids) {
    std::string out;
    for (size_t i = 0; i < ids.size(); ++i)
        out += (i ? ", " : "") + ids[i].name;
    return out;
}

std::string renderTokenText(const Token &t) {
    switch (t.kind) {
    case TokenKind::StringLiteral:
        return renderLiteral(t.lexeme);
    case TokenKind::QuotedIdentifier:
        return quoteIdent(t.lexeme);
    case TokenKind::SubstitutionMarker:
        return "&" + t.lexeme;
    default:
        return t.lexeme;
    }
}

// Compound children are always parenthesized so the tree shape survives a reparse.
std::string renderChild(const Predicate &p) {
    bool compound = p.kind == Predicate::Kind::And || p.kind == Predicate::Kind::Or || p.kind == Predicate::Kind::Not;
    return compound ? "(" + renderPredicate(p) + ")" : renderPredicate(p);
}

std::string renderTable(const TableRef &t) { return t.alias.empty() ? t.table.name : t.table.name + " " + t.alias; }

struct StatementRenderer {
    std::string operator()(const CreateTable &s) const {
        std::string out = "CREATE TABLE " + s.table.name + " (";
        for (size_t i = 0; i < s.columns.size(); ++i)
            out += (i ? ", " : "") + s.columns[i].name.name + " " + typeSql(s.columns[i].type);
        return out + ")";
    }

    std::string operator()(const Describe &s) const { return "DESC " + s.table.name; }

    std::string operator()(const Insert &s) const {
        std::string out = "INSERT INTO " + s.table.name;
        if (!s.columns.empty())
            out += " (" + joinIdents(s.columns) + ")";
        out += " VALUES (";
        for (size_t i = 0; i < s.values.size(); ++i)
            out += (i ? ", " : "") + renderLiteral(s.values[i].value);
        return out + ")";
    }

    std::string operator()(const Select &s) const {
        std::string out = "SELECT ";
        if (s.star) {
            out += "*";
        } else {
            for (size_t i = 0; i < s.items.size(); ++i) {
                const SelectItem &item = s.items[i];
                out += (i ? ", " : "") + renderExpr(item.expr);
                if (item.alias)
                    out += " AS " + (item.aliasQuoted ? quoteIdent(*item.alias) : *item.alias);
            }
        }
        out += " FROM ";
        if (s.innerJoin) {
            out += renderTable(s.from[0]) + " INNER JOIN " + renderTable(s.from[1]) + " ON " +
                   renderPredicate(*s.joinOn);
        } else {
            for (size_t i = 0; i < s.from.size(); ++i)
                out += (i ? ", " : "") + renderTable(s.from[i]);
        }
        if (s.where)
            out += " WHERE " + renderPredicate(*s.where);
        return out;
    }

    std::string operator()(const AlterAddConstraint &s) const {
        std::string out = "ALTER TABLE " + s.table.name + " ADD CONSTRAINT " + s.constraint.name + " ";
        switch (s.body.kind) {
        case ConstraintBody::Kind::PrimaryKey:
            return out + "PRIMARY KEY (" + joinIdents(s.body.columns) + ")";
        case ConstraintBody::Kind::Unique:
            return out + "UNIQUE (" + joinIdents(s.body.columns) + ")";
        case ConstraintBody::Kind::Check:
            return out + "CHECK (" + renderPredicate(*s.body.check) + ")";
        case ConstraintBody::Kind::Fallback:
            for (size_t i = 0; i < s.body.fallbackTokens.size(); ++i)
                out += (i ? " " : "") + renderTokenText(s.body.fallbackTokens[i]);
            return out;
        }
        return out;
    }

    std::string operator()(const AlterModify &s) const {
        std::string out = "ALTER TABLE " + s.table.name + " MODIFY " + s.column.name + " " + typeSql(s.type);
        if (s.nullability == Nullability::NotNull)
            out += " NOT NULL";
        else if (s.nullability == Nullability::Null)
            out += " NULL";
        return out;
    }
};

} // namespace

std::string renderLiteral(const Value &v) {
    if (isNull(v))
        return "NULL";
    if (const auto *d = std::get_if<Decimal>(&v))
        return d->toString();
    if (const auto *s = std::get_if<std::string>(&v)) {
        std::string out = "'";
        for (char c : *s) {
            if (c == '\'')
                out += '\'';
            out += c;
        }
        return out + "'";
    }
    return "'" + formatDate(std::get<Date>(v)) + "'";
}

std::string renderExpr(const Expr &e) {
    if (const auto *c = std::get_if<ColumnRef>(&e))
        return renderColumn(*c);
    if (const auto *l = std::get_if<Literal>(&e))
        return renderLiteral(l->value);
    const auto &call = std::get<AggregateCall>(e);
    return std::string(aggregateName(call.fn)) + "(" + (call.argument ? renderColumn(*call.argument) : "*") + ")";
}

std::string renderPredicate(const Predicate &p) {
    switch (p.kind) {
    case Predicate::Kind::Compare:
        return renderExpr(p.operands[0]) + " " + std::string(compareOpSql(p.op)) + " " + renderExpr(p.operands[1]);
    case Predicate::Kind::IsNull:
        return renderExpr(p.operands[0]) + (p.negated ? " IS NOT NULL" : " IS NULL");
    case Predicate::Kind::And:
        return renderChild(p.children[0]) + " AND " + renderChild(p.children[1]);
    case Predicate::Kind::Or:
        return renderChild(p.children[0]) + " OR " + renderChild(p.children[1]);
    case Predicate::Kind::Not:
        return "NOT " + renderChild(p.children[0]);
    }
    return {};
}

std::string render(const Statement &stmt) { return std::visit(StatementRenderer{}, stmt); }

} // namespace handysql
