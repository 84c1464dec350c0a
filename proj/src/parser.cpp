#include "handysql/parser.hpp"

#include <optional>

namespace handysql {

using namespace ast;

namespace {

class Parser {
public:
    explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

    Statement statement() {
        if (tokens_.empty())
            throw OraError(ora::InvalidSqlStatement);
        const Token &first = peek();
        Statement stmt = [&]() -> Statement {
            if (first.isKeyword("CREATE"))
                return createTable();
            if (first.isKeyword("DESC") || first.isKeyword("DESCRIBE"))
                return describe();
            if (first.isKeyword("INSERT"))
                return insert();
            if (first.isKeyword("SELECT"))
                return select();
            if (first.isKeyword("ALTER"))
                return alter();
            fail();
        }();
        if (!atEnd())
            fail();
        return stmt;
    }

    SqlType standaloneType() {
        SqlType t = type();
        if (!atEnd())
            fail();
        return t;
    }

    Predicate standalonePredicate() {
        Predicate p = predicate();
        if (!atEnd())
            fail();
        return p;
    }

private:
    // -- token helpers -------------------------------------------------------

    bool atEnd() const { return index_ >= tokens_.size(); }

    const Token &peek(size_t ahead = 0) const {
        static const Token kEnd{TokenKind::Punctuation, "", {}};
        return index_ + ahead < tokens_.size() ? tokens_[index_ + ahead] : kEnd;
    }

    // Position for errors: the current token, or the last token at end of input.
    SourcePos here() const {
        if (!atEnd())
            return tokens_[index_].pos;
        return tokens_.empty() ? SourcePos{} : tokens_.back().pos;
    }

    const Token &next() { return tokens_[index_++]; }

    [[noreturn]] void fail(int code = ora::InvalidSqlStatement) const { throw OraError(code, here()); }

    bool acceptKeyword(std::string_view kw) {
        if (!atEnd() && peek().isKeyword(kw)) {
            ++index_;
            return true;
        }
        return false;
    }

    bool acceptPunct(std::string_view p) {
        if (!atEnd() && peek().isPunct(p)) {
            ++index_;
            return true;
        }
        return false;
    }

    void expectKeyword(std::string_view kw) {
        if (!acceptKeyword(kw))
            fail();
    }

    void expectPunct(std::string_view p) {
        if (!acceptPunct(p))
            fail();
    }

    bool nameToken(const Token &t) const {
        return t.kind == TokenKind::Identifier ||
               (t.kind == TokenKind::Keyword && isNonReservedKeyword(t.lexeme));
    }

    Ident name() {
        if (atEnd() || !nameToken(peek()))
            fail();
        const Token &t = next();
        return {t.lexeme, t.pos};
    }

    // -- types ---------------------------------------------------------------

    int integerArg() {
        if (atEnd() || peek().kind != TokenKind::NumberLiteral || peek().lexeme.find('.') != std::string::npos)
            fail();
        const std::string &text = peek().lexeme;
        if (text.size() > 9)
            fail(ora::PrecisionOutOfRange);
        return std::stoi(next().lexeme);
    }

    SqlType type() {
        if (acceptKeyword("INTEGER"))
            return IntegerType{};
        if (acceptKeyword("DATE"))
            return DateType{};
        if (acceptKeyword("NUMBER")) {
            if (!acceptPunct("("))
                return NumberType{38, 0, false};
            SourcePos precisionPos = here();
            int precision = integerArg();
            if (precision < 1 || precision > kMaxNumberPrecision)
                throw OraError(ora::PrecisionOutOfRange, precisionPos);
            int scale = 0;
            if (acceptPunct(","))
                scale = integerArg();
            expectPunct(")");
            return NumberType{precision, scale, true};
        }
        bool plain = !atEnd() && peek().isKeyword("VARCHAR");
        if (acceptKeyword("VARCHAR") || acceptKeyword("VARCHAR2")) {
            expectPunct("(");
            SourcePos lengthPos = here();
            int length = integerArg();
            if (length < 1)
                throw OraError(ora::InvalidSqlStatement, lengthPos);
            expectPunct(")");
            if (plain)
                return VarcharType{length};
            return Varchar2Type{length};
        }
        fail();
    }

    // -- expressions ---------------------------------------------------------

    // A slot where a value must appear holds a separator or nothing at all.
    bool missingExpression() const {
        if (atEnd())
            return true;
        const Token &t = peek();
        return t.isPunct(",") || t.isPunct(")") || t.isKeyword("FROM");
    }

    Literal literal() {
        SourcePos pos = here();
        if (missingExpression())
            fail(ora::MissingExpression);
        bool negative = false;
        if (peek().isPunct("-") || peek().isPunct("+")) {
            negative = next().lexeme == "-";
            if (atEnd() || peek().kind != TokenKind::NumberLiteral)
                fail(missingExpression() ? ora::MissingExpression : ora::InvalidSqlStatement);
        }
        const Token &t = peek();
        if (t.kind == TokenKind::NumberLiteral) {
            next();
            Decimal d = *Decimal::parse(t.lexeme);
            return {negative ? -d : d, pos};
        }
        if (t.kind == TokenKind::StringLiteral) {
            next();
            return {t.lexeme, pos};
        }
        if (t.isKeyword("NULL")) {
            next();
            return {Null{}, pos};
        }
        fail();
    }

    ColumnRef columnRef() {
        if (atEnd())
            fail(ora::MissingExpression);
        SourcePos pos = here();
        auto component = [&](bool &quoted) -> std::string {
            if (peek().kind == TokenKind::QuotedIdentifier) {
                quoted = true;
                return next().lexeme;
            }
            quoted = false;
            return name().name;
        };
        bool quoted = false;
        std::string first = component(quoted);
        if (acceptPunct(".")) {
            bool firstQuoted = quoted;
            if (firstQuoted)
                fail();
            std::string second = component(quoted);
            return {first, second, quoted, pos};
        }
        return {"", first, quoted, pos};
    }

    static std::optional<AggregateFn> aggregateKeyword(const Token &t) {
        if (t.kind != TokenKind::Keyword)
            return std::nullopt;
        if (t.lexeme == "AVG")
            return AggregateFn::Avg;
        if (t.lexeme == "MIN")
            return AggregateFn::Min;
        if (t.lexeme == "MAX")
            return AggregateFn::Max;
        if (t.lexeme == "SUM")
            return AggregateFn::Sum;
        if (t.lexeme == "COUNT")
            return AggregateFn::Count;
        return std::nullopt;
    }

    Expr expr(bool allowAggregate) {
        if (missingExpression())
            fail(ora::MissingExpression);
        const Token &t = peek();
        if (auto fn = aggregateKeyword(t); fn && peek(1).isPunct("(")) {
            if (!allowAggregate)
                fail(ora::GroupFunctionNotAllowed);
            SourcePos pos = t.pos;
            next();
            next();
            AggregateCall call{*fn, std::nullopt, pos};
            if (peek().isPunct("*")) {
                if (*fn != AggregateFn::Count)
                    fail(ora::MissingExpression);
                next();
            } else {
                if (missingExpression())
                    fail(ora::MissingExpression);
                if (aggregateKeyword(peek()) && peek(1).isPunct("("))
                    fail();
                call.argument = columnRef();
            }
            expectPunct(")");
            return call;
        }
        // Unary plus is a no-op on any operand ("=+ C.C_SROLL").
        if (t.isPunct("+") && peek(1).kind != TokenKind::NumberLiteral) {
            next();
            if (missingExpression())
                fail(ora::MissingExpression);
            return expr(allowAggregate);
        }
        if (t.kind == TokenKind::NumberLiteral || t.kind == TokenKind::StringLiteral || t.isKeyword("NULL") ||
            t.isPunct("-") || t.isPunct("+"))
            return literal();
        if (t.kind == TokenKind::QuotedIdentifier || nameToken(t))
            return columnRef();
        fail();
    }

    // -- predicates ----------------------------------------------------------

    Predicate predicate() {
        Predicate left = andTerm();
        while (!atEnd() && peek().isKeyword("OR")) {
            SourcePos pos = next().pos;
            left = Predicate::logical(Predicate::Kind::Or, {std::move(left), andTerm()}, pos);
        }
        return left;
    }

    Predicate andTerm() {
        Predicate left = notTerm();
        while (!atEnd() && peek().isKeyword("AND")) {
            SourcePos pos = next().pos;
            left = Predicate::logical(Predicate::Kind::And, {std::move(left), notTerm()}, pos);
        }
        return left;
    }

    Predicate notTerm() {
        if (!atEnd() && peek().isKeyword("NOT")) {
            SourcePos pos = next().pos;
            return Predicate::logical(Predicate::Kind::Not, {notTerm()}, pos);
        }
        return primaryPredicate();
    }

    Predicate primaryPredicate() {
        if (!atEnd() && peek().isPunct("(")) {
            next();
            Predicate inner = predicate();
            expectPunct(")");
            return inner;
        }
        SourcePos pos = here();
        Expr lhs = expr(false);
        if (acceptKeyword("IS")) {
            bool negated = acceptKeyword("NOT");
            expectKeyword("NULL");
            return Predicate::isNull(std::move(lhs), negated, pos);
        }
        if (atEnd())
            fail();
        static const std::pair<std::string_view, CompareOp> kOps[] = {
            {"=", CompareOp::Eq},  {"<>", CompareOp::Ne}, {"!=", CompareOp::Ne}, {"<", CompareOp::Lt},
            {"<=", CompareOp::Le}, {">", CompareOp::Gt},  {">=", CompareOp::Ge},
        };
        for (const auto &[text, op] : kOps) {
            if (peek().isPunct(text)) {
                next();
                Expr rhs = expr(false);
                return Predicate::comparison(std::move(lhs), op, std::move(rhs), pos);
            }
        }
        fail();
    }

    // -- statements ----------------------------------------------------------

    CreateTable createTable() {
        SourcePos pos = next().pos;
        expectKeyword("TABLE");
        CreateTable stmt{name(), {}, pos};
        expectPunct("(");
        do {
            Ident column = name();
            stmt.columns.push_back({std::move(column), type()});
        } while (acceptPunct(","));
        expectPunct(")");
        return stmt;
    }

    Describe describe() {
        SourcePos pos = next().pos;
        return {name(), pos};
    }

    Insert insert() {
        SourcePos pos = next().pos;
        expectKeyword("INTO");
        Insert stmt{name(), {}, {}, pos};
        if (acceptPunct("(")) {
            do
                stmt.columns.push_back(name());
            while (acceptPunct(","));
            expectPunct(")");
        }
        expectKeyword("VALUES");
        expectPunct("(");
        do
            stmt.values.push_back(literal());
        while (acceptPunct(","));
        expectPunct(")");
        return stmt;
    }

    SelectItem selectItem() {
        SelectItem item{expr(true), std::nullopt, false};
        bool sawAs = acceptKeyword("AS");
        if (!atEnd()) {
            const Token &t = peek();
            if (t.kind == TokenKind::QuotedIdentifier) {
                item.alias = next().lexeme;
                item.aliasQuoted = true;
            } else if (nameToken(t)) {
                item.alias = next().lexeme;
            } else if (sawAs) {
                fail(ora::FromKeywordNotFound);
            }
        } else if (sawAs) {
            fail(ora::FromKeywordNotFound);
        }
        if (!atEnd() && !peek().isPunct(",") && !peek().isKeyword("FROM"))
            fail(ora::FromKeywordNotFound);
        return item;
    }

    TableRef tableRef() {
        TableRef ref{name(), ""};
        if (!atEnd() && peek().kind == TokenKind::Identifier)
            ref.alias = next().lexeme;
        return ref;
    }

    Select select() {
        Select stmt;
        stmt.pos = next().pos;
        if (acceptPunct("*")) {
            stmt.star = true;
            if (!atEnd() && !peek().isKeyword("FROM"))
                fail(ora::FromKeywordNotFound);
        } else {
            do
                stmt.items.push_back(selectItem());
            while (acceptPunct(","));
        }
        if (!acceptKeyword("FROM"))
            fail(ora::FromKeywordNotFound);
        stmt.from.push_back(tableRef());
        if (!atEnd() && (peek().isKeyword("INNER") || peek().isKeyword("JOIN"))) {
            acceptKeyword("INNER");
            expectKeyword("JOIN");
            stmt.from.push_back(tableRef());
            expectKeyword("ON");
            stmt.innerJoin = true;
            stmt.joinOn = predicate();
        } else {
            while (acceptPunct(","))
                stmt.from.push_back(tableRef());
        }
        if (acceptKeyword("WHERE"))
            stmt.where = predicate();
        return stmt;
    }

    Statement alter() {
        SourcePos pos = next().pos;
        expectKeyword("TABLE");
        Ident table = name();
        if (acceptKeyword("MODIFY")) {
            AlterModify stmt{std::move(table), name(), {}, Nullability::Unchanged, pos};
            stmt.type = type();
            if (acceptKeyword("NOT")) {
                expectKeyword("NULL");
                stmt.nullability = Nullability::NotNull;
            } else if (acceptKeyword("NULL")) {
                stmt.nullability = Nullability::Null;
            }
            return stmt;
        }
        expectKeyword("ADD");
        expectKeyword("CONSTRAINT");
        AlterAddConstraint stmt{std::move(table), name(), {}, pos};
        ConstraintBody &body = stmt.body;
        if (acceptKeyword("PRIMARY")) {
            expectKeyword("KEY");
            body.kind = ConstraintBody::Kind::PrimaryKey;
            body.columns = columnList();
        } else if (acceptKeyword("UNIQUE")) {
            body.kind = ConstraintBody::Kind::Unique;
            body.columns = columnList();
        } else if (acceptKeyword("CHECK")) {
            body.kind = ConstraintBody::Kind::Check;
            expectPunct("(");
            body.check = predicate();
            expectPunct(")");
        } else {
            // Not a constraint body: the clause reads as an attempt to add the
            // named column, which the catalog resolves.
            if (atEnd() || !nameToken(peek()))
                fail();
            body.kind = ConstraintBody::Kind::Fallback;
            while (!atEnd())
                body.fallbackTokens.push_back(next());
        }
        return stmt;
    }

    std::vector<Ident> columnList() {
        std::vector<Ident> cols;
        expectPunct("(");
        do
            cols.push_back(name());
        while (acceptPunct(","));
        expectPunct(")");
        return cols;
    }

    std::span<const Token> tokens_;
    size_t index_ = 0;
};

} // namespace

Statement parse(std::span<const Token> tokens) { return Parser(tokens).statement(); }

Statement parseSql(std::string_view raw) {
    auto tokens = tokenize(raw);
    return parse(tokens);
}

SqlType parseType(std::string_view raw) {
    auto tokens = tokenize(raw);
    if (tokens.empty())
        throw OraError(ora::InvalidSqlStatement);
    return Parser(tokens).standaloneType();
}

Predicate parsePredicate(std::string_view raw) {
    auto tokens = tokenize(raw);
    if (tokens.empty())
        throw OraError(ora::MissingExpression);
    return Parser(tokens).standalonePredicate();
}

} // namespace handysql
