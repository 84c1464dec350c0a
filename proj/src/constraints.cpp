#include "handysql/constraints.hpp"

#include "handysql/scope.hpp"

namespace handysql {

namespace {

std::vector<size_t> keyIndexes(const TableSchema &table, const ConstraintDef &c) {
    std::vector<size_t> idx;
    for (const std::string &col : c.columns)
        idx.push_back(*table.columnIndex(col));
    return idx;
}

std::optional<Violation> nullCheck(const TableSchema &table, const ConstraintDef &c, const Row &row,
                                   size_t ordinal) {
    if (c.kind != ConstraintKind::NotNull && c.kind != ConstraintKind::PrimaryKey)
        return std::nullopt;
    for (size_t i : keyIndexes(table, c)) {
        if (isNull(row[i]))
            return Violation{&c, ViolationKind::NullColumn, ordinal, table.columns[i].name, {}};
    }
    return std::nullopt;
}

bool sameKey(const Row &a, const Row &b, const std::vector<size_t> &idx) {
    for (size_t i : idx) {
        if (isNull(a[i]) || isNull(b[i]))
            return false;
        if (compare(a[i], b[i], CompareOp::Eq) != Tristate::True)
            return false;
    }
    return true;
}

std::optional<Violation> valueCheck(const TableSchema &table, const ConstraintDef &c, std::span<const Row> others,
                                    const Row &row) {
    if (c.kind == ConstraintKind::PrimaryKey || c.kind == ConstraintKind::Unique) {
        auto idx = keyIndexes(table, c);
        for (size_t r = 0; r < others.size(); ++r) {
            if (sameKey(others[r], row, idx)) {
                std::vector<Value> key;
                for (size_t i : idx)
                    key.push_back(row[i]);
                return Violation{&c, ViolationKind::DuplicateKey, r, {}, std::move(key)};
            }
        }
    } else if (c.kind == ConstraintKind::Check) {
        Scope scope(table);
        if (evalPredicate(*c.check, scope, row) == Tristate::False)
            return Violation{&c, ViolationKind::CheckFailed, others.size(), {}, {}};
    }
    return std::nullopt;
}

} // namespace

std::optional<Violation> checkRow(const Catalog &cat, const TableSchema &table, std::span<const Row> existing,
                                  const Row &candidate) {
    auto defs = cat.constraintsOf(table.name);
    for (const ConstraintDef *c : defs)
        if (auto v = nullCheck(table, *c, candidate, existing.size()))
            return v;
    for (const ConstraintDef *c : defs)
        if (auto v = valueCheck(table, *c, existing, candidate))
            return v;
    return std::nullopt;
}

std::optional<Violation> validateExisting(const TableSchema &table, const ConstraintDef &constraint,
                                          std::span<const Row> rows) {
    for (size_t r = 0; r < rows.size(); ++r) {
        if (auto v = nullCheck(table, constraint, rows[r], r))
            return v;
    }
    for (size_t r = 0; r < rows.size(); ++r) {
        if (auto v = valueCheck(table, constraint, rows.subspan(0, r), rows[r])) {
            if (v->kind == ViolationKind::CheckFailed)
                v->row = r;
            return v;
        }
    }
    return std::nullopt;
}

OraError violationError(const Violation &v, bool existingRows, SourcePos pos) {
    return OraError(violationCode(v.constraint->kind, v.kind, existingRows), pos);
}

} // namespace handysql
