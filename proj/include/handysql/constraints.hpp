#pragma once

#include "handysql/catalog.hpp"

#include <optional>
#include <span>

namespace handysql {

struct Violation {
    const ConstraintDef *constraint = nullptr;
    ViolationKind kind = ViolationKind::CheckFailed;
    // Row ordinal (0-based, insertion order) of the offending stored row, or of
    // the stored row the candidate collides with.
    size_t row = 0;
    std::string column;   // NullColumn
    std::vector<Value> key; // DuplicateKey
};

/// Checks a coerced candidate row against every constraint of its table.
///
/// NOT NULL checks (NOTNULL constraints and primary key columns) run first in
/// constraint creation order, then key uniqueness and CHECK predicates in
/// creation order. Key tuples with any NULL never collide; CHECK passes on
/// UNKNOWN.
std::optional<Violation> checkRow(const Catalog &cat, const TableSchema &table, std::span<const Row> existing,
                                  const Row &candidate);

/// Would `constraint` hold over the rows already stored?
std::optional<Violation> validateExisting(const TableSchema &table, const ConstraintDef &constraint,
                                          std::span<const Row> rows);

/// The ORA error a violation surfaces as.
OraError violationError(const Violation &v, bool existingRows, SourcePos pos = {});

} // namespace handysql
