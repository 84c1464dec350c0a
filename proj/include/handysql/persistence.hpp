#pragma once

#include "handysql/executor.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace handysql {

/// Snapshot files are line-based text:
///
///   HANDYDB 1
///   TABLE <name>
///   COL <name> <type> NULL|NOTNULL
///   CONSTRAINT <name> <table> PRIMARY|UNIQUE <col,col> | CHECK <predicate> | NOTNULL <col>
///   COUNTER <n>
///   ROWS <table> <count>
///   <tab-separated values>  (\N for NULL; \t \n \\ escaped; dates YYYY-MM-DD)
class SnapshotError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kSnapshotHeader = "HANDYDB 1";

std::string serialize(const Database &db);

/// Rebuilds a database and re-validates every row against its column types
/// and every constraint; throws SnapshotError on any inconsistency.
Database deserialize(std::string_view text);

void save(const Database &db, const std::filesystem::path &path);
Database load(const std::filesystem::path &path);

/// Schema equality, row equality in order, and counter equality.
bool equivalent(const Database &a, const Database &b);

} // namespace handysql
