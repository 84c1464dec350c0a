#pragma once

#include "handysql/executor.hpp"
#include "handysql/persistence.hpp"

#include <doctest.h>

#include <filesystem>
#include <functional>
#include <string>

namespace testing {

inline const std::filesystem::path kConformanceDir = HANDYSQL_CONFORMANCE_DIR;

inline handysql::Database fixture(const std::string &name) {
    return handysql::load(kConformanceDir / "fixtures" / (name + ".db"));
}

// The ORA code `fn` throws, or 0.
inline int oraCode(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const handysql::OraError &e) {
        return e.code();
    }
    return 0;
}

inline int oraCodeOf(handysql::Database &db, const std::string &sql) {
    return oraCode([&] { handysql::executeSql(db, sql); });
}

inline std::string feedback(handysql::Database &db, const std::string &sql) {
    return std::get<handysql::Feedback>(handysql::executeSql(db, sql)).text;
}

inline handysql::ResultSet select(handysql::Database &db, const std::string &sql) {
    return std::get<handysql::ResultSet>(handysql::executeSql(db, sql));
}

inline handysql::Value num(long long v) { return handysql::Decimal(v); }

inline const char *kStudentsDdl = "CREATE TABLE STUDENTS(S_ROLL NUMBER(2),\n"
                                  "S_NAME VARCHAR(20),\n"
                                  "S_ADDRESS VARCHAR(20),\n"
                                  "S_PHONE NUMBER(10),\n"
                                  "DOB DATE,\n"
                                  "S_MARKS INTEGER)";

} // namespace testing
