#pragma once

#include "handysql/decimal.hpp"
#include "handysql/errors.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace handysql {

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

/// NUMBER(p,s). `explicitPrecision` is false only for a bare NUMBER, which
/// behaves as NUMBER(38) but describes itself without parentheses.
struct NumberType {
    int precision = 38;
    int scale = 0;
    bool explicitPrecision = true;
    friend bool operator==(const NumberType &, const NumberType &) = default;
};

/// VARCHAR2(n), length in bytes.
struct Varchar2Type {
    int maxLength = 1;
    friend bool operator==(const Varchar2Type &, const Varchar2Type &) = default;
};

struct DateType {
    friend bool operator==(const DateType &, const DateType &) = default;
};

/// INTEGER and VARCHAR exist only as written forms; normalizeType() rewrites them.
struct IntegerType {
    friend bool operator==(const IntegerType &, const IntegerType &) = default;
};
struct VarcharType {
    int maxLength = 1;
    friend bool operator==(const VarcharType &, const VarcharType &) = default;
};

using SqlType = std::variant<NumberType, Varchar2Type, DateType, IntegerType, VarcharType>;

inline constexpr int kMaxNumberPrecision = 38;

/// Canonical catalog form: VARCHAR -> VARCHAR2, INTEGER -> NUMBER(38).
/// Throws ORA-01727 when a written precision is outside 1..38.
SqlType normalizeType(const SqlType &written);

/// "NUMBER(2)", "NUMBER", "NUMBER(7,2)", "VARCHAR2(20)", "DATE".
std::string typeDisplay(const SqlType &t);

/// As written in DDL, e.g. "INTEGER" or "VARCHAR(20)"; used by the SQL renderer.
std::string typeSql(const SqlType &t);

// ---------------------------------------------------------------------------
// Values
// ---------------------------------------------------------------------------

struct Date {
    int year = 1;
    int month = 1;
    int day = 1;
    friend auto operator<=>(const Date &, const Date &) = default;
};

struct Null {
    friend bool operator==(Null, Null) { return true; }
};

/// A runtime scalar. Text is stored byte-for-byte; numbers are exact decimals.
using Value = std::variant<Null, Decimal, std::string, Date>;

inline bool isNull(const Value &v) { return std::holds_alternative<Null>(v); }

bool isValidDate(int year, int month, int day);

/// DD-MON-YY or DD-MON-YYYY; two-digit years pivot at 50 (50..99 -> 19xx).
std::optional<Date> parseDate(std::string_view text);

/// Always DD-MON-YY with an uppercase month.
std::string formatDate(const Date &d);

/// Fit a literal into a column type: rounding for NUMBER scale, length and
/// precision checks, date parsing from text. NULL always passes.
Value coerce(const Value &literal, const SqlType &target, SourcePos pos = {});

/// Display text used by result sets ("" for NULL; ".5" style for fractions).
std::string displayValue(const Value &v);

// ---------------------------------------------------------------------------
// Three-valued logic
// ---------------------------------------------------------------------------

enum class Tristate { False, True, Unknown };

Tristate operator&&(Tristate a, Tristate b);
Tristate operator||(Tristate a, Tristate b);
Tristate operator!(Tristate a);

inline Tristate fromBool(bool b) { return b ? Tristate::True : Tristate::False; }

enum class CompareOp { Eq, Ne, Lt, Le, Gt, Ge };

std::string_view compareOpSql(CompareOp op);

/// NULL on either side yields Unknown. Mixed kinds throw ORA-01722 (text vs
/// number) or ORA-00932.
Tristate compare(const Value &a, const Value &b, CompareOp op, SourcePos pos = {});

/// Total order used by MIN/MAX over same-kind non-null values.
std::strong_ordering orderValues(const Value &a, const Value &b, SourcePos pos = {});

} // namespace handysql
