#pragma once

#include <exception>
#include <string>
#include <string_view>
#include <vector>

namespace handysql {

/// 1-based position of a token inside a statement's raw text.
struct SourcePos {
    int line = 1;
    int column = 1;

    // Positions never participate in AST equality.
    friend bool operator==(const SourcePos &, const SourcePos &) { return true; }
};

/// An ORA-style failure: registry code, registry message, and where it happened.
///
/// The statement text is attached by whoever owns the raw input (the engine
/// facade or the shell) so that renderError() can echo the offending line.
class OraError : public std::exception {
public:
    OraError(int code, SourcePos pos = {});

    int code() const noexcept { return code_; }
    const std::string &message() const noexcept { return message_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string &statementText() const noexcept { return text_; }

    void setStatementText(std::string text) { text_ = std::move(text); }

    /// "ORA-00936: missing expression"
    std::string oraLine() const;

    const char *what() const noexcept override { return what_.c_str(); }

private:
    int code_;
    int line_;
    int column_;
    std::string message_;
    std::string text_;
    std::string what_;
};

struct ErrorEntry {
    int code;
    std::string_view message;
    // true for the codes shown verbatim in the reference transcripts.
    bool observed;
};

/// Canonical message for a registered code. Unknown codes are a programmer fault.
std::string_view lookupError(int code);

bool isRegistered(int code);

const std::vector<ErrorEntry> &errorRegistry();

enum class ConstraintKind { PrimaryKey, Unique, Check, NotNull };

enum class ViolationKind { NullColumn, DuplicateKey, CheckFailed };

/// Error code for a constraint violation, either on a new row or while
/// validating the rows already stored when a constraint is added.
int violationCode(ConstraintKind constraint, ViolationKind violation, bool existingRows);

/// sqlplus-style block: offending line, "*" marker, "ERROR at line N:", "ORA-xxxxx: msg".
std::string renderError(const OraError &e);

namespace ora {
inline constexpr int UniqueViolated = 1;
inline constexpr int InvalidSqlStatement = 900;
inline constexpr int InvalidIdentifier = 904;
inline constexpr int TooManyValues = 913;
inline constexpr int ColumnAmbiguous = 918;
inline constexpr int FromKeywordNotFound = 923;
inline constexpr int InconsistentDatatypes = 932;
inline constexpr int GroupFunctionNotAllowed = 934;
inline constexpr int MissingExpression = 936;
inline constexpr int NotSingleGroup = 937;
inline constexpr int TableDoesNotExist = 942;
inline constexpr int NotEnoughValues = 947;
inline constexpr int NameAlreadyUsed = 955;
inline constexpr int DuplicateColumnName = 957;
inline constexpr int CannotInsertNull = 1400;
inline constexpr int ColumnAlreadyExists = 1430;
inline constexpr int ValueLargerThanPrecision = 1438;
inline constexpr int ModifyMustBeEmpty = 1439;
inline constexpr int AlreadyNotNull = 1442;
inline constexpr int NullsFoundForNotNull = 1449;
inline constexpr int CannotModifyToNull = 1451;
inline constexpr int InvalidNumber = 1722;
inline constexpr int PrecisionOutOfRange = 1727;
inline constexpr int MissingDoubleQuote = 1740;
inline constexpr int QuotedStringNotTerminated = 1756;
inline constexpr int NonNumericInDate = 1858;
inline constexpr int OnlyOnePrimaryKey = 2260;
inline constexpr int ConstraintNameInUse = 2264;
inline constexpr int CheckViolated = 2290;
inline constexpr int CannotValidateCheck = 2293;
inline constexpr int CannotValidateUnique = 2299;
inline constexpr int CannotValidatePrimaryKey = 2437;
inline constexpr int CannotEnableNullsFound = 2296;
inline constexpr int ObjectDoesNotExist = 4043;
inline constexpr int ValueTooLargeForColumn = 12899;
} // namespace ora

} // namespace handysql
