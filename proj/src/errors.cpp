#include "handysql/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <sstream>

namespace handysql {

namespace {

// Messages drop Oracle's "(SCHEMA.NAME)" inserts; the engine has no schemas.
const std::vector<ErrorEntry> kRegistry = {
    {ora::UniqueViolated, "unique constraint violated", false},
    {ora::InvalidSqlStatement, "invalid SQL statement", false},
    {ora::InvalidIdentifier, "invalid identifier", false},
    {ora::TooManyValues, "too many values", false},
    {ora::ColumnAmbiguous, "column ambiguously defined", false},
    {ora::FromKeywordNotFound, "FROM keyword not found where expected", true},
    {ora::InconsistentDatatypes, "inconsistent datatypes", false},
    {ora::GroupFunctionNotAllowed, "group function is not allowed here", false},
    {ora::MissingExpression, "missing expression", true},
    {ora::NotSingleGroup, "not a single-group group function", false},
    {ora::TableDoesNotExist, "table or view does not exist", false},
    {ora::NotEnoughValues, "not enough values", false},
    {ora::NameAlreadyUsed, "name is already used by an existing object", false},
    {ora::DuplicateColumnName, "duplicate column name", false},
    {ora::CannotInsertNull, "cannot insert NULL into", false},
    {ora::ColumnAlreadyExists, "column being added already exists in table", true},
    {ora::ValueLargerThanPrecision, "value larger than specified precision allowed for this column", false},
    {ora::ModifyMustBeEmpty, "column to be modified must be empty to change datatype", false},
    {ora::AlreadyNotNull, "column to be modified to NOT NULL is already NOT NULL", false},
    {ora::NullsFoundForNotNull, "column contains NULL values; cannot alter to NOT NULL", false},
    {ora::CannotModifyToNull, "column to be modified to NULL cannot be modified to NULL", false},
    {ora::InvalidNumber, "invalid number", false},
    {ora::PrecisionOutOfRange, "numeric precision specifier is out of range (1 to 38)", false},
    {ora::MissingDoubleQuote, "missing double quote in identifier", false},
    {ora::QuotedStringNotTerminated, "quoted string not properly terminated", false},
    {ora::NonNumericInDate, "a non-numeric character was found where a numeric was expected", false},
    {ora::OnlyOnePrimaryKey, "table can have only one primary key", false},
    {ora::ConstraintNameInUse, "name already used by an existing constraint", false},
    {ora::CheckViolated, "check constraint violated", false},
    {ora::CannotValidateCheck, "cannot validate - check constraint violated", false},
    {ora::CannotEnableNullsFound, "cannot enable - null values found", false},
    {ora::CannotValidateUnique, "cannot validate - duplicate keys found", false},
    {ora::CannotValidatePrimaryKey, "cannot validate - primary key violated", false},
    {ora::ObjectDoesNotExist, "object does not exist", false},
    {ora::ValueTooLargeForColumn, "value too large for column", false},
};

const ErrorEntry *find(int code) {
    auto it = std::find_if(kRegistry.begin(), kRegistry.end(),
                           [code](const ErrorEntry &e) { return e.code == code; });
    return it == kRegistry.end() ? nullptr : &*it;
}

} // namespace

OraError::OraError(int code, SourcePos pos)
    : code_(code), line_(pos.line), column_(pos.column), message_(lookupError(code)) {
    what_ = oraLine();
}

std::string OraError::oraLine() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "ORA-%05d: ", code_);
    return buf + message_;
}

std::string_view lookupError(int code) {
    const ErrorEntry *e = find(code);
    assert(e && "unregistered ORA code");
    return e ? e->message : std::string_view("unknown error");
}

bool isRegistered(int code) { return find(code) != nullptr; }

const std::vector<ErrorEntry> &errorRegistry() { return kRegistry; }

int violationCode(ConstraintKind constraint, ViolationKind violation, bool existingRows) {
    if (!existingRows) {
        switch (violation) {
        case ViolationKind::NullColumn:
            return ora::CannotInsertNull;
        case ViolationKind::DuplicateKey:
            return ora::UniqueViolated;
        case ViolationKind::CheckFailed:
            return ora::CheckViolated;
        }
    }
    switch (violation) {
    case ViolationKind::NullColumn:
        return constraint == ConstraintKind::NotNull ? ora::CannotEnableNullsFound : ora::NullsFoundForNotNull;
    case ViolationKind::DuplicateKey:
        return constraint == ConstraintKind::PrimaryKey ? ora::CannotValidatePrimaryKey : ora::CannotValidateUnique;
    case ViolationKind::CheckFailed:
        return ora::CannotValidateCheck;
    }
    return ora::InvalidSqlStatement;
}

std::string renderError(const OraError &e) {
    std::ostringstream out;
    std::istringstream in(e.statementText());
    std::string physical;
    for (int n = 1; std::getline(in, physical); ++n) {
        if (n == e.line()) {
            if (!physical.empty() && physical.back() == '\r')
                physical.pop_back();
            out << physical << '\n';
            out << std::string(static_cast<size_t>(std::max(0, e.column() - 1)), ' ') << "*\n";
            break;
        }
    }
    out << "ERROR at line " << e.line() << ":\n";
    out << e.oraLine() << '\n';
    return out.str();
}

} // namespace handysql
