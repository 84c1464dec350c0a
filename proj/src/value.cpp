#include "handysql/value.hpp"

#include <array>
#include <cctype>
#include <cstdio>

namespace handysql {

namespace {

constexpr std::array<std::string_view, 12> kMonths = {"JAN", "FEB", "MAR", "APR", "MAY", "JUN",
                                                      "JUL", "AUG", "SEP", "OCT", "NOV", "DEC"};

template <class... Fs> struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs> Overloaded(Fs...) -> Overloaded<Fs...>;

bool allDigits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

int toInt(std::string_view s) {
    int v = 0;
    for (char c : s)
        v = v * 10 + (c - '0');
    return v;
}

enum class Kind { Null, Number, Text, Date };

Kind kindOf(const Value &v) { return static_cast<Kind>(v.index()); }

} // namespace

// ---------------------------------------------------------------------------

SqlType normalizeType(const SqlType &written) {
    return std::visit(Overloaded{
                          [](const IntegerType &) -> SqlType { return NumberType{38, 0, true}; },
                          [](const VarcharType &v) -> SqlType { return Varchar2Type{v.maxLength}; },
                          [](const NumberType &n) -> SqlType {
                              if (n.precision < 1 || n.precision > kMaxNumberPrecision)
                                  throw OraError(ora::PrecisionOutOfRange);
                              return n;
                          },
                          [](const auto &t) -> SqlType { return t; },
                      },
                      written);
}

std::string typeDisplay(const SqlType &t) {
    return std::visit(Overloaded{
                          [](const NumberType &n) {
                              if (!n.explicitPrecision)
                                  return std::string("NUMBER");
                              if (n.scale != 0)
                                  return "NUMBER(" + std::to_string(n.precision) + "," +
                                         std::to_string(n.scale) + ")";
                              return "NUMBER(" + std::to_string(n.precision) + ")";
                          },
                          [](const Varchar2Type &v) { return "VARCHAR2(" + std::to_string(v.maxLength) + ")"; },
                          [](const DateType &) { return std::string("DATE"); },
                          [](const IntegerType &) { return std::string("NUMBER(38)"); },
                          [](const VarcharType &v) { return "VARCHAR2(" + std::to_string(v.maxLength) + ")"; },
                      },
                      t);
}

std::string typeSql(const SqlType &t) {
    return std::visit(Overloaded{
                          [](const IntegerType &) { return std::string("INTEGER"); },
                          [](const VarcharType &v) { return "VARCHAR(" + std::to_string(v.maxLength) + ")"; },
                          [&](const auto &) { return typeDisplay(t); },
                      },
                      t);
}

// ---------------------------------------------------------------------------

bool isValidDate(int year, int month, int day) {
    if (year < 1 || year > 9999 || month < 1 || month > 12 || day < 1)
        return false;
    static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    int limit = kDays[month - 1] + (month == 2 && leap ? 1 : 0);
    return day <= limit;
}

std::optional<Date> parseDate(std::string_view text) {
    auto first = text.find('-');
    if (first == std::string_view::npos)
        return std::nullopt;
    auto second = text.find('-', first + 1);
    if (second == std::string_view::npos)
        return std::nullopt;
    std::string_view dayText = text.substr(0, first);
    std::string_view monText = text.substr(first + 1, second - first - 1);
    std::string_view yearText = text.substr(second + 1);
    if (!allDigits(dayText) || dayText.size() > 2 || !allDigits(yearText) ||
        (yearText.size() != 2 && yearText.size() != 4) || monText.size() != 3)
        return std::nullopt;
    std::string mon;
    for (char c : monText)
        mon.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    int month = 0;
    for (size_t i = 0; i < kMonths.size(); ++i)
        if (kMonths[i] == mon)
            month = static_cast<int>(i) + 1;
    if (month == 0)
        return std::nullopt;
    int year = toInt(yearText);
    if (yearText.size() == 2)
        year += year >= 50 ? 1900 : 2000;
    int day = toInt(dayText);
    if (!isValidDate(year, month, day))
        return std::nullopt;
    return Date{year, month, day};
}

std::string formatDate(const Date &d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02d-%s-%02d", d.day, kMonths[static_cast<size_t>(d.month - 1)].data(),
                  d.year % 100);
    return buf;
}

Value coerce(const Value &literal, const SqlType &target, SourcePos pos) {
    if (isNull(literal))
        return literal;
    SqlType type = normalizeType(target);
    if (const auto *num = std::get_if<NumberType>(&type)) {
        if (kindOf(literal) == Kind::Text)
            throw OraError(ora::InvalidNumber, pos);
        const auto *d = std::get_if<Decimal>(&literal);
        if (!d)
            throw OraError(ora::InconsistentDatatypes, pos);
        Decimal rounded = d->roundedToScale(num->scale);
        // |value| must stay below 10^(precision - scale).
        Decimal::BigInt scaled = rounded.coefficient() * pow10(num->scale - rounded.scale());
        if (scaled < 0)
            scaled = -scaled;
        if (scaled >= pow10(num->precision))
            throw OraError(ora::ValueLargerThanPrecision, pos);
        return rounded;
    }
    if (const auto *vc = std::get_if<Varchar2Type>(&type)) {
        const auto *s = std::get_if<std::string>(&literal);
        if (!s)
            throw OraError(ora::InconsistentDatatypes, pos);
        if (static_cast<int>(s->size()) > vc->maxLength)
            throw OraError(ora::ValueTooLargeForColumn, pos);
        return *s;
    }
    // DATE
    if (const auto *s = std::get_if<std::string>(&literal)) {
        auto date = parseDate(*s);
        if (!date)
            throw OraError(ora::NonNumericInDate, pos);
        return *date;
    }
    if (std::holds_alternative<Date>(literal))
        return literal;
    throw OraError(ora::InconsistentDatatypes, pos);
}

std::string displayValue(const Value &v) {
    return std::visit(Overloaded{
                          [](const Null &) { return std::string(); },
                          [](const Decimal &d) {
                              // sqlplus drops the leading zero of pure fractions.
                              std::string s = d.toString();
                              if (s.rfind("0.", 0) == 0)
                                  s.erase(0, 1);
                              else if (s.rfind("-0.", 0) == 0)
                                  s.erase(1, 1);
                              return s;
                          },
                          [](const std::string &s) { return s; },
                          [](const Date &d) { return formatDate(d); },
                      },
                      v);
}

// ---------------------------------------------------------------------------

Tristate operator&&(Tristate a, Tristate b) {
    if (a == Tristate::False || b == Tristate::False)
        return Tristate::False;
    if (a == Tristate::Unknown || b == Tristate::Unknown)
        return Tristate::Unknown;
    return Tristate::True;
}

Tristate operator||(Tristate a, Tristate b) {
    if (a == Tristate::True || b == Tristate::True)
        return Tristate::True;
    if (a == Tristate::Unknown || b == Tristate::Unknown)
        return Tristate::Unknown;
    return Tristate::False;
}

Tristate operator!(Tristate a) {
    switch (a) {
    case Tristate::True:
        return Tristate::False;
    case Tristate::False:
        return Tristate::True;
    default:
        return Tristate::Unknown;
    }
}

std::string_view compareOpSql(CompareOp op) {
    switch (op) {
    case CompareOp::Eq:
        return "=";
    case CompareOp::Ne:
        return "<>";
    case CompareOp::Lt:
        return "<";
    case CompareOp::Le:
        return "<=";
    case CompareOp::Gt:
        return ">";
    case CompareOp::Ge:
        return ">=";
    }
    return "=";
}

std::strong_ordering orderValues(const Value &a, const Value &b, SourcePos pos) {
    Kind ka = kindOf(a), kb = kindOf(b);
    if (ka != kb) {
        bool textVsNumber = (ka == Kind::Text && kb == Kind::Number) || (ka == Kind::Number && kb == Kind::Text);
        throw OraError(textVsNumber ? ora::InvalidNumber : ora::InconsistentDatatypes, pos);
    }
    switch (ka) {
    case Kind::Number:
        return std::get<Decimal>(a) <=> std::get<Decimal>(b);
    case Kind::Text: {
        int c = std::get<std::string>(a).compare(std::get<std::string>(b));
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    case Kind::Date:
        return std::get<Date>(a) <=> std::get<Date>(b);
    default:
        return std::strong_ordering::equal;
    }
}

Tristate compare(const Value &a, const Value &b, CompareOp op, SourcePos pos) {
    if (isNull(a) || isNull(b))
        return Tristate::Unknown;
    auto ord = orderValues(a, b, pos);
    switch (op) {
    case CompareOp::Eq:
        return fromBool(ord == 0);
    case CompareOp::Ne:
        return fromBool(ord != 0);
    case CompareOp::Lt:
        return fromBool(ord < 0);
    case CompareOp::Le:
        return fromBool(ord <= 0);
    case CompareOp::Gt:
        return fromBool(ord > 0);
    case CompareOp::Ge:
        return fromBool(ord >= 0);
    }
    return Tristate::Unknown;
}

} // namespace handysql
