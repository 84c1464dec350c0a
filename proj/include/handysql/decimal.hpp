#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace handysql {

/// Exact signed decimal: coefficient * 10^-scale.
///
/// Always normalized: scale >= 0 and no trailing zero digits in the fraction,
/// so structural equality is numeric equality.
class Decimal {
public:
    using BigInt = boost::multiprecision::cpp_int;

    Decimal() = default;
    explicit Decimal(std::int64_t v) : coefficient_(v) {}
    Decimal(BigInt coefficient, int scale);

    /// Accepts [-]digits[.digits] and [-].digits; nothing else.
    static std::optional<Decimal> parse(std::string_view text);

    /// Plain positional notation, e.g. "-12.5", "0.05", "0".
    std::string toString() const;

    const BigInt &coefficient() const { return coefficient_; }
    int scale() const { return scale_; }
    int sign() const { return coefficient_.sign(); }
    bool isZero() const { return coefficient_.is_zero(); }

    /// Digits left of the decimal point, 0 when |x| < 1.
    int integerDigits() const;
    /// Digits of the coefficient with leading zeros removed; 0 for zero.
    int significantDigits() const;

    /// Round to `scale` fractional digits, ties away from zero.
    Decimal roundedToScale(int scale) const;
    /// Round to at most `digits` significant digits, ties away from zero.
    Decimal roundedToSignificant(int digits) const;

    Decimal operator-() const { return Decimal(-coefficient_, scale_); }
    friend Decimal operator+(const Decimal &a, const Decimal &b);
    friend Decimal operator-(const Decimal &a, const Decimal &b) { return a + (-b); }
    friend Decimal operator*(const Decimal &a, const Decimal &b);

    struct Quotient;
    /// a / divisor rounded half away from zero to `digits` significant digits.
    static Quotient divide(const Decimal &a, std::int64_t divisor, int digits);

    friend std::strong_ordering operator<=>(const Decimal &a, const Decimal &b);
    friend bool operator==(const Decimal &a, const Decimal &b) = default;

private:
    void normalize();

    BigInt coefficient_ = 0;
    int scale_ = 0;
};

struct Decimal::Quotient {
    Decimal value;
    bool exact = true;
};

Decimal::BigInt pow10(int n);

} // namespace handysql
