#include "handysql/decimal.hpp"

#include <cassert>
#include <cctype>

namespace handysql {

Decimal::BigInt pow10(int n) {
    Decimal::BigInt r = 1;
    for (int i = 0; i < n; ++i)
        r *= 10;
    return r;
}

namespace {

using BigInt = Decimal::BigInt;

int digitCount(BigInt v) {
    if (v < 0)
        v = -v;
    if (v.is_zero())
        return 0;
    return static_cast<int>(v.str().size());
}

// Integer division of n by d (d > 0) rounding half away from zero.
BigInt divideRounded(const BigInt &n, const BigInt &d, bool *exact) {
    BigInt q, r;
    boost::multiprecision::divide_qr(n < 0 ? BigInt(-n) : n, d, q, r);
    if (exact)
        *exact = r.is_zero();
    if (r * 2 >= d)
        ++q;
    return n < 0 ? BigInt(-q) : q;
}

} // namespace

Decimal::Decimal(BigInt coefficient, int scale) : coefficient_(std::move(coefficient)), scale_(scale) {
    if (scale_ < 0) {
        coefficient_ *= pow10(-scale_);
        scale_ = 0;
    }
    normalize();
}

void Decimal::normalize() {
    if (coefficient_.is_zero()) {
        scale_ = 0;
        return;
    }
    while (scale_ > 0 && coefficient_ % 10 == 0) {
        coefficient_ /= 10;
        --scale_;
    }
}

std::optional<Decimal> Decimal::parse(std::string_view text) {
    bool negative = false;
    size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    std::string digits;
    int scale = 0;
    bool seenPoint = false;
    bool any = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            any = true;
            if (seenPoint)
                ++scale;
        } else if (c == '.' && !seenPoint) {
            seenPoint = true;
        } else {
            return std::nullopt;
        }
    }
    if (!any)
        return std::nullopt;
    // cpp_int reads a leading 0 as an octal prefix.
    size_t first = digits.find_first_not_of('0');
    BigInt c(first == std::string::npos ? std::string("0") : digits.substr(first));
    if (negative)
        c = -c;
    return Decimal(std::move(c), scale);
}

std::string Decimal::toString() const {
    std::string digits = (coefficient_ < 0 ? BigInt(-coefficient_) : coefficient_).str();
    std::string out = coefficient_ < 0 ? "-" : "";
    if (scale_ == 0)
        return out + digits;
    if (static_cast<int>(digits.size()) <= scale_)
        digits.insert(0, static_cast<size_t>(scale_) - digits.size() + 1, '0');
    digits.insert(digits.size() - static_cast<size_t>(scale_), ".");
    return out + digits;
}

int Decimal::integerDigits() const { return std::max(0, digitCount(coefficient_) - scale_); }

int Decimal::significantDigits() const { return digitCount(coefficient_); }

Decimal Decimal::roundedToScale(int scale) const {
    if (scale >= scale_)
        return *this;
    BigInt divisor = pow10(scale_ - scale);
    return Decimal(divideRounded(coefficient_, divisor, nullptr), scale);
}

Decimal Decimal::roundedToSignificant(int digits) const {
    int excess = significantDigits() - digits;
    if (excess <= 0)
        return *this;
    BigInt rounded = divideRounded(coefficient_, pow10(excess), nullptr);
    // scale may go negative for large integers; the constructor folds it back.
    return Decimal(std::move(rounded), scale_ - excess);
}

Decimal operator+(const Decimal &a, const Decimal &b) {
    int scale = std::max(a.scale_, b.scale_);
    BigInt sum = a.coefficient_ * pow10(scale - a.scale_) + b.coefficient_ * pow10(scale - b.scale_);
    return Decimal(std::move(sum), scale);
}

Decimal operator*(const Decimal &a, const Decimal &b) {
    return Decimal(a.coefficient_ * b.coefficient_, a.scale_ + b.scale_);
}

Decimal::Quotient Decimal::divide(const Decimal &a, std::int64_t divisor, int digits) {
    assert(divisor > 0 && digits > 0);
    if (a.isZero())
        return {Decimal(), true};
    // Widen so the truncated quotient has more than `digits` significant digits.
    int extra = digits + 1 + digitCount(BigInt(divisor));
    BigInt magnitude = a.coefficient_ < 0 ? BigInt(-a.coefficient_) : a.coefficient_;
    BigInt q, r;
    boost::multiprecision::divide_qr(magnitude * pow10(extra), BigInt(divisor), q, r);
    int excess = digitCount(q) - digits;
    BigInt dropped = pow10(excess);
    BigInt kept, rest;
    boost::multiprecision::divide_qr(q, dropped, kept, rest);
    bool exact = r.is_zero() && rest.is_zero();
    // A nonzero remainder only pushes an exact half upward, which rounds up anyway.
    if (rest * 2 >= dropped)
        ++kept;
    return {Decimal(a.sign() < 0 ? BigInt(-kept) : kept, a.scale_ + extra - excess), exact};
}

std::strong_ordering operator<=>(const Decimal &a, const Decimal &b) {
    int scale = std::max(a.scale_, b.scale_);
    BigInt l = a.coefficient_ * pow10(scale - a.scale_);
    BigInt r = b.coefficient_ * pow10(scale - b.scale_);
    if (l < r)
        return std::strong_ordering::less;
    if (l > r)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace handysql
