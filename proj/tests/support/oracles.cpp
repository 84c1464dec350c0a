#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

Truth kleeneAnd(Truth a, Truth b) {
    if (a == false || b == false)
        return false;
    if (!a || !b)
        return std::nullopt;
    return true;
}

Truth kleeneOr(Truth a, Truth b) {
    if (a == true || b == true)
        return true;
    if (!a || !b)
        return std::nullopt;
    return false;
}

Truth kleeneNot(Truth a) {
    if (!a)
        return std::nullopt;
    return !*a;
}

namespace {

Cell operandValue(const Operand &o, const IntRow &row) { return o.isColumn ? row[o.column] : o.constant; }

std::string operandSql(const Operand &o, const std::vector<std::string> &names) {
    if (o.isColumn)
        return names[o.column];
    return o.constant ? std::to_string(*o.constant) : "NULL";
}

const char *opSql(Op op) {
    switch (op) {
    case Op::Eq:
        return "=";
    case Op::Ne:
        return "<>";
    case Op::Lt:
        return "<";
    case Op::Le:
        return "<=";
    case Op::Gt:
        return ">";
    case Op::Ge:
        return ">=";
    }
    return "=";
}

} // namespace

Truth evaluate(const Pred &p, const IntRow &row) {
    switch (p.kind) {
    case Pred::Kind::Compare: {
        Cell a = operandValue(p.lhs, row), b = operandValue(p.rhs, row);
        if (!a || !b)
            return std::nullopt;
        switch (p.op) {
        case Op::Eq:
            return *a == *b;
        case Op::Ne:
            return *a != *b;
        case Op::Lt:
            return *a < *b;
        case Op::Le:
            return *a <= *b;
        case Op::Gt:
            return *a > *b;
        case Op::Ge:
            return *a >= *b;
        }
        return std::nullopt;
    }
    case Pred::Kind::IsNull:
        return !operandValue(p.lhs, row).has_value();
    case Pred::Kind::IsNotNull:
        return operandValue(p.lhs, row).has_value();
    case Pred::Kind::And:
        return kleeneAnd(evaluate(p.children[0], row), evaluate(p.children[1], row));
    case Pred::Kind::Or:
        return kleeneOr(evaluate(p.children[0], row), evaluate(p.children[1], row));
    case Pred::Kind::Not:
        return kleeneNot(evaluate(p.children[0], row));
    }
    return std::nullopt;
}

std::string toSql(const Pred &p, const std::vector<std::string> &names) {
    switch (p.kind) {
    case Pred::Kind::Compare:
        return operandSql(p.lhs, names) + " " + opSql(p.op) + " " + operandSql(p.rhs, names);
    case Pred::Kind::IsNull:
        return operandSql(p.lhs, names) + " IS NULL";
    case Pred::Kind::IsNotNull:
        return operandSql(p.lhs, names) + " IS NOT NULL";
    case Pred::Kind::And:
        return "(" + toSql(p.children[0], names) + ") AND (" + toSql(p.children[1], names) + ")";
    case Pred::Kind::Or:
        return "(" + toSql(p.children[0], names) + ") OR (" + toSql(p.children[1], names) + ")";
    case Pred::Kind::Not:
        return "NOT (" + toSql(p.children[0], names) + ")";
    }
    return {};
}

Pred randomPred(Rng &rng, int width, int depth, const std::vector<long long> &domain) {
    Pred p;
    int roll = rng.range(0, depth > 0 ? 9 : 5);
    // Column or constant; a constant is occasionally a literal NULL.
    auto operand = [&] {
        Operand o;
        if (rng.chance(0.6)) {
            o.column = rng.range(0, width - 1);
        } else {
            o.isColumn = false;
            if (!rng.chance(0.1))
                o.constant = rng.pick(domain);
        }
        return o;
    };
    if (roll <= 3) {
        p.kind = Pred::Kind::Compare;
        p.op = static_cast<Op>(rng.range(0, 5));
        p.lhs.column = rng.range(0, width - 1);
        p.rhs = operand();
    } else if (roll <= 5) {
        p.kind = rng.chance(0.5) ? Pred::Kind::IsNull : Pred::Kind::IsNotNull;
        p.lhs.column = rng.range(0, width - 1);
    } else if (roll <= 7) {
        p.kind = rng.chance(0.5) ? Pred::Kind::And : Pred::Kind::Or;
        p.children = {randomPred(rng, width, depth - 1, domain), randomPred(rng, width, depth - 1, domain)};
    } else {
        p.kind = Pred::Kind::Not;
        p.children = {randomPred(rng, width, depth - 1, domain)};
    }
    return p;
}

std::vector<IntRow> bruteJoin(const std::vector<IntRow> &left, const std::vector<IntRow> &right, const Pred &on) {
    std::vector<IntRow> out;
    for (const IntRow &l : left)
        for (const IntRow &r : right) {
            IntRow both = l;
            both.insert(both.end(), r.begin(), r.end());
            if (evaluate(on, both) == true)
                out.push_back(std::move(both));
        }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

BigInt tenTo(int n) {
    BigInt r = 1;
    for (int i = 0; i < n; ++i)
        r *= 10;
    return r;
}

Rational absQ(const Rational &q) { return q < 0 ? Rational(-q) : q; }

} // namespace

Rational parseDecimal(const std::string &text) {
    bool negative = !text.empty() && text[0] == '-';
    std::string body = negative ? text.substr(1) : text;
    auto dot = body.find('.');
    std::string digits = body, frac;
    if (dot != std::string::npos) {
        digits = body.substr(0, dot);
        frac = body.substr(dot + 1);
    }
    // Digit by digit: BigInt("012") would be octal.
    BigInt n = 0;
    for (char c : digits + frac)
        n = n * 10 + (c - '0');
    Rational q(n, tenTo(static_cast<int>(frac.size())));
    return negative ? Rational(-q) : q;
}

std::string formatTerminating(const Rational &q) {
    BigInt num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
    int scale = 0;
    while (den != 1) {
        if (scale > 400)
            throw std::logic_error("non-terminating decimal");
        num *= 10;
        BigInt g = boost::multiprecision::gcd(num, den);
        num /= g;
        den /= g;
        ++scale;
    }
    bool negative = num < 0;
    if (negative)
        num = -num;
    std::string digits = num.str();
    if (scale > 0) {
        if (static_cast<int>(digits.size()) <= scale)
            digits = std::string(scale - digits.size() + 1, '0') + digits;
        digits.insert(digits.size() - scale, ".");
        while (digits.back() == '0')
            digits.pop_back();
        if (digits.back() == '.')
            digits.pop_back();
    }
    if (digits == "0")
        negative = false;
    return (negative ? "-" : "") + digits;
}

std::string roundSignificant(const Rational &q, int digits) {
    if (q == 0)
        return "0";
    Rational a = absQ(q);
    // 10^e <= a < 10^(e+1)
    int e = 0;
    while (a >= Rational(tenTo(e + 1)))
        ++e;
    while (a < (e >= 0 ? Rational(tenTo(e)) : Rational(BigInt(1), tenTo(-e))))
        --e;
    int s = digits - 1 - e;
    Rational scaled = s >= 0 ? a * Rational(tenTo(s)) : a / Rational(tenTo(-s));
    BigInt whole = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
    Rational rest = scaled - Rational(whole);
    if (rest * 2 >= 1)
        whole += 1;
    Rational rounded = s >= 0 ? Rational(whole, tenTo(s)) : Rational(whole * tenTo(-s));
    return formatTerminating(q < 0 ? Rational(-rounded) : rounded);
}

AggregateAnswer foldAggregates(const std::vector<std::optional<std::string>> &column) {
    AggregateAnswer a;
    a.countStar = static_cast<long long>(column.size());
    Rational sum = 0;
    std::optional<Rational> lo, hi;
    for (const auto &cell : column) {
        if (!cell)
            continue;
        Rational v = parseDecimal(*cell);
        ++a.count;
        sum += v;
        if (!lo || v < *lo)
            lo = v;
        if (!hi || v > *hi)
            hi = v;
    }
    if (a.count == 0)
        return a;
    a.sum = formatTerminating(sum);
    a.min = formatTerminating(*lo);
    a.max = formatTerminating(*hi);
    Rational mean = sum / a.count;
    a.avg = roundSignificant(mean, 38);
    a.avgExact = parseDecimal(*a.avg) == mean;
    return a;
}

// ---------------------------------------------------------------------------

namespace {

bool requiresValues(const Constraint &c) {
    return c.kind == Constraint::Kind::NotNull || c.kind == Constraint::Kind::PrimaryKey;
}

bool hasNull(const IntRow &row, const std::vector<int> &cols) {
    return std::any_of(cols.begin(), cols.end(), [&](int i) { return !row[i]; });
}

bool sameKey(const IntRow &a, const IntRow &b, const std::vector<int> &cols) {
    if (hasNull(a, cols) || hasNull(b, cols))
        return false;
    return std::all_of(cols.begin(), cols.end(), [&](int i) { return *a[i] == *b[i]; });
}

bool isKey(const Constraint &c) {
    return c.kind == Constraint::Kind::PrimaryKey || c.kind == Constraint::Kind::Unique;
}

} // namespace

std::optional<Finding> checkCandidate(const std::vector<Constraint> &constraints, const std::vector<IntRow> &existing,
                                      const IntRow &candidate) {
    for (const Constraint &c : constraints)
        if (requiresValues(c) && hasNull(candidate, c.columns))
            return Finding{c.name, Breach::NullColumn};
    for (const Constraint &c : constraints) {
        if (isKey(c)) {
            for (const IntRow &row : existing)
                if (sameKey(row, candidate, c.columns))
                    return Finding{c.name, Breach::DuplicateKey};
        } else if (c.kind == Constraint::Kind::Check && evaluate(c.check, candidate) == false) {
            return Finding{c.name, Breach::CheckFailed};
        }
    }
    return std::nullopt;
}

std::optional<Breach> checkExisting(const Constraint &c, const std::vector<IntRow> &rows) {
    if (requiresValues(c))
        for (const IntRow &row : rows)
            if (hasNull(row, c.columns))
                return Breach::NullColumn;
    if (isKey(c)) {
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = i + 1; j < rows.size(); ++j)
                if (sameKey(rows[i], rows[j], c.columns))
                    return Breach::DuplicateKey;
    }
    if (c.kind == Constraint::Kind::Check)
        for (const IntRow &row : rows)
            if (evaluate(c.check, row) == false)
                return Breach::CheckFailed;
    return std::nullopt;
}

} // namespace oracle
