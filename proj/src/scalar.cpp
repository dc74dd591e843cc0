#include "egh/scalar.hpp"

#include "egh/errors.hpp"

#include <cmath>
#include <cstdlib>

namespace egh {

namespace {

BigInt pow10(unsigned long e) {
    BigInt r = 1;
    BigInt base = 10;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Rational parse_decimal(const std::string& text) {
    // sign, digits, optional fraction, optional exponent
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    long frac_len = 0;
    bool saw_digit = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        digits += text[pos++];
        saw_digit = true;
    }
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits += text[pos++];
            ++frac_len;
            saw_digit = true;
        }
    }
    long exp10 = 0;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool exp_neg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            exp_neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw StructuralError("bad numeric literal: '" + text + "'");
        long e = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            e = e * 10 + (text[pos++] - '0');
            if (e > 100000) throw StructuralError("exponent out of range in '" + text + "'");
        }
        exp10 = exp_neg ? -e : e;
    }
    if (!saw_digit || pos != text.size())
        throw StructuralError("bad numeric literal: '" + text + "'");

    BigInt mantissa = digits.empty() ? BigInt(0) : BigInt(digits);
    if (negative) mantissa = -mantissa;
    long net = exp10 - frac_len;
    Rational value(mantissa);
    if (net > 0)
        value *= Rational(pow10(static_cast<unsigned long>(net)));
    else if (net < 0)
        value /= Rational(pow10(static_cast<unsigned long>(-net)));
    return value;
}

} // namespace

Rational rational_from_string(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string p = text.substr(0, slash);
        std::string q = text.substr(slash + 1);
        if (p.empty() || q.empty())
            throw StructuralError("bad rational literal: '" + text + "'");
        try {
            BigInt num(p);
            BigInt den(q);
            if (den == 0) throw StructuralError("zero denominator in '" + text + "'");
            return Rational(num, den);
        } catch (const std::exception&) {
            throw StructuralError("bad rational literal: '" + text + "'");
        }
    }
    return parse_decimal(text);
}

Rational rational_from_double(double v) {
    if (!std::isfinite(v)) throw StructuralError("non-finite number");
    if (v == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(v, &exp); // |mant| in [0.5, 1)
    auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(scaled);
    BigInt two = 1;
    if (exp >= 0) {
        two <<= exp;
        r *= Rational(two);
    } else {
        two <<= -exp;
        r /= Rational(two);
    }
    return r;
}

std::string rational_to_string(const Rational& v) {
    const BigInt num = boost::multiprecision::numerator(v);
    const BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

template <>
double scalar_from_string<double>(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos)
        return scalar_traits<Rational>::to_double(rational_from_string(text));
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw StructuralError("bad numeric literal: '" + text + "'");
    }
    if (used != text.size())
        throw StructuralError("bad numeric literal: '" + text + "'");
    return v;
}

template <>
Rational scalar_from_string<Rational>(const std::string& text) {
    return rational_from_string(text);
}

} // namespace egh
