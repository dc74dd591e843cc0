#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace egh {

// Exact arithmetic for certificate-grade runs. Always stored reduced with a
// positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double tol() { return 1e-9; }
    static double to_double(double v) { return v; }
    static std::string mode_name() { return "float64"; }
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational tol() { return Rational(0); }
    static double to_double(const Rational& v) { return v.convert_to<double>(); }
    static std::string mode_name() { return "rational"; }
};

// a <= b up to the mode tolerance. All certified inequalities go through this.
template <class S>
bool leq_tol(const S& a, const S& b) {
    return a <= b + scalar_traits<S>::tol();
}

template <class S>
bool eq_tol(const S& a, const S& b) {
    return leq_tol(a, b) && leq_tol(b, a);
}

template <class S>
S abs_diff(const S& a, const S& b) {
    return a < b ? S(b - a) : S(a - b);
}

// Accepts "p/q", plain integers, and decimal/scientific literals ("1.25",
// "3e-2"); the decimal text converts exactly.
Rational rational_from_string(const std::string& text);

// Exact value of the binary double (every finite double is p / 2^k).
Rational rational_from_double(double v);

std::string rational_to_string(const Rational& v);

template <class S>
S scalar_from_string(const std::string& text);

template <>
double scalar_from_string<double>(const std::string& text);
template <>
Rational scalar_from_string<Rational>(const std::string& text);

} // namespace egh
