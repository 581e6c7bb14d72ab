#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lambdaloc {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline double to_double(const Rational& q) {
    return q.convert_to<double>();
}

inline std::string format_rational(const Rational& q) {
    return q.str();
}

// Accepts "p", "-p/q" and plain integers.
inline Rational parse_rational(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

// Scalar abstraction shared by the exact-rational and double computation paths.
// Exact mode compares by equality; double mode uses the 1e-9 tolerance fixed
// for polytope membership on irrational inputs.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static bool is_zero(const Rational& v) { return v == 0; }
    static bool is_negative(const Rational& v) { return v < 0; }
    static double approx(const Rational& v) { return to_double(v); }
    static Rational from_rational(const Rational& v) { return v; }
    static Rational half() { return Rational(1, 2); }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static constexpr double tolerance = 1e-9;
    static bool is_zero(double v) { return std::abs(v) <= tolerance; }
    static bool is_negative(double v) { return v < -tolerance; }
    static double approx(double v) { return v; }
    static double from_rational(const Rational& v) { return to_double(v); }
    static double half() { return 0.5; }
};

}  // namespace lambdaloc
