#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "utd/errors.hpp"

namespace utd {

/// Exact arbitrary-precision arithmetic. Coefficients of diagram series are
/// Rational; gluing multiplicities are Integer.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    return Rational(Integer(num), Integer(den));
}

/// Parses "n" or "n/d" with optional sign. Throws InvalidDiagram on junk.
inline Rational parse_rational(const std::string& text) {
    auto bad = [&] { return InvalidDiagram("malformed rational: '" + text + "'"); };
    if (text.empty()) throw bad();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

inline std::string to_string(const Rational& q) {
    return q.str();
}

inline Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace utd
