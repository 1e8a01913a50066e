#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace lojex {

using Integer = boost::multiprecision::cpp_int;

// Exact rational, always stored reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Integer rational_floor(const Rational& q) {
    Integer n = numerator(q);
    Integer d = denominator(q);
    Integer quot = n / d;
    if (n < 0 && quot * d != n) --quot;
    return quot;
}

inline std::string rational_to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/";
        s += denominator(q).str();
    }
    return s;
}

inline double rational_to_double(const Rational& q) {
    return q.template convert_to<double>();
}

inline int sign_of(const Rational& q) {
    if (q > 0) return 1;
    if (q < 0) return -1;
    return 0;
}

}  // namespace lojex
