#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace gct {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// "p/q" with q > 0, reduced; integers print without the slash part.
inline std::string to_fraction(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

BigInt factorial(int n);
BigInt binomial(int n, int k);

}
