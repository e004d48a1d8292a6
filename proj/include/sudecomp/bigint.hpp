#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sud {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// C(a,b) with the convention C(a,b) = 0 for b < 0 or b > a (a >= 0).
inline BigInt binomial(long long a, long long b) {
    if (b < 0 || b > a || a < 0) return 0;
    if (b > a - b) b = a - b;
    BigInt r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= (a - b + i);
        r /= i;
    }
    return r;
}

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline long long to_ll(const BigInt& v) {
    return static_cast<long long>(v);
}

// Numerator/denominator as strings, for exact JSON output.
inline std::string rat_num(const BigRat& r) { return boost::multiprecision::numerator(r).str(); }
inline std::string rat_den(const BigRat& r) { return boost::multiprecision::denominator(r).str(); }

inline BigInt rat_to_int(const BigRat& r) {
    if (boost::multiprecision::denominator(r) != 1)
        throw std::runtime_error("expected integral value, got " + rat_num(r) + "/" + rat_den(r));
    return boost::multiprecision::numerator(r);
}

}  // namespace sud
