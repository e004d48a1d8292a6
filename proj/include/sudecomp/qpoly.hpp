#pragma once

#include "sudecomp/bigint.hpp"

#include <map>
#include <string>
#include <vector>

namespace sud {

// Integer-coefficient polynomial in q, coefficients by ascending power,
// trailing coefficient nonzero unless zero.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<BigInt> coeffs);
    static QPoly constant(BigInt c);
    static QPoly monomial(int power, BigInt c = 1);
    // q^d - 1
    static QPoly q_pow_minus_one(int d);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return is_zero() ? -1 : static_cast<int>(c_.size()) - 1; }
    int valuation() const;
    const BigInt& leading() const { return c_.back(); }
    BigInt coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : BigInt(0); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    // Exact division; throws if the remainder is nonzero.
    QPoly div_exact(const QPoly& d) const;
    bool divides(const QPoly& d, QPoly& quotient) const;  // d | this?

    QPoly substitute_minus_q() const;
    QPoly negate() const;

    BigInt eval(const BigInt& q) const;

    std::string str() const;  // human-readable, ascending powers

private:
    std::vector<BigInt> c_;
    void trim();
};

// d-th cyclotomic polynomial, memoized.
const QPoly& cyclotomic(int d);

struct CyclotomicFactorization {
    int q_power = 0;
    std::map<int, int> phi;  // d -> exponent
    BigInt scalar = 1;

    QPoly expand() const;
    std::string str() const;  // e.g. "q^4.Phi1^3.Phi3.Phi4" printed as q^4 Phi1^3 Phi3 Phi4
};

// Trial division by Phi_d for d <= dmax, largest d first. Throws (carrying the
// residual) if a non-cyclotomic factor remains.
CyclotomicFactorization cyclotomic_factor(const QPoly& p, int dmax);

}  // namespace sud
