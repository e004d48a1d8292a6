#include "sudecomp/qpoly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace sud {

QPoly::QPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::constant(BigInt c) {
    QPoly p;
    if (c != 0) p.c_ = {std::move(c)};
    return p;
}

QPoly QPoly::monomial(int power, BigInt c) {
    QPoly p;
    if (c != 0) {
        p.c_.assign(power + 1, 0);
        p.c_[power] = std::move(c);
    }
    return p;
}

QPoly QPoly::q_pow_minus_one(int d) {
    QPoly p;
    p.c_.assign(d + 1, 0);
    p.c_[0] = -1;
    p.c_[d] = 1;
    return p;
}

int QPoly::valuation() const {
    if (is_zero()) throw std::logic_error("valuation of zero polynomial");
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return QPoly(std::move(r));
}

bool QPoly::divides(const QPoly& d, QPoly& quotient) const {
    if (d.is_zero()) return false;
    std::vector<BigInt> rem = c_;
    int dd = d.degree();
    if (degree() < dd) {
        if (is_zero()) {
            quotient = QPoly();
            return true;
        }
        return false;
    }
    std::vector<BigInt> q(degree() - dd + 1, 0);
    for (int k = degree() - dd; k >= 0; --k) {
        BigInt num = rem[k + dd];
        if (num == 0) continue;
        if (num % d.leading() != 0) return false;
        BigInt f = num / d.leading();
        q[k] = f;
        for (int i = 0; i <= dd; ++i) rem[k + i] -= f * d.coeff(i);
    }
    for (const BigInt& r : rem)
        if (r != 0) return false;
    quotient = QPoly(std::move(q));
    return true;
}

QPoly QPoly::div_exact(const QPoly& d) const {
    QPoly q;
    if (!divides(d, q)) throw std::runtime_error("inexact polynomial division");
    return q;
}

QPoly QPoly::substitute_minus_q() const {
    std::vector<BigInt> r = c_;
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return QPoly(std::move(r));
}

QPoly QPoly::negate() const {
    std::vector<BigInt> r = c_;
    for (BigInt& x : r) x = -x;
    return QPoly(std::move(r));
}

BigInt QPoly::eval(const BigInt& q) const {
    BigInt v = 0;
    for (size_t i = c_.size(); i-- > 0;) v = v * q + c_[i];
    return v;
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        if (c_[k] == 0) continue;
        BigInt a = c_[k];
        if (!first) out += (a > 0) ? "+" : "-";
        else if (a < 0) out += "-";
        BigInt mag = abs(a);
        if (mag != 1 || k == 0) out += mag.str();
        if (k >= 1) {
            out += "q";
            if (k > 1) out += "^" + std::to_string(k);
        }
        first = false;
    }
    return out;
}

const QPoly& cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic: d must be positive");
    static std::mutex m;
    static std::map<int, QPoly> cache;
    std::lock_guard<std::mutex> lock(m);
    // Divisors of a divisor of d divide d, so ascending order fills all
    // prerequisites first.
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0 || cache.count(e)) continue;
        QPoly pe = QPoly::q_pow_minus_one(e);
        for (int f = 1; f < e; ++f)
            if (e % f == 0) pe = pe.div_exact(cache.at(f));
        cache.emplace(e, std::move(pe));
    }
    return cache.at(d);
}

QPoly CyclotomicFactorization::expand() const {
    QPoly p = QPoly::monomial(q_power, scalar);
    for (const auto& [d, e] : phi)
        for (int i = 0; i < e; ++i) p = p * cyclotomic(d);
    return p;
}

std::string CyclotomicFactorization::str() const {
    std::string out;
    if (scalar != 1) out += scalar.str();
    if (q_power > 0) {
        out += "q";
        if (q_power > 1) out += "^" + std::to_string(q_power);
    }
    for (const auto& [d, e] : phi) {
        out += "Phi" + std::to_string(d);
        if (e > 1) out += "^" + std::to_string(e);
    }
    if (out.empty()) out = "1";
    return out;
}

CyclotomicFactorization cyclotomic_factor(const QPoly& p, int dmax) {
    if (p.is_zero()) throw std::invalid_argument("cyclotomic_factor: zero polynomial");
    CyclotomicFactorization f;
    f.q_power = p.valuation();
    QPoly rest = p.div_exact(QPoly::monomial(f.q_power));
    for (int d = dmax; d >= 1; --d) {
        QPoly quotient;
        while (rest.divides(cyclotomic(d), quotient)) {
            rest = quotient;
            ++f.phi[d];
        }
    }
    if (rest.degree() != 0)
        throw std::runtime_error("cyclotomic_factor: non-cyclotomic residual " + rest.str());
    f.scalar = rest.coeff(0);
    return f;
}

}  // namespace sud
