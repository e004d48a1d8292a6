#pragma once

#include "sudecomp/bigint.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sud {

// Sparse multivariate polynomial with exact rational coefficients. Table
// entries are restricted to affine (degree <= 1, integer coefficients);
// products of unknowns only ever arise transiently inside R_w decompositions.
class Poly {
public:
    using Monomial = std::map<std::string, int>;  // var -> exponent (> 0)

    Poly() = default;
    Poly(long long c);  // NOLINT: implicit constant
    explicit Poly(const BigRat& c);
    static Poly var(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    BigRat constant_term() const;
    bool is_affine() const;
    bool has_integer_coeffs() const;
    std::set<std::string> vars() const;
    // Coefficient of a degree-1 variable term.
    BigRat linear_coeff(const std::string& name) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return terms_ != o.terms_; }
    bool operator<(const Poly& o) const { return terms_ < o.terms_; }

    Poly substitute(const std::map<std::string, BigRat>& values) const;
    Poly substitute(const std::map<std::string, Poly>& values) const;

    const std::map<Monomial, BigRat>& terms() const { return terms_; }

    // Canonical form: constant first, then terms sorted by monomial;
    // integer coefficients print bare, rationals as a/b.
    std::string str() const;

    // Entry grammar: integer | affine "c0+c1*name-..."; "." is handled by the
    // table layer. Multiplication sign required between coefficient and name.
    static Poly parse(const std::string& s);

private:
    std::map<Monomial, BigRat> terms_;
    void prune(const Monomial& m);
};

enum class ConstraintKind { Equality, LowerBound, UpperBound };

// lhs = rhs / lhs >= rhs / lhs <= rhs, with affine lhs.
struct Constraint {
    ConstraintKind kind = ConstraintKind::Equality;
    Poly lhs;
    BigRat rhs = 0;
    std::string provenance;

    std::string str() const;
};

struct UnknownDomain {
    std::string name;
    std::optional<BigRat> lo;
    std::optional<BigRat> hi;
    bool integral = true;
};

struct SolveReport {
    bool consistent = true;
    std::map<std::string, BigRat> resolved;
    // Unresolved unknowns expressed in terms of free ones (after elimination).
    std::map<std::string, Poly> dependent;
    std::vector<std::string> free_unknowns;
    std::map<std::string, std::pair<std::optional<BigRat>, std::optional<BigRat>>> intervals;
    std::vector<std::string> conflicts;

    std::string str() const;
};

// Exact Gaussian elimination on the equalities, then interval propagation of
// the bound constraints over the declared domains. Inconsistency is reported,
// not thrown.
SolveReport solve(const std::vector<Constraint>& constraints,
                  const std::vector<UnknownDomain>& unknowns);

}  // namespace sud
