#include "sudecomp/expr.hpp"

#include <doctest.h>

using namespace sud;

TEST_CASE("poly parse and print") {
    CHECK(Poly::parse("26+10*alpha-15*beta").str() == "26+10*alpha-15*beta");
    CHECK(Poly::parse("a+2").str() == "2+a");
    CHECK(Poly::parse("d10").str() == "d10");
    CHECK(Poly::parse("3+alpha").str() == "3+alpha");
    CHECK(Poly::parse("0").is_zero());
    CHECK(Poly::parse("6-3*d4+3*d5+2*d6-3*d7+3*d8+d9").linear_coeff("d6") == 2);
    CHECK_THROWS(Poly::parse("2+*x"));
    CHECK_THROWS(Poly::parse("2x"));
    CHECK_THROWS(Poly::parse(""));
    CHECK(Poly(5).is_constant());
    CHECK(Poly::parse("x").is_affine());
    CHECK((Poly::var("x") * Poly::var("y")).is_affine() == false);
}

TEST_CASE("poly arithmetic and substitution") {
    Poly x = Poly::var("x");
    Poly y = Poly::var("y");
    Poly p = x * y + Poly(3) * x - Poly(2);
    CHECK(p.substitute({{"x", BigRat(2)}, {"y", BigRat(5)}}).constant_term() == 14);
    CHECK((p - p).is_zero());
    std::map<std::string, Poly> sub{{"y", x + Poly(1)}};
    Poly q = p.substitute(sub);  // x(x+1) + 3x - 2
    CHECK(q.substitute({{"x", BigRat(3)}}).constant_term() == 19);
}

TEST_CASE("solve single and contradictory constraints") {
    Constraint c1{ConstraintKind::Equality, Poly(-2) + Poly::var("y1"), BigRat(0), "demo"};
    SolveReport r1 = solve({c1}, {{"y1", std::nullopt, std::nullopt, true}});
    CHECK(r1.consistent);
    CHECK(r1.resolved.at("y1") == 2);

    Constraint a{ConstraintKind::Equality, Poly::var("y") - Poly(1), BigRat(0), ""};
    Constraint b{ConstraintKind::Equality, Poly::var("y") - Poly(2), BigRat(0), ""};
    SolveReport r2 = solve({a, b}, {{"y", std::nullopt, std::nullopt, true}});
    CHECK(!r2.consistent);
    CHECK(!r2.conflicts.empty());
}

TEST_CASE("solve with bounds and free unknowns") {
    // y = x + 1, 0 <= x, x <= 2: x remains free inside [0, 2]
    Constraint eq{ConstraintKind::Equality, Poly::var("y") - Poly::var("x") - Poly(1), BigRat(0), ""};
    Constraint ge{ConstraintKind::LowerBound, Poly::var("x"), BigRat(0), ""};
    Constraint le{ConstraintKind::UpperBound, Poly::var("x"), BigRat(2), ""};
    SolveReport r = solve({eq, ge, le}, {{"x", std::nullopt, std::nullopt, true},
                                         {"y", std::nullopt, std::nullopt, true}});
    CHECK(r.consistent);
    CHECK(r.dependent.count("y") == 1);
    CHECK(r.free_unknowns == std::vector<std::string>{"x"});
    CHECK(*r.intervals.at("x").first == 0);
    CHECK(*r.intervals.at("x").second == 2);

    // Interval collapse pins the variable.
    Constraint ge2{ConstraintKind::LowerBound, Poly::var("z"), BigRat(3), ""};
    Constraint le2{ConstraintKind::UpperBound, Poly::var("z"), BigRat(3), ""};
    SolveReport r2 = solve({ge2, le2}, {{"z", std::nullopt, std::nullopt, true}});
    CHECK(r2.consistent);
    CHECK(r2.resolved.at("z") == 3);

    // Infeasible bounds are reported.
    Constraint bad{ConstraintKind::UpperBound, Poly::var("w"), BigRat(-1), ""};
    SolveReport r3 = solve({bad}, {{"w", BigRat(0), std::nullopt, true}});
    CHECK(!r3.consistent);
}

TEST_CASE("constraint printing") {
    Constraint c{ConstraintKind::LowerBound, Poly::var("e20") - Poly(3), BigRat(0), "src"};
    CHECK(c.str() == "-3+e20 >= 0");
}
