#include <doctest.h>

#include "helpers.hpp"

using namespace dq;

TEST_SUITE("phase-core") {

TEST_CASE("hbar polynomials multiply and evaluate") {
    const HbarPoly x = HbarPoly(2.0) + HbarPoly::monomial(1, cplx(0.0, 3.0));
    const HbarPoly y = x * x;
    CHECK(y.degree() == 2);
    CHECK(std::abs(y.coefficient(1) - cplx(0.0, 12.0)) == 0.0);
    CHECK(std::abs(y.evaluate(0.5) - x.evaluate(0.5) * x.evaluate(0.5)) < 1e-14);
    CHECK((x - x).is_zero());
    CHECK(y.shifted(2).low_degree() == 2);
}

TEST_CASE("parse and print round-trip") {
    for (const char* text : {"q*p + (i/2)*hbar", "a^3*abar - 2*hbar^2", "(1 + 2*i)*q^2*p^4 - p/3", "0"}) {
        const PhasePoly f = parse_expr(text);
        CHECK(parse_expr(to_string(f)) == f);
    }
    CHECK(to_string(parse_expr("p*q")) == "q*p");
    CHECK(to_string(parse_expr("hbar*i/2 + q*p")) == "q*p + (i/2)*hbar");
}

TEST_CASE("parse precedence") {
    const PhasePoly f = parse_expr("-q^2 + 2*q*p/4");
    CHECK(f.coefficient({2, 0}).coefficient(0) == cplx(-1.0));
    CHECK(f.coefficient({1, 1}).coefficient(0) == cplx(0.5));
    CHECK(parse_expr("(q+p)^2") == parse_expr("q^2 + 2*q*p + p^2"));
}

TEST_CASE("parse errors carry positions") {
    auto position_of = [](const char* text) {
        try {
            parse_expr(text);
        } catch (const ParseError& e) {
            return static_cast<int>(e.position());
        }
        return -1;
    };
    CHECK(position_of("q**") == 2);
    CHECK(position_of("q p") == 2);
    CHECK(position_of("q + x") == 4);
    CHECK(position_of("q^-1") >= 2);
    CHECK(position_of("q/p") >= 1);
    CHECK(position_of("(q + p") >= 0);
    CHECK_THROWS_AS(parse_expr("q*a"), ParseError);
    CHECK_THROWS_AS(parse_expr("a", Basis::canonical), ParseError);
}

TEST_CASE("exponent overflow is rejected") {
    CHECK_THROWS_AS(parse_expr("q^64"), ParseError);
    CHECK_THROWS_AS(parse_expr("q^40") * parse_expr("q^40"), DegreeOverflow);
}

TEST_CASE("basis changes are inverse to each other") {
    std::mt19937_64 rng(11);
    const PhysParams params{1.3, 0.7, 2.1};
    for (int k = 0; k < 30; ++k) {
        const PhasePoly f = testing::random_poly(rng, Basis::canonical, 5);
        CHECK(testing::relative(to_canonical(to_holomorphic(f, params), params), f) < 1e-13);
        const PhasePoly g = testing::random_poly(rng, Basis::holomorphic, 5);
        CHECK(testing::relative(to_holomorphic(to_canonical(g, params), params), g) < 1e-13);
    }
    CHECK_THROWS_AS(to_holomorphic(parse_expr("a"), params), BasisMismatch);
}

TEST_CASE("basis change preserves values") {
    const PhysParams params{0.9, 1.7, 0.6};
    const PhasePoly f = parse_expr("q^3*p - 2*i*p^2 + hbar*q");
    const PhasePoly h = to_holomorphic(f, params);
    const double q = 0.4, p = -1.1;
    const double mw = params.m_omega();
    const cplx a = std::sqrt(mw / 2.0) * cplx(q, p / mw);
    CHECK(std::abs(evaluate(h, {a, std::conj(a)}, params.hbar) - evaluate(f, {q, p}, params.hbar)) < 1e-12);
}

TEST_CASE("oscillator variables") {
    const PhysParams params{1.0, 2.0, 3.0};
    const PhasePoly h = to_holomorphic(parse_expr("p^2/4 + 9*q^2"), params);  // p^2/2m + m w^2 q^2/2
    CHECK(testing::relative(h, parse_expr("3*a*abar")) < 1e-14);
}

TEST_CASE("poisson brackets") {
    CHECK(poisson_bracket(parse_expr("q"), parse_expr("p")) == parse_expr("1"));
    CHECK(poisson_bracket(parse_expr("a"), parse_expr("abar")) == PhasePoly::constant(cplx(0.0, -1.0), Basis::holomorphic));
}

TEST_CASE("poisson bracket matches the dense oracle and satisfies Jacobi") {
    std::mt19937_64 rng(12);
    for (int k = 0; k < 40; ++k) {
        const PhasePoly f = testing::random_poly(rng, Basis::canonical, 4);
        const PhasePoly g = testing::random_poly(rng, Basis::canonical, 4);
        const PhasePoly h = testing::random_poly(rng, Basis::canonical, 4);
        CHECK(oracle::max_difference(testing::to_dense(poisson_bracket(f, g), 1.0),
                                     testing::poisson(testing::to_dense(f, 1.0), testing::to_dense(g, 1.0))) == 0.0);
        const PhasePoly jac = poisson_bracket(f, poisson_bracket(g, h)) + poisson_bracket(g, poisson_bracket(h, f)) +
                              poisson_bracket(h, poisson_bracket(f, g));
        CHECK(jac.max_abs_coefficient() < 1e-10);
    }
}

TEST_CASE("derivatives") {
    const PhasePoly f = parse_expr("q^3*p^2");
    CHECK(differentiate(f, Var::q) == parse_expr("3*q^2*p^2"));
    CHECK(derivative(f, 3, 2) == parse_expr("12"));
    CHECK(derivative(f, 4, 0).is_zero());
    CHECK_THROWS_AS(differentiate(f, Var::a), BasisMismatch);
}

TEST_CASE("hbar slices") {
    const PhasePoly f = parse_expr("q + hbar*p + 3*hbar^2");
    CHECK(f.hbar_degree() == 2);
    CHECK(f.hbar_slice(1) == parse_expr("p"));
    CHECK(f.bind_hbar(2.0) == parse_expr("q + 2*p + 12"));
}

}
