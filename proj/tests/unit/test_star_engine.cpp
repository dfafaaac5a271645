#include <doctest.h>

#include "helpers.hpp"

using namespace dq;

TEST_SUITE("star-engine") {

TEST_CASE("elementary products") {
    CHECK(to_string(star_poly(parse_expr("q"), parse_expr("p"), Scheme::moyal)) == "q*p + (i/2)*hbar");
    CHECK(to_string(star_poly(parse_expr("p"), parse_expr("q"), Scheme::moyal)) == "q*p - (i/2)*hbar");
    CHECK(to_string(star_poly(parse_expr("q"), parse_expr("p"), Scheme::standard)) == "q*p + i*hbar");
    CHECK(to_string(star_poly(parse_expr("p"), parse_expr("q"), Scheme::standard)) == "q*p");
    CHECK(to_string(star_poly(parse_expr("a"), parse_expr("abar"), Scheme::normal)) == "a*abar + hbar");
    CHECK(to_string(star_poly(parse_expr("abar"), parse_expr("a"), Scheme::normal)) == "a*abar");
    CHECK(to_string(star_poly(parse_expr("a"), parse_expr("abar"), Scheme::moyal)) == "a*abar + (1/2)*hbar");
}

TEST_CASE("commutators are scheme independent on the generators") {
    for (Scheme s : {Scheme::moyal, Scheme::standard}) {
        CHECK(star_commutator(parse_expr("q"), parse_expr("p"), s) == parse_expr("i*hbar"));
    }
    CHECK(star_commutator(parse_expr("a"), parse_expr("abar"), Scheme::normal) ==
          PhasePoly::hbar(Basis::holomorphic));
}

TEST_CASE("moyal product matches the dense oracle") {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 50; ++k) {
        const PhasePoly f = testing::random_poly(rng, Basis::canonical, 5);
        const PhasePoly g = testing::random_poly(rng, Basis::canonical, 5);
        for (double hbar : {1.0, 0.37}) {
            const oracle::Poly want = oracle::moyal(testing::to_dense(f, hbar), testing::to_dense(g, hbar), hbar);
            CHECK(oracle::max_difference(testing::to_dense(star_poly(f, g, Scheme::moyal), hbar), want) < 1e-10);
        }
    }
}

TEST_CASE("shift formula agrees with the series") {
    std::mt19937_64 rng(22);
    for (int k = 0; k < 50; ++k) {
        const PhasePoly f = testing::random_poly(rng, Basis::canonical, 5);
        const PhasePoly g = testing::random_poly(rng, Basis::canonical, 5);
        CHECK(testing::relative(star_shift(f, g), star_poly(f, g, Scheme::moyal)) < 1e-13);
    }
    CHECK_THROWS_AS(star_shift(parse_expr("a"), parse_expr("abar")), BasisMismatch);
}

TEST_CASE("associativity on random triples") {
    std::mt19937_64 rng(23);
    for (Scheme s : {Scheme::moyal, Scheme::standard, Scheme::normal}) {
        const Basis basis = natural_basis(s);
        for (int k = 0; k < 100; ++k) {
            const PhasePoly f = testing::random_poly(rng, basis, 3);
            const PhasePoly g = testing::random_poly(rng, basis, 3);
            const PhasePoly h = testing::random_poly(rng, basis, 3);
            CHECK(testing::relative(star_poly(star_poly(f, g, s), h, s), star_poly(f, star_poly(g, h, s), s)) < 1e-12);
        }
    }
}

TEST_CASE("star commutator satisfies Jacobi") {
    std::mt19937_64 rng(24);
    for (int k = 0; k < 30; ++k) {
        const PhasePoly f = testing::random_poly(rng, Basis::canonical, 3);
        const PhasePoly g = testing::random_poly(rng, Basis::canonical, 3);
        const PhasePoly h = testing::random_poly(rng, Basis::canonical, 3);
        auto br = [](const PhasePoly& x, const PhasePoly& y) { return star_commutator(x, y, Scheme::moyal); };
        CHECK((br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g))).max_abs_coefficient() < 1e-10);
    }
}

TEST_CASE("unit and hbar to zero limit") {
    std::mt19937_64 rng(25);
    const PhasePoly one = PhasePoly::constant(1.0, Basis::canonical);
    for (int k = 0; k < 20; ++k) {
        const PhasePoly f = testing::random_poly(rng, Basis::canonical, 5);
        const PhasePoly g = testing::random_poly(rng, Basis::canonical, 5);
        for (Scheme s : {Scheme::moyal, Scheme::standard}) {
            CHECK(star_poly(one, f, s) == f);
            CHECK(star_poly(f, one, s) == f);
            CHECK(testing::relative(star_poly(f, g, s).hbar_slice(0), f * g) == 0.0);
        }
    }
}

TEST_CASE("correspondence: first order of the commutator is the Poisson bracket") {
    std::mt19937_64 rng(26);
    for (Scheme s : {Scheme::moyal, Scheme::standard, Scheme::normal}) {
        for (int k = 0; k < 40; ++k) {
            const PhasePoly f = testing::random_poly(rng, natural_basis(s), 5);
            const PhasePoly g = testing::random_poly(rng, natural_basis(s), 5);
            const PhasePoly c = star_commutator(f, g, s) * cplx(0.0, -1.0);
            CHECK(c.hbar_slice(0).is_zero());
            CHECK(testing::relative(c.hbar_slice(1), poisson_bracket(f, g)) < 1e-14);
            if (s == Scheme::moyal) CHECK(c.hbar_slice(2).is_zero());
        }
    }
}

TEST_CASE("moyal is basis independent") {
    std::mt19937_64 rng(27);
    const PhysParams params{1.0, 1.5, 0.8};
    for (int k = 0; k < 30; ++k) {
        const PhasePoly f = testing::random_poly(rng, Basis::canonical, 4);
        const PhasePoly g = testing::random_poly(rng, Basis::canonical, 4);
        const PhasePoly viaholo =
            star_poly(to_holomorphic(f, params), to_holomorphic(g, params), Scheme::moyal, params);
        CHECK(testing::relative(to_canonical(viaholo, params), star_poly(f, g, Scheme::moyal)) < 1e-12);
    }
}

TEST_CASE("complex conjugation reverses the moyal product") {
    std::mt19937_64 rng(28);
    for (Basis basis : {Basis::canonical, Basis::holomorphic}) {
        for (int k = 0; k < 30; ++k) {
            const PhasePoly f = testing::random_poly(rng, basis, 4);
            const PhasePoly g = testing::random_poly(rng, basis, 4);
            CHECK(testing::relative(hermitean_conj(star_poly(f, g, Scheme::moyal)),
                                    star_poly(hermitean_conj(g), hermitean_conj(f), Scheme::moyal)) < 1e-13);
        }
    }
}

TEST_CASE("transition operators intertwine the products") {
    std::mt19937_64 rng(29);
    for (TransitionOp t : {TransitionOp::standard_to_moyal(), TransitionOp::normal_to_moyal()}) {
        for (int k = 0; k < 50; ++k) {
            const PhasePoly f = testing::random_poly(rng, t.basis(), 6);
            const PhasePoly g = testing::random_poly(rng, t.basis(), 6);
            const PhasePoly lhs = transition_apply(t, star_poly(f, g, t.source()));
            const PhasePoly rhs = star_poly(transition_apply(t, f), transition_apply(t, g), Scheme::moyal);
            CHECK(testing::relative(lhs, rhs) < 1e-12);
            CHECK(testing::relative(transition_apply(t.inverted(), transition_apply(t, f)), f) < 1e-13);
            CHECK(transition_apply(t, f).hbar_slice(0) == f.hbar_slice(0));
        }
    }
    CHECK(transition_apply(TransitionOp::standard_to_moyal(), parse_expr("q*p")) == parse_expr("q*p - (i/2)*hbar"));
    CHECK(transition_apply(TransitionOp::normal_to_moyal(), parse_expr("a*abar")) == parse_expr("a*abar - hbar/2"));
    CHECK_THROWS_AS(transition_apply(TransitionOp::normal_to_moyal(), parse_expr("q")), BasisMismatch);
}

TEST_CASE("scheme parsing") {
    CHECK(parse_scheme("moyal") == Scheme::moyal);
    CHECK(to_string(Scheme::normal) == "normal");
    CHECK_THROWS_AS(parse_scheme("weyl"), DomainError);
}

}
