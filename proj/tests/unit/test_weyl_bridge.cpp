#include <doctest.h>

#include "helpers.hpp"

using namespace dq;

namespace {

double max_abs(const FockMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_SUITE("weyl-bridge") {

TEST_CASE("ladder operators") {
    const PhysParams params{0.5, 2.0, 1.5};
    const FockOperators ops = fock_operators(params, 12);
    const FockMatrix comm = ops.a * ops.adag - ops.adag * ops.a;
    CHECK(max_abs(comm.topLeftCorner(11, 11) - params.hbar * FockMatrix::Identity(11, 11)) < 1e-14);
    const FockMatrix qp = ops.q * ops.p - ops.p * ops.q;
    CHECK(max_abs(qp.topLeftCorner(11, 11) - cplx(0.0, params.hbar) * FockMatrix::Identity(11, 11)) < 1e-13);
    for (int n = 0; n < 12; ++n) CHECK(std::abs(ops.h(n, n) - (n + 0.5) * params.hbar * params.omega) < 1e-13);
    CHECK(max_abs(ops.adag - ops.a.adjoint()) == 0.0);
}

TEST_CASE("orderings of qp") {
    const PhysParams params;
    const int d = 10;
    const FockOperators ops = fock_operators(params, d + 2);
    auto crop = [&](const FockMatrix& m) { return FockMatrix(m.topLeftCorner(d, d)); };
    const PhasePoly qp = parse_expr("q*p");
    CHECK(max_abs(theta_order(qp, Ordering::standard, d, params) - crop(ops.q * ops.p)) < 1e-13);
    CHECK(max_abs(theta_order(qp, Ordering::antistandard, d, params) - crop(ops.p * ops.q)) < 1e-13);
    CHECK(max_abs(theta_order(qp, Ordering::weyl, d, params) - crop(0.5 * (ops.q * ops.p + ops.p * ops.q))) < 1e-13);
    const PhasePoly aa = parse_expr("a*abar");
    CHECK(max_abs(theta_order(aa, Ordering::normal, d, params) - crop(ops.adag * ops.a)) < 1e-13);
    CHECK(max_abs(theta_order(aa, Ordering::antinormal, d, params) - crop(ops.a * ops.adag)) < 1e-13);
}

TEST_CASE("weyl recursion matches brute-force symmetrization") {
    const PhysParams params{1.0, 0.8, 1.3};
    for (int m = 0; m <= 4; ++m) {
        for (int n = 0; m + n <= 5; ++n) {
            PhasePoly mono(Basis::canonical);
            mono.add_term({m, n}, cplx(1.0));
            CHECK(max_abs(theta_order(mono, Ordering::weyl, 12, params) - weyl_by_enumeration(m, n, 12, params)) < 1e-11);
        }
    }
}

TEST_CASE("weyl image is the same from either basis") {
    std::mt19937_64 rng(41);
    const PhysParams params{1.0, 1.0, 1.0};
    for (int k = 0; k < 10; ++k) {
        const PhasePoly f = testing::random_poly(rng, Basis::canonical, 4);
        const FockMatrix x = theta_order(f, Ordering::weyl, 16, params);
        const FockMatrix y = theta_order(to_holomorphic(f, params), Ordering::weyl, 16, params);
        CHECK(max_abs(x - y) < 1e-11 * std::max(1.0, max_abs(x)));
    }
}

TEST_CASE("homomorphism for the three pairings") {
    std::mt19937_64 rng(42);
    const PhysParams params{0.8, 1.1, 1.4};
    for (Pairing pairing : {Pairing::weyl_moyal, Pairing::normal_normal, Pairing::standard_star}) {
        const Basis basis = pairing == Pairing::normal_normal ? Basis::holomorphic : Basis::canonical;
        for (int k = 0; k < 10; ++k) {
            const PhasePoly f = testing::random_poly(rng, basis, 4);
            const PhasePoly g = testing::random_poly(rng, basis, 4);
            CHECK(homomorphism_residual(f, g, pairing, 32, params) < 1e-9);
        }
    }
    CHECK(pairing_ordering(Pairing::standard_star) == Ordering::antistandard);
    CHECK(pairing_scheme(Pairing::standard_star) == Scheme::standard);
}

TEST_CASE("mismatched pairings are not homomorphisms") {
    const PhysParams params;
    const PhasePoly q = parse_expr("q"), p = parse_expr("p");
    CHECK(homomorphism_residual(q, p, Ordering::standard, Scheme::standard, 16, params) > 1e-3);
    CHECK(homomorphism_residual(q, p, Ordering::weyl, Scheme::standard, 16, params) > 1e-3);
    CHECK(homomorphism_residual(q, p, Ordering::standard, Scheme::moyal, 16, params) > 1e-3);
}

TEST_CASE("coherent-state expectation is the normal symbol") {
    std::mt19937_64 rng(43);
    const PhysParams params{0.6, 1.0, 1.0};
    for (int k = 0; k < 10; ++k) {
        const PhasePoly f = testing::random_poly(rng, Basis::holomorphic, 3);
        const FockMatrix op = theta_order(f, Ordering::normal, 60, params);
        const cplx z(0.3, -0.4);
        const CoherentSymbol s = coherent_symbol(op, z, params);
        CHECK(std::abs(s.value - evaluate(f, {z, std::conj(z)}, params.hbar)) < 1e-10 * std::max(1.0, f.max_abs_coefficient()));
        CHECK(s.tail_weight < 1e-20);
    }
}

TEST_CASE("weyl symbol of number-state projectors") {
    const PhysParams params{0.7, 1.3, 0.9};
    const std::vector<double> q = {-1.0, 0.0, 0.45};
    const std::vector<double> p = {-0.6, 0.2};
    for (int n = 0; n <= 4; ++n) {
        FockMatrix op = FockMatrix::Zero(30, 30);
        op(n, n) = 1.0;
        const WeylSymbol w = weyl_symbol(op, q, p, params);
        CHECK_FALSE(w.truncated);
        const GaussianPoly pi = projector(n, Scheme::moyal, params);
        for (std::size_t i = 0; i < q.size(); ++i) {
            for (std::size_t j = 0; j < p.size(); ++j) CHECK(std::abs(w.values(i, j) - pi.at_qp(q[i], p[j], params)) < 1e-9);
        }
    }
}

TEST_CASE("weyl symbol flags operators that reach the basis edge") {
    const PhysParams params;
    const FockMatrix op = theta_order(parse_expr("q^2 + q*p"), Ordering::weyl, 40, params);
    CHECK(weyl_symbol(op, {0.0}, {0.0}, params).truncated);
}

TEST_CASE("ordering names") {
    for (Ordering o : {Ordering::standard, Ordering::antistandard, Ordering::weyl, Ordering::normal, Ordering::antinormal}) {
        CHECK(parse_ordering(to_string(o)) == o);
    }
    CHECK_THROWS_AS(parse_ordering("symmetric"), DomainError);
}

}
