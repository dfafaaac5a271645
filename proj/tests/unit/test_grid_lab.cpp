#include <doctest.h>

#include "helpers.hpp"

using namespace dq;

TEST_SUITE("grid-lab") {

TEST_CASE("grid layout") {
    const PhysParams params{1.0, 4.0, 1.0};
    const GridSpec spec = GridSpec::defaults(params, 64);
    CHECK(spec.lq == doctest::Approx(4.0));
    CHECK(spec.lp == doctest::Approx(16.0));
    CHECK(spec.q(0) == doctest::Approx(-4.0));
    CHECK(spec.q(32) == doctest::Approx(0.0).epsilon(1e-15));
    GridSpec bad = spec;
    bad.nq = 100;
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("projectors integrate to one and have the oracle marginals") {
    const PhysParams params{0.5, 2.0, 0.75};
    const GridSpec spec = GridSpec::defaults(params, 256);
    const double lq = params.length_scale(), lp = params.momentum_scale();
    for (int n = 0; n <= 5; ++n) {
        const GridFunction w = sample(projector(n, Scheme::moyal, params), spec);
        CHECK(std::abs(integrate(w) - 1.0) < 1e-10);
        const Marginal mq = marginal(w, Axis::position);
        const Marginal mp = marginal(w, Axis::momentum);
        for (std::size_t i = 0; i < mq.x.size(); ++i) {
            CHECK(std::abs(mq.values[i] - std::pow(oracle::psi(n, mq.x[i] / lq), 2) / lq) < 1e-6);
            CHECK(std::abs(mp.values[i] - std::pow(oracle::psi(n, mp.x[i] / lp), 2) / lp) < 1e-6);
        }
    }
}

TEST_CASE("ground state is a minimum-uncertainty state") {
    const PhysParams params{0.3, 1.7, 2.2};
    const PhaseMoments m = moments(sample(projector(0, Scheme::moyal, params), GridSpec::defaults(params)));
    CHECK(std::abs(m.mean_q) < 1e-12);
    CHECK(std::abs(m.mean_p) < 1e-12);
    CHECK(std::abs(std::sqrt(m.var_q * m.var_p) - params.hbar / 2.0) < 1e-8);
    CHECK(m.var_q == doctest::Approx(params.hbar / (2.0 * params.m_omega())));
}

TEST_CASE("undecayed functions are refused") {
    const GridSpec spec = GridSpec::defaults({}, 64);
    const GridFunction flat = sample([](double, double) { return cplx(1.0); }, spec);
    CHECK_THROWS_AS(integrate(flat), NumericalError);
    CHECK_THROWS_AS(marginal(flat, Axis::position), NumericalError);
}

TEST_CASE("spectral derivatives of a Gaussian") {
    const PhysParams params;
    const GridSpec spec = GridSpec::defaults(params, 128);
    const GridFunction g = sample([](double q, double p) { return cplx(std::exp(-q * q - 0.5 * p * p)); }, spec);
    const GridFunction d = derivative(g, 1, 2);
    double worst = 0.0;
    for (int j = 0; j < spec.np; ++j) {
        for (int i = 0; i < spec.nq; ++i) {
            const double q = spec.q(i), p = spec.p(j);
            const double want = -2.0 * q * (p * p - 1.0) * std::exp(-q * q - 0.5 * p * p);
            worst = std::max(worst, std::abs(d.values(i, j) - want));
        }
    }
    CHECK(worst < 1e-11);
}

TEST_CASE("polynomial star on the grid matches the Gaussian calculus") {
    const PhysParams params{0.8, 1.0, 1.2};
    const GridSpec spec = GridSpec::defaults(params);
    const PhasePoly f = parse_expr("q^2*p - 2*i*p + q");
    for (int n : {0, 2}) {
        const GaussianPoly pi = projector(n, Scheme::moyal, params);
        const GridFunction got = grid_star_poly(f, sample(pi, spec));
        const GridFunction want = sample(gaussian_star(GaussianPoly::polynomial(f, params), pi, Scheme::moyal), spec);
        CHECK((got.values - want.values).cwiseAbs().maxCoeff() < 1e-7);
    }
    const GridFunction h = grid_star_poly(hamiltonian(params), sample(projector(1, Scheme::moyal, params), spec));
    const GridFunction pi1 = sample(projector(1, Scheme::moyal, params), spec);
    CHECK((h.values - 1.5 * params.hbar * params.omega * pi1.values).cwiseAbs().maxCoeff() < 1e-7);
}

TEST_CASE("under-resolved operands are rejected") {
    const GridSpec spec = GridSpec::defaults({}, 32);
    const GridFunction narrow = sample([](double q, double p) { return cplx(std::exp(-40.0 * (q * q + p * p))); }, spec);
    CHECK(band_edge_weight(narrow) > 1e-8);
    CHECK_THROWS_AS(grid_star_poly(parse_expr("q"), narrow), NumericalError);
}

TEST_CASE("truncated series converges inside its radius") {
    const PhysParams params;
    const GridSpec spec = GridSpec::defaults(params);
    const GaussianPoly g(PhasePoly::constant(1.0, Basis::holomorphic), -1.0, params.hbar);
    const GaussianPoly exact = gaussian_star(g, g, Scheme::moyal);
    const SeriesResult r = grid_star_series(sample(g, spec), sample(g, spec), 40);
    double worst = 0.0;
    for (int j = 0; j < spec.np; ++j) {
        for (int i = 0; i < spec.nq; ++i) {
            if (std::abs(spec.q(i)) > 1.5 || std::abs(spec.p(j)) > 1.5) continue;
            worst = std::max(worst, std::abs(r.value.values(i, j) - exact.at_qp(spec.q(i), spec.p(j), params)));
        }
    }
    CHECK(worst < 1e-6);
    CHECK(r.order_norms.size() == 41);
}

TEST_CASE("series outside its radius is detected") {
    const PhysParams params;
    const GridSpec spec = GridSpec::defaults(params);
    const GaussianPoly g(PhasePoly::constant(1.0, Basis::holomorphic), -3.0, params.hbar);
    CHECK_THROWS_AS(grid_star_series(sample(g, spec), sample(g, spec), 40), NumericalError);
}

TEST_CASE("series order bounds") {
    const GridSpec spec = GridSpec::defaults({}, 32);
    const GridFunction z = sample([](double, double) { return cplx(0.0); }, spec);
    CHECK_THROWS_AS(grid_star_series(z, z, 41), DomainError);
}

}
