#include <doctest.h>

#include "helpers.hpp"

using namespace dq;

namespace {

// Evaluates a radial phase-space function at energy h.
cplx at_energy(const GaussianPoly& f, double h, const PhysParams& params) {
    const double amp = std::sqrt(h / params.omega);
    return f(amp, amp);
}

}  // namespace

TEST_SUITE("oscillator-spectral") {

TEST_CASE("projectors match the Laguerre oracle") {
    const PhysParams params{0.8, 1.3, 1.7};
    for (int n = 0; n <= 8; ++n) {
        const GaussianPoly pi = projector(n, Scheme::moyal, params);
        for (double h : {0.0, 0.3, 1.1, 2.9}) {
            CHECK(std::abs(at_energy(pi, h, params) - oracle::moyal_projector(n, h, params.hbar, params.omega)) < 1e-11);
        }
    }
    const GaussianPoly pi1 = projector(1, Scheme::moyal, {});
    CHECK(std::abs(pi1.at_qp(0.0, 0.0, {}) - cplx(-2.0)) < 1e-15);
}

TEST_CASE("normal projectors and their transition image") {
    const PhysParams params{1.2, 0.5, 2.0};
    for (int n = 0; n <= 6; ++n) {
        const GaussianPoly pn = projector(n, Scheme::normal, params);
        const double x = 0.7;
        const cplx want = std::exp(-x * x / params.hbar) * std::pow(x * x / params.hbar, n) / oracle::factorial(n);
        CHECK(std::abs(pn(x, x) - want) < 1e-13);
        CHECK(testing::relative(transition_apply(TransitionOp::normal_to_moyal(), pn), projector(n, Scheme::moyal, params)) < 1e-12);
        CHECK(testing::relative(transition_apply(TransitionOp::normal_to_moyal().inverted(), projector(n, Scheme::moyal, params)), pn) <
              1e-12);
    }
}

TEST_CASE("projector algebra") {
    const PhysParams params{0.6, 1.0, 1.0};
    for (Scheme s : {Scheme::moyal, Scheme::normal}) {
        for (int n = 0; n <= 5; ++n) {
            const GaussianPoly pn = projector(n, s, params);
            CHECK(std::abs(phase_space_integral(pn) - 1.0) < 1e-12);
            CHECK(testing::relative(projector(n, s, params, ProjectorMethod::ladder), pn) < 1e-10);
            for (int m = 0; m <= 5; ++m) {
                const GaussianPoly prod = gaussian_star(pn, projector(m, s, params), s);
                CHECK((n == m ? testing::relative(prod, pn) : prod.max_abs_coefficient()) < 1e-10);
            }
        }
    }
}

TEST_CASE("ground state is annihilated by a") {
    const PhysParams params;
    const GaussianPoly a(PhasePoly::variable(Var::a), 0.0, params.hbar);
    for (Scheme s : {Scheme::moyal, Scheme::normal}) {
        CHECK(gaussian_star(a, projector(0, s, params), s).max_abs_coefficient() < 1e-14);
    }
}

TEST_CASE("gaussian star reproduces the polynomial star") {
    std::mt19937_64 rng(31);
    const PhysParams params{0.7, 1.0, 1.0};
    for (Scheme s : {Scheme::moyal, Scheme::normal}) {
        for (int k = 0; k < 20; ++k) {
            const PhasePoly f = testing::random_poly(rng, Basis::holomorphic, 4);
            const PhasePoly g = testing::random_poly(rng, Basis::holomorphic, 4);
            const GaussianPoly gf(f, 0.0, params.hbar), gg(g, 0.0, params.hbar);
            const GaussianPoly want(star_poly(f, g, s, params), 0.0, params.hbar);
            CHECK(testing::relative(gaussian_star(gf, gg, s), want) < 1e-12);
        }
    }
}

TEST_CASE("gaussian star of plain Gaussians") {
    // Moyal product of exp(mu1 a abar/hbar) and exp(mu2 a abar/hbar): prefactor
    // 1/d and exponent (mu1 + mu2)/d with d = 1 + mu1 mu2/4.
    const double hbar = 1.0;
    const PhasePoly one = PhasePoly::constant(1.0, Basis::holomorphic);
    for (auto [m1, m2] : {std::pair{-1.0, -1.0}, std::pair{-0.5, -3.0}, std::pair{0.2, -1.5}}) {
        const GaussianPoly r = gaussian_star(GaussianPoly(one, m1, hbar), GaussianPoly(one, m2, hbar), Scheme::moyal);
        const double d = 1.0 + m1 * m2 / 4.0;
        CHECK(std::abs(r.mu() - (m1 + m2) / d) < 1e-14);
        CHECK(std::abs(r.prefactor().coefficient({0, 0}).coefficient(0) - 1.0 / d) < 1e-14);
    }
    CHECK_THROWS_AS(gaussian_star(GaussianPoly(one, -2.0, hbar), GaussianPoly(one, 2.0, hbar), Scheme::moyal),
                    SingularityError);
    CHECK_THROWS_AS(gaussian_star(GaussianPoly(one, -1.0, hbar), GaussianPoly(one, -1.0, hbar), Scheme::standard),
                    UnsupportedError);
}

TEST_CASE("phase space integral") {
    const PhasePoly z = parse_expr("a*abar");
    CHECK(std::abs(phase_space_integral(GaussianPoly(z.pow(2), -1.0, 0.5)) - 2.0 * 0.25) < 1e-15);
    CHECK_THROWS_AS(phase_space_integral(GaussianPoly(z, 0.5, 1.0)), DomainError);
}

TEST_CASE("spectra") {
    const PhysParams params{0.9, 1.4, 2.3};
    const double hw = params.hbar * params.omega;
    for (const SpectralLine& line : spectrum(Scheme::moyal, 8, params)) {
        CHECK(std::abs(line.energy - (line.n + 0.5) * hw) < 1e-12 * hw * (line.n + 1));
        CHECK(line.residual < 1e-12);
    }
    for (const SpectralLine& line : spectrum(Scheme::normal, 8, params)) {
        CHECK(std::abs(line.energy - line.n * hw) < 1e-12 * hw * (line.n + 1));
        CHECK(line.residual < 1e-12);
    }
    CHECK_THROWS_AS(spectrum(Scheme::moyal, -1, params), DomainError);
    CHECK_THROWS_AS(projector(33, Scheme::moyal, params), DomainError);
    CHECK_THROWS_AS(projector(0, Scheme::standard, params), UnsupportedError);
}

TEST_CASE("expectation of H in the Moyal projectors") {
    const PhysParams params;
    for (int n = 0; n <= 4; ++n) {
        CHECK(std::abs(expectation(hamiltonian(params), projector(n, Scheme::moyal, params), Scheme::moyal, params) -
                       (n + 0.5)) < 1e-12);
    }
}

TEST_CASE("closed-form star exponential") {
    const PhysParams params{1.0, 1.0, 1.0};
    for (double t : {0.1, 0.3, 1.7, 2.9}) {
        const StarExponential ex(Scheme::moyal, t, params);
        const GaussianPoly g = ex.as_gaussian();
        for (double h : {0.0, 0.8, 3.0}) {
            const cplx want = oracle::moyal_star_exp(h, t, params.hbar, params.omega);
            CHECK(std::abs(ex(h) - want) < 1e-13 * std::abs(want));
            CHECK(std::abs(at_energy(g, h, params) - want) < 1e-13 * std::abs(want));
        }
    }
    CHECK_THROWS_AS(StarExponential(Scheme::moyal, M_PI, params), SingularityError);
    // The normal exponential is regular everywhere.
    const StarExponential n(Scheme::normal, M_PI, params);
    CHECK(std::abs(n(1.0) - std::exp(-2.0)) < 1e-14);
}

TEST_CASE("star exponential solves the evolution equation") {
    // i hbar d/dt Exp = H * Exp, checked on the Gaussian form with a
    // centred difference in t.
    const PhysParams params{0.7, 1.2, 0.9};
    const GaussianPoly h = GaussianPoly::polynomial(hamiltonian(params), params);
    const double t = 0.4, dt = 1e-5;
    const GaussianPoly e = StarExponential(Scheme::moyal, t, params).as_gaussian();
    const GaussianPoly hs = gaussian_star(h, e, Scheme::moyal);
    const StarExponential plus(Scheme::moyal, t + dt, params), minus(Scheme::moyal, t - dt, params);
    for (double x : {0.0, 0.5, 1.3}) {
        const double en = params.omega * x * x;
        const cplx lhs = cplx(0.0, params.hbar) * (plus(en) - minus(en)) / (2.0 * dt);
        CHECK(std::abs(lhs - hs(x, x)) < 1e-8);
    }
}

TEST_CASE("ODE integration converges to the closed form") {
    const PhysParams params;
    const RadialSamples s = star_exponential_ode(0.3, RadialGrid{}, params);
    double worst = 0.0;
    for (std::size_t i = 0; i < s.h.size(); ++i) {
        const cplx want = oracle::moyal_star_exp(s.h[i], 0.3, 1.0, 1.0);
        worst = std::max(worst, std::abs(s.values[i] - want) / std::abs(want));
    }
    CHECK(worst < 1e-6);
    CHECK(s.h.back() == doctest::Approx(6.0));
    CHECK_THROWS_AS(star_exponential_ode(M_PI, RadialGrid{}, params), SingularityError);
}

TEST_CASE("Fourier-Dirichlet projection") {
    const PhysParams params{1.0, 1.0, 1.0};
    std::vector<double> hs;
    for (int i = 0; i <= 80; ++i) hs.push_back(0.1 * i);
    for (Scheme s : {Scheme::moyal, Scheme::normal}) {
        const StarExpFunction fn = closed_form_sampler(s, params);
        for (int n = 0; n <= 5; ++n) {
            const double e = s == Scheme::moyal ? n + 0.5 : n;
            const std::vector<cplx> got = fd_project(fn, e, hs, params);
            const GaussianPoly pi = projector(n, s, params);
            for (std::size_t i = 0; i < hs.size(); ++i) CHECK(std::abs(got[i] - at_energy(pi, hs[i], params)) < 1e-10);
        }
        // Off-line energies on the hbar w / 2 lattice, where one period cancels exactly.
        for (double off : s == Scheme::moyal ? std::vector<double>{1.0, 2.0} : std::vector<double>{0.5, 2.5}) {
            for (cplx v : fd_project(fn, off, hs, params)) CHECK(std::abs(v) < 1e-10);
        }
    }
    FourierDirichletOptions coarse;
    coarse.samples = 16;
    CHECK_THROWS_AS(fd_project(closed_form_sampler(Scheme::moyal, params), 9.5, hs, params, coarse), DomainError);
}

TEST_CASE("spectral lines are discovered") {
    const PhysParams params;
    std::vector<double> hs;
    for (int i = 0; i <= 60; ++i) hs.push_back(0.1 * i);
    const std::vector<double> lines = discover_lines(closed_form_sampler(Scheme::normal, params), 3.2, hs, params);
    REQUIRE(lines.size() == 4);
    for (int n = 0; n < 4; ++n) CHECK(lines[n] == doctest::Approx(n).epsilon(1e-9));
}

}
