#include <doctest.h>

#include "helpers.hpp"

using namespace dq;

TEST_SUITE("kernel-dynamics") {

TEST_CASE("Mehler kernel matches the closed form") {
    const PhysParams params{0.7, 1.4, 1.9};
    for (double t : {0.2, 0.9, 1.5}) {
        const GaussianKernel k = mehler_kernel(t, params);
        for (auto [q2, q1] : {std::pair{0.0, 0.0}, std::pair{0.4, -0.3}, std::pair{-1.2, 0.8}}) {
            const cplx want = oracle::mehler(q2, q1, t, params.hbar, params.mass, params.omega);
            CHECK(std::abs(k(q2, q1) - want) < 1e-12 * std::abs(want));
        }
    }
    CHECK_THROWS_AS(mehler_kernel(M_PI, PhysParams{}), SingularityError);
}

TEST_CASE("group law holds across caustics") {
    const PhysParams params;
    for (auto [t1, t2] : {std::pair{0.3, 0.4}, std::pair{1.2, 1.1}, std::pair{2.0, 2.0}, std::pair{2.5, 2.1}}) {
        CHECK(relative_difference(compose(mehler_kernel(t2, params), mehler_kernel(t1, params)), mehler_kernel(t1 + t2, params)) <
              1e-12);
    }
}

TEST_CASE("Maslov phase") {
    const PhysParams params;
    // Just past the first caustic the prefactor has turned by -pi/2 relative to just before it.
    const cplx before = mehler_kernel(M_PI - 1e-3, params).n0;
    const cplx after = mehler_kernel(M_PI + 1e-3, params).n0;
    CHECK(std::abs(std::arg(after / before) + M_PI / 2.0) < 1e-6);
    // A full period gives the factor -1 (e^{-i w t/2} at w t = 2 pi).
    const GaussianKernel k = mehler_kernel(2.0 * M_PI + 0.4, params);
    const GaussianKernel k0 = mehler_kernel(0.4, params);
    CHECK(std::abs(k.n0 + k0.n0) < 1e-10);
}

TEST_CASE("free kernels compose") {
    const PhysParams params{1.0, 2.0, 1.0};
    CHECK(relative_difference(compose(free_kernel(0.3, params), free_kernel(0.5, params)), free_kernel(0.8, params)) < 1e-13);
    CHECK(relative_difference(slice_compose(0.8, 16, params, SliceRule::free), free_kernel(0.8, params)) < 1e-12);
    CHECK_THROWS_AS(free_kernel(0.0, params), SingularityError);
}

TEST_CASE("slice composition converges at second order") {
    const PhysParams params{1.0, 1.0, 1.0};
    const GaussianKernel exact = mehler_kernel(0.5, params);
    std::vector<double> err;
    for (int n : {64, 128, 256, 512}) err.push_back(relative_difference(slice_compose(0.5, n, params), exact));
    for (std::size_t k = 1; k < err.size(); ++k) CHECK(std::log2(err[k - 1] / err[k]) == doctest::Approx(2.0).epsilon(0.05));
    CHECK(err.back() < 1e-4);
    CHECK_THROWS_AS(slice_compose(0.5, 1, params), DomainError);
}

TEST_CASE("midpoint slices are first order in the normalization") {
    const PhysParams params;
    const GaussianKernel exact = mehler_kernel(0.5, params);
    const GaussianKernel a = slice_compose(0.5, 256, params, SliceRule::midpoint);
    const GaussianKernel b = slice_compose(0.5, 512, params, SliceRule::midpoint);
    const double exponent_order = std::log2(std::abs(a.b - exact.b) / std::abs(b.b - exact.b));
    const double norm_order = std::log2(std::abs(a.n0 - exact.n0) / std::abs(b.n0 - exact.n0));
    CHECK(exponent_order == doctest::Approx(2.0).epsilon(0.05));
    CHECK(norm_order == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("eigenfunction sum approaches the Mehler kernel") {
    const PhysParams params{1.0, 1.0, 1.0};
    const cplx t(0.7, -0.05);
    const cplx want = mehler_kernel(t, params)(0.3, -0.2);
    double prev = 1.0;
    for (int n : {20, 60, 400}) {
        const EigenKernelSum s = eigenfunction_kernel(t, n, -0.2, 0.3, params);
        const double err = std::abs(s.value - want) / std::abs(want);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 1e-6);
}

TEST_CASE("Weyl transform of the kernel is the Moyal star exponential") {
    const PhysParams params{0.6, 1.8, 1.1};
    for (double t : {0.3, 1.0, 2.5}) {
        for (double q : {-0.8, 0.0, 0.5}) {
            for (double p : {-0.4, 0.9}) {
                const double h = p * p / (2.0 * params.mass) + 0.5 * params.mass * params.omega * params.omega * q * q;
                const cplx want = oracle::moyal_star_exp(h, t, params.hbar, params.omega);
                CHECK(std::abs(kernel_to_phase(t, q, p, params) - want) < 1e-12 * std::abs(want));
            }
        }
    }
    CHECK_THROWS_AS(kernel_to_phase(M_PI, 0.0, 0.0, PhysParams{}), SingularityError);
}

TEST_CASE("special functions against explicit sums") {
    for (int n = 0; n <= 10; ++n) {
        for (double x : {-1.7, 0.0, 0.4, 2.3}) {
            CHECK(laguerre(n, x) == doctest::Approx(oracle::laguerre(n, x)).epsilon(1e-12));
            CHECK(hermite(n, x) == doctest::Approx(oracle::hermite(n, x)).epsilon(1e-12));
            CHECK(hermite_function(n, x) == doctest::Approx(oracle::psi(n, x)).epsilon(1e-12));
        }
    }
    const std::vector<double> c = laguerre_coefficients(3);
    CHECK(c.size() == 4);
    CHECK(c[3] == doctest::Approx(-1.0 / 6.0));
}

TEST_CASE("Gauss-Hermite rule integrates polynomials exactly") {
    const QuadratureRule rule = gauss_hermite(20);
    for (int k = 0; k <= 12; k += 2) {
        double s = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], k);
        // int x^k e^{-x^2} = Gamma((k+1)/2)
        CHECK(s == doctest::Approx(std::tgamma((k + 1) / 2.0)).epsilon(1e-12));
    }
}

TEST_CASE("Hermite-Laguerre identity") {
    const HermiteLaguerre a = hermite_laguerre_check(2, 0.5, 0.3);
    CHECK(a.lhs == doctest::Approx(-1.66914583460).epsilon(1e-10));
    CHECK(a.rhs == doctest::Approx(a.lhs).epsilon(1e-10));
    const HermiteLaguerre b = hermite_laguerre_check(6, 1.0, 1.0);
    CHECK(b.lhs == doctest::Approx(-55418.97684).epsilon(1e-10));
    for (int n = 0; n <= 12; ++n) {
        const HermiteLaguerre r = hermite_laguerre_check(n, 0.6, 0.8);
        CHECK(std::abs(r.lhs - r.rhs) < 1e-8 * std::max(1.0, std::abs(r.rhs)));
    }
    CHECK_THROWS_AS(hermite_laguerre_check(13, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(hermite_laguerre_check(12, 1.5, 2.0, 4), NumericalError);
}

}
