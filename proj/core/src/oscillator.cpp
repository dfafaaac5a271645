#include "dq/oscillator.hpp"

#include "dq/error.hpp"
#include "dq/special.hpp"

#include <cmath>
#include <string>

namespace dq {

PhasePoly hamiltonian(const PhysParams& params, Basis basis) {
    params.validate();
    if (basis == Basis::holomorphic) {
        return PhasePoly::monomial(Basis::holomorphic, {1, 1}, HbarPoly(params.omega));
    }
    PhasePoly h(Basis::canonical);
    h.add_term({0, 2}, HbarPoly(1.0 / (2.0 * params.mass)));
    h.add_term({2, 0}, HbarPoly(0.5 * params.mass * params.omega * params.omega));
    return h;
}

namespace {

GaussianPoly closed_projector(int n, Scheme scheme, double hbar) {
    PhasePoly pre(Basis::holomorphic);
    if (scheme == Scheme::normal) {
        double norm = 1.0;
        for (int k = 1; k <= n; ++k) norm *= k * hbar;
        pre.add_term({n, n}, HbarPoly(1.0 / norm));
        return GaussianPoly(pre, -1.0, hbar);
    }
    const std::vector<double> c = laguerre_coefficients(n);
    const double sign = (n % 2 == 0) ? 2.0 : -2.0;
    for (int m = 0; m <= n; ++m) pre.add_term({m, m}, HbarPoly(sign * c[m] * std::pow(4.0 / hbar, m)));
    return GaussianPoly(pre, -2.0, hbar);
}

GaussianPoly ladder_projector(int n, Scheme scheme, double hbar) {
    double norm = 1.0;
    for (int k = 1; k <= n; ++k) norm *= k * hbar;
    const GaussianPoly left(PhasePoly::monomial(Basis::holomorphic, {0, n}, HbarPoly(1.0 / norm)), 0.0, hbar);
    const GaussianPoly right(PhasePoly::monomial(Basis::holomorphic, {n, 0}, HbarPoly(1.0)), 0.0, hbar);
    const GaussianPoly ground = closed_projector(0, scheme, hbar);
    return gaussian_star(gaussian_star(left, ground, scheme), right, scheme);
}

}  // namespace

GaussianPoly projector(int n, Scheme scheme, const PhysParams& params, ProjectorMethod method, int max_n) {
    params.validate();
    if (n < 0 || n > max_n) {
        throw DomainError("projector index " + std::to_string(n) + " outside [0, " + std::to_string(max_n) + "]");
    }
    if (scheme == Scheme::standard) {
        throw UnsupportedError("projectors are available in the moyal and normal schemes");
    }
    return method == ProjectorMethod::closed ? closed_projector(n, scheme, params.hbar)
                                             : ladder_projector(n, scheme, params.hbar);
}

GaussianPoly genvalue_residual(const PhasePoly& h, const GaussianPoly& pi, double energy, Scheme scheme,
                               const PhysParams& params) {
    const GaussianPoly hg = GaussianPoly::polynomial(h, params);
    return gaussian_star(hg, pi, scheme) - pi * cplx(energy);
}

cplx expectation(const PhasePoly& h, const GaussianPoly& pi, Scheme scheme, const PhysParams& params) {
    return phase_space_integral(gaussian_star(GaussianPoly::polynomial(h, params), pi, scheme));
}

namespace {

// Least-squares E in hp = E pi over the prefactor coefficients. Unlike the
// phase-space moment this involves no alternating sums.
cplx coefficient_ratio(const GaussianPoly& hp, const GaussianPoly& pi) {
    cplx num = 0.0;
    double den = 0.0;
    for (const auto& [e, c] : pi.prefactor().terms()) {
        const cplx x = c.coefficient(0);
        num += std::conj(x) * hp.prefactor().coefficient(e).coefficient(0);
        den += std::norm(x);
    }
    return num / den;
}

}  // namespace

std::vector<SpectralLine> spectrum(Scheme scheme, int n_max, const PhysParams& params) {
    if (n_max < 0) throw DomainError("n_max must be non-negative");
    const PhasePoly h = hamiltonian(params, Basis::holomorphic);
    const GaussianPoly hg = GaussianPoly::polynomial(h, params);
    std::vector<SpectralLine> lines;
    for (int n = 0; n <= n_max; ++n) {
        SpectralLine line;
        line.n = n;
        line.projector = projector(n, scheme, params, ProjectorMethod::closed, std::max(n_max, kDefaultMaxProjector));
        line.energy = coefficient_ratio(gaussian_star(hg, line.projector, scheme), line.projector).real();
        line.residual = genvalue_residual(h, line.projector, line.energy, scheme, params).max_abs_coefficient() /
                        line.projector.max_abs_coefficient();
        lines.push_back(std::move(line));
    }
    return lines;
}

}  // namespace dq
