#pragma once

#include "dq/gaussian.hpp"

#include <functional>
#include <vector>

namespace dq {

/// Oscillator star exponential Exp(Ht) in closed form, as a function of the
/// value of H (a abar enters only through H = w a abar).
///   Moyal : sec(wt/2) exp[(2H / i hbar w) tan(wt/2)]
///   normal: exp(-x) exp(e^{-iwt} x), x = H / hbar w
/// Complex t (with Im t <= 0) is allowed, which is what the damped
/// Fourier-Dirichlet contour uses.
class StarExponential {
public:
    /// Throws SingularityError for Moyal at cos(wt/2) = 0.
    StarExponential(Scheme scheme, cplx t, const PhysParams& params);

    Scheme scheme() const noexcept { return scheme_; }
    cplx time() const noexcept { return t_; }

    cplx operator()(cplx h) const;

    /// The same function as prefactor * exp(mu a abar / hbar).
    GaussianPoly as_gaussian() const;

private:
    Scheme scheme_;
    cplx t_;
    PhysParams params_;
};

/// Time-evolution samples: value of Exp(Ht) at energy h and time t.
using StarExpFunction = std::function<cplx(double h, cplx t)>;

/// Closed-form sampler for use with fd_project.
StarExpFunction closed_form_sampler(Scheme scheme, const PhysParams& params);

struct RadialGrid {
    double h_max = 6.0;
    int points = 2048;
    double dt = 1e-4;
};

struct RadialSamples {
    std::vector<double> h;
    std::vector<cplx> values;
};

/// Integrates i hbar dE/dt = (H - (hbar w)^2/4 d_H - (hbar w)^2/4 H d_H^2) E
/// from E = 1 with Crank-Nicolson in time and second-order differences in H
/// (one-sided at the ends). The domain is internally doubled so the far
/// boundary stencil stays away from the returned window [0, h_max].
///
/// Throws SingularityError when w * t_final reaches pi (the Moyal blow-up)
/// and NumericalError if the solution stops being finite.
RadialSamples star_exponential_ode(double t_final, const RadialGrid& grid, const PhysParams& params);

struct FourierDirichletOptions {
    int samples = 512;       // uniform nodes over one period 4 pi / w
    double damping = 0.25;   // w * eps for the contour t - i eps
};

/// (w / 4 pi) int_0^{4 pi/w} Exp(H t) e^{iEt/hbar} dt, evaluated on the
/// shifted contour t - i eps (exact for the line sum, and it keeps the Moyal
/// secant finite). Returns one value per entry of `h_values`.
///
/// Throws DomainError when `samples` cannot resolve the frequency of E
/// (Nyquist: samples > 2 (2 n + 2) with n = ceil(E / hbar w)).
std::vector<cplx> fd_project(const StarExpFunction& exp_fn, double energy, const std::vector<double>& h_values,
                             const PhysParams& params, const FourierDirichletOptions& options = {});

/// Scans E in steps of hbar w / 20 over [0, e_max] for local maxima of the L2
/// norm (over `h_values`) of fd_project. Each maximum is snapped to the nearest
/// multiple of hbar w / 2, where the period forces the lines to lie, and kept
/// if its norm there exceeds 1e-3 of the ground-line norm.
std::vector<double> discover_lines(const StarExpFunction& exp_fn, double e_max, const std::vector<double>& h_values,
                                   const PhysParams& params, const FourierDirichletOptions& options = {});

}  // namespace dq
