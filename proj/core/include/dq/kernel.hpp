#pragma once

#include "dq/params.hpp"
#include "dq/hbar_poly.hpp"

namespace dq {

/// K(q2, q1) = n0 exp(A q2^2 + B q1 q2 + C q1^2).
struct GaussianKernel {
    cplx a, b, c, n0;

    cplx operator()(double q2, double q1) const { return n0 * std::exp(a * q2 * q2 + b * q1 * q2 + c * q1 * q1); }
};

/// (second o first)(q3, q1) = int second(q3, q') first(q', q1) dq'.
/// Throws NumericalError when the q' integral is not Gaussian-convergent.
GaussianKernel compose(const GaussianKernel& second, const GaussianKernel& first);

/// Largest relative difference over (A, B, C, n0).
double relative_difference(const GaussianKernel& x, const GaussianKernel& reference);

/// Oscillator propagator <q2| e^{-iHt/hbar} |q1>:
///   sqrt(m w / (2 pi i hbar sin wt)) exp{ i m w [(q1^2 + q2^2) cos wt - 2 q1 q2] / (2 hbar sin wt) }.
/// Complex t with Im t <= 0 is accepted. The square root follows the
/// Maslov phase across caustics (arg sin wt grows by pi at each wt = k pi).
/// Throws SingularityError at sin(wt) = 0.
GaussianKernel mehler_kernel(cplx t, const PhysParams& params);

/// Free-particle propagator sqrt(m / 2 pi i hbar t) exp[i m (q2 - q1)^2 / 2 hbar t].
GaussianKernel free_kernel(double t, const PhysParams& params);

/// How the potential enters one time slice.
enum class SliceRule {
    trapezoid,  // -i dt [V(q) + V(q')] / 2 hbar, the symmetric Trotter splitting
    midpoint,   // -i dt V((q + q')/2) / hbar
    free,       // V = 0
};

/// Short-time kernel sqrt(m / 2 pi i hbar dt) exp[i m (q' - q)^2 / 2 hbar dt]
/// times the potential factor of `rule`, with V = m w^2 q^2 / 2.
///
/// Both rules match the exact exponent to O(dt^2) globally. The midpoint
/// rule leaves an O(dt) error in the normalization n0 after composition, so
/// only the trapezoid rule converges at second order in every coefficient.
GaussianKernel short_time_kernel(double dt, const PhysParams& params, SliceRule rule = SliceRule::trapezoid);

/// Composition of `slices` short-time kernels of step t / slices.
GaussianKernel slice_compose(double t, int slices, const PhysParams& params, SliceRule rule = SliceRule::trapezoid);

/// Partial eigenfunction sum sum_{n <= n_max} psi_n(q2) psi_n(q1) e^{-i(n + 1/2) w t}.
struct EigenKernelSum {
    cplx value;
    double last_term;  // |n_max term|, the convergence indicator
};
EigenKernelSum eigenfunction_kernel(cplx t, int n_max, double q1, double q2, const PhysParams& params);

/// int <q + xi/2| e^{-iHt/hbar} |q - xi/2> e^{-i xi p/hbar} d xi for the
/// Mehler kernel, with the xi integral done in closed form. Equals the Moyal
/// star exponential at H(q, p).
cplx kernel_to_phase(cplx t, double q, double p, const PhysParams& params);

/// int H_n(x - a) H_n(x + a) e^{-x^2} e^{-2ibx} dx by Gauss-Hermite
/// quadrature (lhs) against 2^n sqrt(pi) n! e^{-b^2} L_n(2(a^2 + b^2)) (rhs).
struct HermiteLaguerre {
    double lhs;
    double rhs;
};
/// Throws NumericalError when `nodes` and `nodes + 20` disagree beyond 1e-10 relative.
HermiteLaguerre hermite_laguerre_check(int n, double a, double b, int nodes = 100);

}  // namespace dq
