#include "dq/kernel.hpp"

#include "dq/error.hpp"
#include "dq/special.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dq {

namespace {

constexpr cplx kI{0.0, 1.0};

}  // namespace

GaussianKernel compose(const GaussianKernel& second, const GaussianKernel& first) {
    const cplx s = first.a + second.c;
    if (!(s.real() < 0.0) && !(s.real() == 0.0 && s.imag() != 0.0)) {
        std::ostringstream msg;
        msg << "intermediate Gaussian is not integrable (quadratic coefficient " << s << ")";
        throw NumericalError(msg.str());
    }
    GaussianKernel out;
    out.a = second.a - second.b * second.b / (4.0 * s);
    out.c = first.c - first.b * first.b / (4.0 * s);
    out.b = -first.b * second.b / (2.0 * s);
    out.n0 = first.n0 * second.n0 * std::sqrt(M_PI / (-s));
    return out;
}

double relative_difference(const GaussianKernel& x, const GaussianKernel& reference) {
    auto rel = [](cplx v, cplx r) { return std::abs(v - r) / std::max(std::abs(r), 1e-300); };
    return std::max({rel(x.a, reference.a), rel(x.b, reference.b), rel(x.c, reference.c), rel(x.n0, reference.n0)});
}

GaussianKernel mehler_kernel(cplx t, const PhysParams& params) {
    params.validate();
    const cplx wt = params.omega * t;
    const cplx sn = std::sin(wt);
    if (std::abs(sn) < 1e-12) {
        std::ostringstream msg;
        msg << "Mehler kernel has a caustic at omega*t = " << wt;
        throw SingularityError(msg.str());
    }
    const double mw = params.m_omega();
    const double hbar = params.hbar;
    GaussianKernel k;
    k.a = k.c = kI * mw * std::cos(wt) / (2.0 * hbar * sn);
    k.b = -kI * mw / (hbar * sn);

    // Continuous branch of arg(sin wt): k pi plus the principal part of (-1)^k sin.
    const int branch = static_cast<int>(std::floor(wt.real() / M_PI));
    const double arg = branch * M_PI + std::arg((branch % 2 == 0 ? 1.0 : -1.0) * sn);
    const double phase = -(M_PI / 2.0 + arg) / 2.0;
    k.n0 = std::sqrt(mw / (2.0 * M_PI * hbar)) / std::sqrt(std::abs(sn)) * std::exp(kI * phase);
    return k;
}

GaussianKernel free_kernel(double t, const PhysParams& params) {
    params.validate();
    if (t == 0.0) throw SingularityError("free kernel is a delta function at t = 0");
    const double m = params.mass;
    const double hbar = params.hbar;
    GaussianKernel k;
    k.a = k.c = kI * m / (2.0 * hbar * t);
    k.b = -kI * m / (hbar * t);
    k.n0 = std::sqrt(m / (2.0 * M_PI * kI * hbar * t));
    return k;
}

GaussianKernel short_time_kernel(double dt, const PhysParams& params, SliceRule rule) {
    GaussianKernel k = free_kernel(dt, params);
    const cplx v = -kI * dt * params.mass * params.omega * params.omega / params.hbar;
    switch (rule) {
        case SliceRule::trapezoid:
            // [V(q) + V(q')] / 2 = m w^2 (q^2 + q'^2) / 4
            k.a += v / 4.0;
            k.c += v / 4.0;
            break;
        case SliceRule::midpoint:
            // V((q + q')/2) = m w^2 (q^2 + 2 q q' + q'^2) / 8
            k.a += v / 8.0;
            k.c += v / 8.0;
            k.b += v / 4.0;
            break;
        case SliceRule::free:
            break;
    }
    return k;
}

GaussianKernel slice_compose(double t, int slices, const PhysParams& params, SliceRule rule) {
    if (slices < 2) throw DomainError("slice composition needs at least 2 slices");
    const GaussianKernel step = short_time_kernel(t / slices, params, rule);
    GaussianKernel total = step;
    for (int n = 1; n < slices; ++n) total = compose(step, total);
    return total;
}

EigenKernelSum eigenfunction_kernel(cplx t, int n_max, double q1, double q2, const PhysParams& params) {
    params.validate();
    if (n_max < 0) throw DomainError("n_max must be non-negative");
    const double ell = params.length_scale();
    const std::vector<double> h1 = hermite_functions(n_max, q1 / ell);
    const std::vector<double> h2 = hermite_functions(n_max, q2 / ell);
    EigenKernelSum out{0.0, 0.0};
    for (int n = 0; n <= n_max; ++n) {
        const cplx term = h1[n] * h2[n] / ell * std::exp(-kI * (n + 0.5) * params.omega * t);
        out.value += term;
        out.last_term = std::abs(term);
    }
    return out;
}

cplx kernel_to_phase(cplx t, double q, double p, const PhysParams& params) {
    const cplx half = params.omega * t / 2.0;
    if (std::abs(std::cos(half)) < 1e-12) {
        throw SingularityError("kernel transform is singular at cos(omega t / 2) = 0");
    }
    const GaussianKernel k = mehler_kernel(t, params);
    // Exponent in xi: (A+B+C) q^2 + (A-C) q xi + (A-B+C) xi^2/4 - i xi p / hbar.
    const cplx s = (k.a - k.b + k.c) / 4.0;
    const cplx l = (k.a - k.c) * q - kI * p / params.hbar;
    return k.n0 * std::sqrt(M_PI / (-s)) * std::exp((k.a + k.b + k.c) * q * q - l * l / (4.0 * s));
}

namespace {

// Returns the quadrature value and the integral of the absolute integrand,
// the scale against which convergence is judged.
std::pair<double, double> hermite_product_integral(int n, double a, double b, int nodes) {
    const QuadratureRule rule = gauss_hermite(nodes);
    double sum = 0.0;
    double mass = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double x = rule.nodes[k];
        const double v = rule.weights[k] * hermite(n, x - a) * hermite(n, x + a);
        sum += v * std::cos(2.0 * b * x);
        mass += std::abs(v);
    }
    return {sum, mass};
}

}  // namespace

HermiteLaguerre hermite_laguerre_check(int n, double a, double b, int nodes) {
    if (n < 0 || n > 12) throw DomainError("hermite_laguerre_check supports 0 <= n <= 12");
    if (nodes < 1) throw DomainError("quadrature needs at least one node");
    HermiteLaguerre out;
    const auto [lhs, mass] = hermite_product_integral(n, a, b, nodes);
    const double refined = hermite_product_integral(n, a, b, nodes + 20).first;
    out.lhs = lhs;
    double nfact = 1.0;
    for (int k = 2; k <= n; ++k) nfact *= k;
    out.rhs = std::pow(2.0, n) * std::sqrt(M_PI) * nfact * std::exp(-b * b) * laguerre(n, 2.0 * (a * a + b * b));
    if (std::abs(out.lhs - refined) > 1e-10 * std::max(mass, 1e-300)) {
        std::ostringstream msg;
        msg << "Gauss-Hermite rule with " << nodes << " nodes is not converged (n = " << n << ", a = " << a
            << ", b = " << b << ")";
        throw NumericalError(msg.str());
    }
    return out;
}

}  // namespace dq
