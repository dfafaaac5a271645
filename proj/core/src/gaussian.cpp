#include "dq/gaussian.hpp"

#include "dq/error.hpp"
#include "wick.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace dq {

namespace {

bool same_hbar(double x, double y) { return std::abs(x - y) <= 1e-15 * std::max(std::abs(x), std::abs(y)); }

PhasePoly clean(const PhasePoly& f) { return f.chopped(1e-15 * f.max_abs_coefficient()); }

}  // namespace

GaussianPoly::GaussianPoly(const PhasePoly& prefactor, cplx mu, const PhysParams& params)
    : prefactor_(to_basis(prefactor, Basis::holomorphic, params).bind_hbar(params.hbar)),
      mu_(mu),
      hbar_(params.hbar) {
    params.validate();
}

GaussianPoly::GaussianPoly(const PhasePoly& prefactor, cplx mu, double hbar)
    : prefactor_(prefactor.bind_hbar(hbar)), mu_(mu), hbar_(hbar) {
    if (prefactor.basis() != Basis::holomorphic) {
        throw BasisMismatch("Gaussian prefactor must be holomorphic (pass PhysParams to convert)");
    }
    if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
}

cplx GaussianPoly::operator()(cplx a, cplx abar) const {
    return evaluate(prefactor_, {a, abar}, hbar_) * std::exp(mu_ * a * abar / hbar_);
}

cplx GaussianPoly::at_qp(double q, double p, const PhysParams& params) const {
    const double mw = params.m_omega();
    const cplx a = std::sqrt(mw / 2.0) * cplx(q, p / mw);
    return (*this)(a, std::conj(a));
}

void GaussianPoly::require_compatible(const GaussianPoly& other) const {
    if (!same_hbar(hbar_, other.hbar_) || std::abs(mu_ - other.mu_) > 1e-12 * std::max(1.0, std::abs(mu_))) {
        std::ostringstream msg;
        msg << "cannot add Gaussians with different exponents (mu " << mu_ << " vs " << other.mu_ << ")";
        throw DomainError(msg.str());
    }
}

GaussianPoly& GaussianPoly::operator+=(const GaussianPoly& other) {
    if (other.prefactor_.is_zero()) return *this;
    if (prefactor_.is_zero()) return *this = other;
    require_compatible(other);
    prefactor_ += other.prefactor_;
    return *this;
}

GaussianPoly& GaussianPoly::operator-=(const GaussianPoly& other) {
    if (other.prefactor_.is_zero()) return *this;
    if (prefactor_.is_zero()) {
        *this = other;
        prefactor_ = -prefactor_;
        return *this;
    }
    require_compatible(other);
    prefactor_ -= other.prefactor_;
    return *this;
}

GaussianPoly& GaussianPoly::operator*=(cplx s) {
    prefactor_ *= s;
    return *this;
}

double max_coefficient_difference(const GaussianPoly& f, const GaussianPoly& g) {
    if (f.prefactor().is_zero()) return g.max_abs_coefficient();
    if (g.prefactor().is_zero()) return f.max_abs_coefficient();
    if (std::abs(f.mu() - g.mu()) > 1e-13 * std::max(1.0, std::abs(f.mu())) || !same_hbar(f.hbar(), g.hbar())) {
        return std::numeric_limits<double>::infinity();
    }
    return max_coefficient_difference(f.prefactor(), g.prefactor());
}

bool approx_equal(const GaussianPoly& f, const GaussianPoly& g, double tol) {
    const double scale = std::max({1.0, f.max_abs_coefficient(), g.max_abs_coefficient()});
    return max_coefficient_difference(f, g) <= tol * scale;
}

GaussianPoly gaussian_star(const GaussianPoly& f, const GaussianPoly& g, Scheme scheme) {
    if (scheme == Scheme::standard) {
        throw UnsupportedError("the Gaussian calculus is holomorphic; use the moyal or normal scheme");
    }
    if (!same_hbar(f.hbar(), g.hbar())) throw DomainError("operands were built with different hbar");
    const double hbar = f.hbar();
    if (f.prefactor().is_zero() || g.prefactor().is_zero()) {
        return GaussianPoly(PhasePoly(Basis::holomorphic), 0.0, hbar);
    }
    const StarKernel k = star_kernel(scheme, Basis::holomorphic);

    // Slots: 0 = a1, 1 = abar1 (left operand), 2 = a2, 3 = abar2 (right operand).
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(4, 4);
    a(0, 1) = a(1, 0) = f.mu();
    a(2, 3) = a(3, 2) = g.mu();
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(4, 4);
    b(0, 3) = b(3, 0) = k.c_xy;
    b(1, 2) = b(2, 1) = k.c_yx;

    const cplx det = 1.0 - k.c_xy * k.c_yx * f.mu() * g.mu();
    if (std::abs(det) < 1e-12 * std::max(1.0, std::abs(f.mu() * g.mu()))) {
        std::ostringstream msg;
        msg << "Gaussian star product is singular for mu_f = " << f.mu() << ", mu_g = " << g.mu();
        throw SingularityError(msg.str());
    }

    const detail::MultiPoly p = detail::multiply(detail::embed(f.prefactor(), 0, 1), detail::embed(g.prefactor(), 2, 3));
    const detail::HeatResult h = detail::apply_heat(p, a, b, {0, 2}, {1, 3}, hbar);

    // Identify a1 = a2 = a, abar1 = abar2 = abar.
    const Eigen::MatrixXcd& m = h.exponent;
    cplx mu = 0.0;
    cplx aa = 0.0;
    cplx bb = 0.0;
    for (int i : {0, 2}) {
        for (int j : {1, 3}) mu += 0.5 * (m(i, j) + m(j, i));
        for (int j : {0, 2}) aa += 0.5 * m(i, j);
    }
    for (int i : {1, 3}) {
        for (int j : {1, 3}) bb += 0.5 * m(i, j);
    }
    if (std::abs(aa) + std::abs(bb) > 1e-10 * std::max(1.0, std::abs(mu))) {
        throw NumericalError("Gaussian star produced a non-radial exponent");
    }
    std::vector<std::array<cplx, 2>> forms(4);
    for (int i = 0; i < 4; ++i) forms[i] = {h.r(i, 0) + h.r(i, 2), h.r(i, 1) + h.r(i, 3)};
    PhasePoly pre = detail::substitute_linear(h.prefactor, forms) * h.scale;
    return GaussianPoly(clean(pre), mu, hbar);
}

GaussianPoly transition_apply(const TransitionOp& op, const GaussianPoly& f) {
    if (op.kind != TransitionOp::Kind::normal_to_moyal) {
        throw UnsupportedError("only the normal-to-Moyal transition acts on Gaussians");
    }
    const double s = op.inverse ? 0.5 : -0.5;
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2, 2);
    a(0, 1) = a(1, 0) = f.mu();
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(2, 2);
    b(0, 1) = b(1, 0) = s;
    const detail::HeatResult h = detail::apply_heat(detail::embed(f.prefactor(), 0, 1), a, b, {0}, {1}, f.hbar());
    const cplx mu = h.exponent(0, 1);
    std::vector<std::array<cplx, 2>> forms = {{h.r(0, 0), h.r(0, 1)}, {h.r(1, 0), h.r(1, 1)}};
    PhasePoly pre = detail::substitute_linear(h.prefactor, forms) * h.scale;
    return GaussianPoly(clean(pre), mu, f.hbar());
}

GaussianPoly hermitean_conj(const GaussianPoly& f) {
    return GaussianPoly(hermitean_conj(f.prefactor()), std::conj(f.mu()), f.hbar());
}

cplx phase_space_integral(const GaussianPoly& f) {
    if (f.prefactor().is_zero()) return 0.0;
    if (!(f.mu().real() < 0.0)) throw DomainError("phase-space integral needs Re(mu) < 0");
    const double hbar = f.hbar();
    const cplx neg_mu = -f.mu();
    cplx total = 0.0;
    for (const auto& [e, c] : f.prefactor().terms()) {
        if (e.x != e.y) continue;
        double kfact = 1.0;
        for (int j = 2; j <= e.x; ++j) kfact *= j;
        total += c.coefficient(0) * kfact * std::pow(hbar, e.x) / int_pow(neg_mu, e.x + 1);
    }
    return total;
}

}  // namespace dq
