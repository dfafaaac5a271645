#pragma once

#include "dq/phase_poly.hpp"
#include "dq/star.hpp"

namespace dq {

/// P(a, abar) * exp(mu * a * abar / hbar) with hbar bound to a number.
///
/// The prefactor lives in the holomorphic basis and carries no formal hbar
/// (inputs are bound on construction). mu = 0 is an ordinary polynomial;
/// Re(mu) < 0 is needed for phase-space integrals to exist.
class GaussianPoly {
public:
    GaussianPoly() : prefactor_(Basis::holomorphic) {}

    /// Canonical prefactors are converted with `params`; hbar comes from params.
    GaussianPoly(const PhasePoly& prefactor, cplx mu, const PhysParams& params);

    /// Holomorphic prefactor, explicit hbar.
    GaussianPoly(const PhasePoly& prefactor, cplx mu, double hbar);

    static GaussianPoly polynomial(const PhasePoly& f, const PhysParams& params) { return {f, 0.0, params}; }

    const PhasePoly& prefactor() const noexcept { return prefactor_; }
    cplx mu() const noexcept { return mu_; }
    double hbar() const noexcept { return hbar_; }

    /// Value at (a, abar) treated as independent arguments.
    cplx operator()(cplx a, cplx abar) const;
    /// Value at a canonical point: a = sqrt(m w / 2)(q + i p / m w).
    cplx at_qp(double q, double p, const PhysParams& params) const;

    GaussianPoly& operator+=(const GaussianPoly& other);
    GaussianPoly& operator-=(const GaussianPoly& other);
    GaussianPoly& operator*=(cplx s);

    friend GaussianPoly operator+(GaussianPoly l, const GaussianPoly& r) { return l += r; }
    friend GaussianPoly operator-(GaussianPoly l, const GaussianPoly& r) { return l -= r; }
    friend GaussianPoly operator*(GaussianPoly l, cplx s) { return l *= s; }
    friend GaussianPoly operator*(cplx s, GaussianPoly r) { return r *= s; }

    /// Largest |coefficient| of the prefactor.
    double max_abs_coefficient() const { return prefactor_.max_abs_coefficient(); }

private:
    void require_compatible(const GaussianPoly& other) const;

    PhasePoly prefactor_;
    cplx mu_{};
    double hbar_ = 1.0;
};

/// Largest coefficient difference; +inf when the exponents or hbar differ
/// (unless both prefactors vanish).
double max_coefficient_difference(const GaussianPoly& f, const GaussianPoly& g);
bool approx_equal(const GaussianPoly& f, const GaussianPoly& g, double tol = 1e-12);

/// Closed-form star product of two Gaussians with polynomial prefactors, by
/// Gaussian integration of the Fourier form (equivalently, Wick pairing of
/// the prefactors under the completed square). Moyal and normal schemes.
///
/// Throws SingularityError when the combined exponent is degenerate
/// (Moyal: mu_f * mu_g = -4), UnsupportedError for the standard scheme.
GaussianPoly gaussian_star(const GaussianPoly& f, const GaussianPoly& g, Scheme scheme);

/// Normal-to-Moyal transition operator (either direction) on a Gaussian.
/// The standard-to-Moyal operator is not available here (UnsupportedError).
GaussianPoly transition_apply(const TransitionOp& op, const GaussianPoly& f);

GaussianPoly hermitean_conj(const GaussianPoly& f);

/// (1/2 pi hbar) * integral over dq dp, from the exact moments
/// (1/2 pi hbar) int (a abar)^k exp(mu a abar / hbar) = k! hbar^k / (-mu)^(k+1).
/// Throws DomainError unless Re(mu) < 0 (or the prefactor is zero).
cplx phase_space_integral(const GaussianPoly& f);

}  // namespace dq
