#pragma once

#include "dq/gaussian.hpp"

#include <vector>

namespace dq {

/// H = p^2/2m + m w^2 q^2/2 in the canonical basis, w * a * abar holomorphically.
PhasePoly hamiltonian(const PhysParams& params, Basis basis = Basis::canonical);

/// Default upper bound on projector indices.
inline constexpr int kDefaultMaxProjector = 32;

enum class ProjectorMethod {
    closed,  // normal: e^{-a abar/hbar} abar^n a^n / hbar^n n!; Moyal: Laguerre form
    ladder,  // abar^n * pi_0 * a^n / (hbar^n n!) with the scheme's own star
};

/// Oscillator projector pi_n in the Moyal or normal scheme.
///   Moyal : 2 (-1)^n e^{-2 a abar/hbar} L_n(4 a abar/hbar)
///   normal: e^{-a abar/hbar} (a abar)^n / (hbar^n n!)
/// Throws DomainError unless 0 <= n <= max_n.
GaussianPoly projector(int n, Scheme scheme, const PhysParams& params,
                       ProjectorMethod method = ProjectorMethod::closed, int max_n = kDefaultMaxProjector);

/// H * pi - E pi with H given as a polynomial (any basis).
GaussianPoly genvalue_residual(const PhasePoly& h, const GaussianPoly& pi, double energy, Scheme scheme,
                               const PhysParams& params);

/// (1/2 pi hbar) int (H * pi) dq dp.
cplx expectation(const PhasePoly& h, const GaussianPoly& pi, Scheme scheme, const PhysParams& params);

struct SpectralLine {
    int n = 0;
    double energy = 0.0;
    GaussianPoly projector;
    double residual = 0.0;  // largest coefficient of H * pi_n - E_n pi_n over that of pi_n
};

/// Lines 0..n_max. Each energy is the least-squares ratio of the prefactor
/// coefficients of H * pi_n to those of pi_n, and the
/// residual of the genvalue equation at that energy is recorded.
std::vector<SpectralLine> spectrum(Scheme scheme, int n_max, const PhysParams& params);

}  // namespace dq
