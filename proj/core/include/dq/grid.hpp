#pragma once

#include "dq/gaussian.hpp"

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace dq {

/// Uniform periodic (q, p) grid: q_i = -L_q + i 2 L_q / N_q, likewise p.
struct GridSpec {
    int nq = 256;
    int np = 256;
    double lq = 8.0;
    double lp = 8.0;
    PhysParams params;

    /// N points per axis, half-extents 8 natural widths.
    static GridSpec defaults(const PhysParams& params, int n = 256);

    /// N >= 16 and a power of two, L > 0.
    void validate() const;

    double dq() const noexcept { return 2.0 * lq / nq; }
    double dp() const noexcept { return 2.0 * lp / np; }
    double q(int i) const noexcept { return -lq + i * dq(); }
    double p(int j) const noexcept { return -lp + j * dp(); }
};

/// Samples on a GridSpec; values(i, j) = f(q_i, p_j).
struct GridFunction {
    GridSpec spec;
    Eigen::MatrixXcd values;
};

GridFunction sample(const std::function<cplx(double q, double p)>& f, const GridSpec& spec);
/// Polynomials are evaluated with hbar = spec.params.hbar (either basis).
GridFunction sample(const PhasePoly& f, const GridSpec& spec);
GridFunction sample(const GaussianPoly& f, const GridSpec& spec);

/// (1/2 pi hbar) sum f dq dp. Throws NumericalError when |f| on the grid
/// edge exceeds 1e-10 of its maximum (the periodic sum would be wrong).
cplx integrate(const GridFunction& f);

/// Which variable a marginal keeps.
enum class Axis { position, momentum };

struct Marginal {
    std::vector<double> x;
    std::vector<cplx> values;
};

/// position: (1/2 pi hbar) int f dp as a function of q; momentum likewise in p.
/// Same boundary check as integrate.
Marginal marginal(const GridFunction& f, Axis keep);

/// First and second moments under the normalized distribution.
struct PhaseMoments {
    double mean_q, mean_p, var_q, var_p;
};
PhaseMoments moments(const GridFunction& f);

/// Spectral d_q^nq d_p^np (Nyquist modes zeroed).
GridFunction derivative(const GridFunction& f, int nq, int np);

/// Fraction of spectral magnitude in the outer fifth of the band along
/// either axis; the aliasing indicator used below.
double band_edge_weight(const GridFunction& f);

/// f(q + (i hbar/2) d_p, p - (i hbar/2) d_q) g with spectral derivatives.
/// Throws NumericalError when band_edge_weight(g) exceeds `alias_tol`.
GridFunction grid_star_poly(const PhasePoly& f, const GridFunction& g, double alias_tol = 1e-8);

struct SeriesResult {
    GridFunction value;
    std::vector<double> order_norms;  // max |order-k contribution| for k = 0..K
    double tail_estimate;             // the last entry of order_norms
};

/// Moyal series sum_{m+n<=K} (i hbar/2)^{m+n} (-1)^m / (m! n!)
/// (d_p^m d_q^n f)(d_q^m d_p^n g) with spectral derivatives. Spectral
/// coefficients below 1e-14 of the peak are dropped before differentiation.
/// Throws NumericalError when the order contributions grow geometrically
/// (ratio > 1.5 for 6 successive non-negligible orders; orders below 1e-10
/// of the largest so far are skipped).
SeriesResult grid_star_series(const GridFunction& f, const GridFunction& g, int order);

}  // namespace dq
