#include "dq/star_exponential.hpp"

#include "dq/error.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <cmath>
#include <sstream>

namespace dq {

namespace {

constexpr cplx kI{0.0, 1.0};

}  // namespace

StarExponential::StarExponential(Scheme scheme, cplx t, const PhysParams& params)
    : scheme_(scheme), t_(t), params_(params) {
    params.validate();
    if (scheme == Scheme::standard) throw UnsupportedError("star exponential is available for moyal and normal");
    if (scheme == Scheme::moyal) {
        const cplx c = std::cos(params.omega * t / 2.0);
        if (std::abs(c) < 1e-12) {
            std::ostringstream msg;
            msg << "Moyal star exponential is singular at omega*t = " << params.omega * t
                << " (cos(omega t / 2) = 0)";
            throw SingularityError(msg.str());
        }
    }
}

cplx StarExponential::operator()(cplx h) const {
    const double hw = params_.hbar * params_.omega;
    const cplx half = params_.omega * t_ / 2.0;
    if (scheme_ == Scheme::moyal) {
        return std::exp(2.0 * h / (kI * hw) * std::tan(half)) / std::cos(half);
    }
    const cplx x = h / hw;
    return std::exp((std::exp(-kI * params_.omega * t_) - 1.0) * x);
}

GaussianPoly StarExponential::as_gaussian() const {
    const cplx half = params_.omega * t_ / 2.0;
    if (scheme_ == Scheme::moyal) {
        return GaussianPoly(PhasePoly::constant(1.0 / std::cos(half), Basis::holomorphic), -2.0 * kI * std::tan(half),
                            params_.hbar);
    }
    return GaussianPoly(PhasePoly::constant(1.0, Basis::holomorphic), std::exp(-kI * params_.omega * t_) - 1.0,
                        params_.hbar);
}

StarExpFunction closed_form_sampler(Scheme scheme, const PhysParams& params) {
    return [scheme, params](double h, cplx t) { return StarExponential(scheme, t, params)(h); };
}

RadialSamples star_exponential_ode(double t_final, const RadialGrid& grid, const PhysParams& params) {
    params.validate();
    if (grid.points < 8 || !(grid.h_max > 0.0) || !(grid.dt > 0.0)) {
        throw DomainError("radial grid needs >= 8 points, h_max > 0 and dt > 0");
    }
    if (!(t_final >= 0.0)) throw DomainError("t_final must be non-negative");
    if (params.omega * t_final >= M_PI) {
        std::ostringstream msg;
        msg << "star exponential blows up at omega*t = pi; requested omega*t = " << params.omega * t_final;
        throw SingularityError(msg.str());
    }

    const double step = grid.h_max / (grid.points - 1);
    const int n = 2 * grid.points - 1;  // [0, 2 h_max]
    const double hw = params.hbar * params.omega;
    const double c = hw * hw / 4.0;

    // dE/dt = L E,  L = -(i/hbar) (H - c d_H - c H d_H^2)
    std::vector<Eigen::Triplet<cplx>> trip;
    const cplx pre = -kI / params.hbar;
    auto put = [&](int row, int col, double v) { trip.emplace_back(row, col, pre * v); };
    for (int j = 0; j < n; ++j) {
        const double h = j * step;
        put(j, j, h);
        if (j == 0) {
            // H d_H^2 vanishes at H = 0.
            put(j, 0, -c * (-3.0) / (2.0 * step));
            put(j, 1, -c * 4.0 / (2.0 * step));
            put(j, 2, -c * (-1.0) / (2.0 * step));
        } else if (j == n - 1) {
            put(j, j, -c * 3.0 / (2.0 * step));
            put(j, j - 1, -c * (-4.0) / (2.0 * step));
            put(j, j - 2, -c * 1.0 / (2.0 * step));
            const double k2 = -c * h / (step * step);
            put(j, j, k2 * 2.0);
            put(j, j - 1, k2 * -5.0);
            put(j, j - 2, k2 * 4.0);
            put(j, j - 3, k2 * -1.0);
        } else {
            put(j, j + 1, -c / (2.0 * step));
            put(j, j - 1, c / (2.0 * step));
            const double k2 = -c * h / (step * step);
            put(j, j + 1, k2);
            put(j, j, -2.0 * k2);
            put(j, j - 1, k2);
        }
    }
    Eigen::SparseMatrix<cplx> l(n, n);
    l.setFromTriplets(trip.begin(), trip.end());

    const int steps = std::max(1, static_cast<int>(std::ceil(t_final / grid.dt - 1e-9)));
    const double dt = t_final / steps;
    Eigen::SparseMatrix<cplx> id(n, n);
    id.setIdentity();
    const Eigen::SparseMatrix<cplx> lhs = id - (0.5 * dt) * l;
    const Eigen::SparseMatrix<cplx> rhs = id + (0.5 * dt) * l;
    Eigen::SparseLU<Eigen::SparseMatrix<cplx>> lu;
    lu.compute(lhs);
    if (lu.info() != Eigen::Success) throw NumericalError("Crank-Nicolson factorization failed");

    Eigen::VectorXcd e = Eigen::VectorXcd::Ones(n);
    if (t_final > 0.0) {
        for (int s = 0; s < steps; ++s) {
            e = lu.solve(rhs * e);
            if (!e.allFinite() || e.cwiseAbs().maxCoeff() > 1e12) {
                std::ostringstream msg;
                msg << "star exponential integration blew up at t = " << (s + 1) * dt;
                throw NumericalError(msg.str());
            }
        }
    }

    RadialSamples out;
    for (int j = 0; j < grid.points; ++j) {
        out.h.push_back(j * step);
        out.values.push_back(e(j));
    }
    return out;
}

std::vector<cplx> fd_project(const StarExpFunction& exp_fn, double energy, const std::vector<double>& h_values,
                             const PhysParams& params, const FourierDirichletOptions& options) {
    params.validate();
    const double hw = params.hbar * params.omega;
    const int n_line = std::max(0, static_cast<int>(std::ceil(energy / hw)));
    if (options.samples <= 2 * (2 * n_line + 2)) {
        std::ostringstream msg;
        msg << options.samples << " samples per period cannot resolve E = " << energy << " (need more than "
            << 2 * (2 * n_line + 2) << ")";
        throw DomainError(msg.str());
    }
    if (!(options.damping > 0.0)) throw DomainError("contour damping must be positive");

    const double period = 4.0 * M_PI / params.omega;
    const double eps = options.damping / params.omega;
    const int m = options.samples;
    std::vector<cplx> out(h_values.size(), 0.0);
    for (int j = 0; j < m; ++j) {
        const cplx tau(period * j / m, -eps);
        const cplx phase = std::exp(kI * energy * tau / params.hbar);
        for (std::size_t i = 0; i < h_values.size(); ++i) out[i] += exp_fn(h_values[i], tau) * phase;
    }
    for (cplx& v : out) v /= static_cast<double>(m);
    return out;
}

namespace {

double l2_norm(const std::vector<cplx>& v, const std::vector<double>& h) {
    double acc = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        acc += 0.5 * (std::norm(v[i]) + std::norm(v[i - 1])) * (h[i] - h[i - 1]);
    }
    return std::sqrt(acc);
}

}  // namespace

std::vector<double> discover_lines(const StarExpFunction& exp_fn, double e_max, const std::vector<double>& h_values,
                                   const PhysParams& params, const FourierDirichletOptions& options) {
    const double step = params.hbar * params.omega / 20.0;
    const int count = static_cast<int>(std::floor(e_max / step + 1e-9)) + 1;
    std::vector<double> energies;
    std::vector<double> norms;
    for (int k = 0; k < count; ++k) {
        energies.push_back(k * step);
        norms.push_back(l2_norm(fd_project(exp_fn, k * step, h_values, params, options), h_values));
    }
    // Exp(Ht) has period 4 pi / w, so its spectrum sits on multiples of
    // hbar w / 2. Scan maxima are pulled off-line by the contour damping and
    // neighbouring leakage; snap each to the nearest harmonic and re-measure.
    const double harmonic = params.hbar * params.omega / 2.0;
    std::vector<double> lines;
    double reference = -1.0;
    for (int k = 0; k < count; ++k) {
        const bool left = k == 0 || norms[k] > norms[k - 1];
        const bool right = k == count - 1 || norms[k] >= norms[k + 1];
        if (!left || !right) continue;
        const double e = std::round(energies[k] / harmonic) * harmonic;
        if (e > e_max + 1e-9 * harmonic) continue;
        if (!lines.empty() && std::abs(lines.back() - e) < 0.5 * harmonic) continue;
        const double norm = l2_norm(fd_project(exp_fn, e, h_values, params, options), h_values);
        if (reference < 0.0) reference = norm;
        if (norm > 1e-3 * reference) lines.push_back(e);
    }
    return lines;
}

}  // namespace dq
