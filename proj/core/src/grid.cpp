#include "dq/grid.hpp"

#include "dq/error.hpp"
#include "spectral.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace dq {

GridSpec GridSpec::defaults(const PhysParams& params, int n) {
    params.validate();
    GridSpec spec;
    spec.nq = spec.np = n;
    spec.lq = 8.0 * params.length_scale();
    spec.lp = 8.0 * params.momentum_scale();
    spec.params = params;
    return spec;
}

void GridSpec::validate() const {
    params.validate();
    auto pow2 = [](int n) { return n >= 16 && (n & (n - 1)) == 0; };
    if (!pow2(nq) || !pow2(np)) throw DomainError("grid sizes must be powers of two >= 16");
    if (!(lq > 0.0) || !(lp > 0.0)) throw DomainError("grid half-extents must be positive");
}

GridFunction sample(const std::function<cplx(double, double)>& f, const GridSpec& spec) {
    spec.validate();
    GridFunction out{spec, Eigen::MatrixXcd(spec.nq, spec.np)};
    for (int j = 0; j < spec.np; ++j) {
        for (int i = 0; i < spec.nq; ++i) out.values(i, j) = f(spec.q(i), spec.p(j));
    }
    return out;
}

GridFunction sample(const PhasePoly& f, const GridSpec& spec) {
    const PhasePoly g = to_basis(f, Basis::canonical, spec.params);
    const double hbar = spec.params.hbar;
    return sample([&](double q, double p) { return evaluate(g, {q, p}, hbar); }, spec);
}

GridFunction sample(const GaussianPoly& f, const GridSpec& spec) {
    return sample([&](double q, double p) { return f.at_qp(q, p, spec.params); }, spec);
}

namespace {

void check_decay(const GridFunction& f) {
    const Eigen::MatrixXcd& v = f.values;
    const double peak = v.cwiseAbs().maxCoeff();
    const double edge = std::max({v.row(0).cwiseAbs().maxCoeff(), v.row(v.rows() - 1).cwiseAbs().maxCoeff(),
                                  v.col(0).cwiseAbs().maxCoeff(), v.col(v.cols() - 1).cwiseAbs().maxCoeff()});
    if (edge > 1e-10 * peak) {
        std::ostringstream msg;
        msg << "function does not decay at the grid boundary (edge/peak = " << edge / peak
            << "); enlarge the grid";
        throw NumericalError(msg.str());
    }
}

double weight(const GridSpec& s) { return s.dq() * s.dp() / (2.0 * M_PI * s.params.hbar); }

}  // namespace

cplx integrate(const GridFunction& f) {
    check_decay(f);
    return f.values.sum() * weight(f.spec);
}

Marginal marginal(const GridFunction& f, Axis keep) {
    check_decay(f);
    Marginal out;
    const double w = 1.0 / (2.0 * M_PI * f.spec.params.hbar);
    if (keep == Axis::position) {
        for (int i = 0; i < f.spec.nq; ++i) {
            out.x.push_back(f.spec.q(i));
            out.values.push_back(f.values.row(i).sum() * f.spec.dp() * w);
        }
    } else {
        for (int j = 0; j < f.spec.np; ++j) {
            out.x.push_back(f.spec.p(j));
            out.values.push_back(f.values.col(j).sum() * f.spec.dq() * w);
        }
    }
    return out;
}

PhaseMoments moments(const GridFunction& f) {
    const cplx norm = integrate(f);
    cplx sq = 0.0, sp = 0.0, sqq = 0.0, spp = 0.0;
    const GridSpec& s = f.spec;
    for (int j = 0; j < s.np; ++j) {
        for (int i = 0; i < s.nq; ++i) {
            const cplx v = f.values(i, j);
            sq += s.q(i) * v;
            sp += s.p(j) * v;
            sqq += s.q(i) * s.q(i) * v;
            spp += s.p(j) * s.p(j) * v;
        }
    }
    const double w = weight(s);
    PhaseMoments m;
    m.mean_q = (sq * w / norm).real();
    m.mean_p = (sp * w / norm).real();
    m.var_q = (sqq * w / norm).real() - m.mean_q * m.mean_q;
    m.var_p = (spp * w / norm).real() - m.mean_p * m.mean_p;
    return m;
}

GridFunction derivative(const GridFunction& f, int nq, int np) {
    f.spec.validate();
    if (nq < 0 || np < 0) throw DomainError("negative derivative order");
    const detail::Spectral2D fft(f.spec.nq, f.spec.np, f.spec.lq, f.spec.lp);
    return {f.spec, fft.inverse(fft.forward(f.values).cwiseProduct(fft.derivative_symbol(nq, np)))};
}

double band_edge_weight(const GridFunction& f) {
    const detail::Spectral2D fft(f.spec.nq, f.spec.np, f.spec.lq, f.spec.lp);
    const Eigen::MatrixXcd hat = fft.forward(f.values);
    const double total = hat.cwiseAbs().sum();
    if (total == 0.0) return 0.0;
    auto outer = [](int idx, int n) {
        const int s = idx <= n / 2 ? idx : n - idx;
        return s > 2 * n / 5;
    };
    double edge = 0.0;
    for (int j = 0; j < f.spec.np; ++j) {
        for (int i = 0; i < f.spec.nq; ++i) {
            if (outer(i, f.spec.nq) || outer(j, f.spec.np)) edge += std::abs(hat(i, j));
        }
    }
    return edge / total;
}

namespace {

double factorial(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

void require_same_grid(const GridSpec& a, const GridSpec& b) {
    if (a.nq != b.nq || a.np != b.np || a.lq != b.lq || a.lp != b.lp || a.params.hbar != b.params.hbar) {
        throw DomainError("grid functions live on different grids");
    }
}

}  // namespace

GridFunction grid_star_poly(const PhasePoly& f, const GridFunction& g, double alias_tol) {
    g.spec.validate();
    const double edge = band_edge_weight(g);
    if (edge > alias_tol) {
        std::ostringstream msg;
        msg << "operand is not band-limited on this grid (band-edge weight " << edge << " > " << alias_tol << ")";
        throw NumericalError(msg.str());
    }
    const GridSpec& s = g.spec;
    const double hbar = s.params.hbar;
    const PhasePoly fc = to_basis(f, Basis::canonical, s.params).bind_hbar(hbar);
    const detail::Spectral2D fft(s.nq, s.np, s.lq, s.lp);
    const Eigen::MatrixXcd ghat = fft.forward(g.values);

    Eigen::MatrixXd qgrid(s.nq, s.np), pgrid(s.nq, s.np);
    for (int j = 0; j < s.np; ++j) {
        for (int i = 0; i < s.nq; ++i) {
            qgrid(i, j) = s.q(i);
            pgrid(i, j) = s.p(j);
        }
    }
    const cplx half_i(0.0, 0.5 * hbar);
    std::map<std::pair<int, int>, Eigen::MatrixXcd> dg;  // d_q^k d_p^j g
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(s.nq, s.np);
    for (const auto& [e, c] : fc.terms()) {
        const cplx coef = c.coefficient(0);
        for (int j = 0; j <= e.x; ++j) {
            for (int k = 0; k <= e.y; ++k) {
                auto it = dg.find({k, j});
                if (it == dg.end()) {
                    it = dg.emplace(std::make_pair(k, j),
                                    fft.inverse(ghat.cwiseProduct(fft.derivative_symbol(k, j))))
                             .first;
                }
                const cplx w = coef * binomial(e.x, j) * binomial(e.y, k) * int_pow(half_i, j) * int_pow(-half_i, k);
                const Eigen::MatrixXcd mono =
                    (qgrid.array().pow(e.x - j) * pgrid.array().pow(e.y - k)).matrix().cast<cplx>();
                out += w * mono.cwiseProduct(it->second);
            }
        }
    }
    return {s, out};
}

SeriesResult grid_star_series(const GridFunction& f, const GridFunction& g, int order) {
    require_same_grid(f.spec, g.spec);
    f.spec.validate();
    if (order < 0 || order > 40) throw DomainError("series order must lie in [0, 40]");
    const GridSpec& s = f.spec;
    const detail::Spectral2D fft(s.nq, s.np, s.lq, s.lp);

    auto filtered = [&](const Eigen::MatrixXcd& v) {
        Eigen::MatrixXcd hat = fft.forward(v);
        const double floor = 1e-14 * hat.cwiseAbs().maxCoeff();
        for (Eigen::Index j = 0; j < hat.cols(); ++j) {
            for (Eigen::Index i = 0; i < hat.rows(); ++i) {
                if (std::abs(hat(i, j)) < floor) hat(i, j) = 0.0;
            }
        }
        return hat;
    };
    const Eigen::MatrixXcd fhat = filtered(f.values);
    const Eigen::MatrixXcd ghat = filtered(g.values);

    SeriesResult result{{s, f.values.cwiseProduct(g.values)}, {}, 0.0};
    result.order_norms.push_back(result.value.values.cwiseAbs().maxCoeff());
    const cplx half_i(0.0, 0.5 * s.params.hbar);
    int growth = 0;
    double last = result.order_norms.back();
    double peak = last;
    for (int k = 1; k <= order; ++k) {
        Eigen::MatrixXcd term = Eigen::MatrixXcd::Zero(s.nq, s.np);
        for (int m = 0; m <= k; ++m) {
            const int n = k - m;
            const Eigen::MatrixXcd df = fft.inverse(fhat.cwiseProduct(fft.derivative_symbol(n, m)));
            const Eigen::MatrixXcd dg = fft.inverse(ghat.cwiseProduct(fft.derivative_symbol(m, n)));
            const double sign = (m % 2 == 0) ? 1.0 : -1.0;
            term += (sign / (factorial(m) * factorial(n))) * df.cwiseProduct(dg);
        }
        term *= int_pow(half_i, k);
        result.value.values += term;
        const double norm = term.cwiseAbs().maxCoeff();
        result.order_norms.push_back(norm);
        // Orders that vanish by symmetry (odd orders of radial pairs) are skipped.
        peak = std::max(peak, norm);
        if (norm <= 1e-10 * peak) continue;
        growth = (last > 0.0 && norm > 1.5 * last) ? growth + 1 : 0;
        last = norm;
        if (growth >= 6) {
            std::ostringstream msg;
            msg << "Moyal series diverges on this grid: order " << k << " contribution " << norm
                << " after 6 successive growing orders";
            throw NumericalError(msg.str());
        }
    }
    result.tail_estimate = result.order_norms.back();
    return result;
}

}  // namespace dq
