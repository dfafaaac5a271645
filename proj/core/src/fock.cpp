#include "dq/fock.hpp"

#include "dq/error.hpp"
#include "dq/special.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace dq {

FockOperators fock_operators(const PhysParams& params, int dim) {
    params.validate();
    if (dim < 2) throw DomainError("Fock truncation needs dim >= 2");
    FockOperators ops;
    ops.a = FockMatrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) ops.a(n - 1, n) = std::sqrt(params.hbar * n);
    ops.adag = ops.a.adjoint();
    const double mw = params.m_omega();
    ops.q = (ops.a + ops.adag) / std::sqrt(2.0 * mw);
    ops.p = cplx(0.0, std::sqrt(mw / 2.0)) * (ops.adag - ops.a);
    ops.h = FockMatrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) ops.h(n, n) = (n + 0.5) * params.hbar * params.omega;
    return ops;
}

std::string_view to_string(Ordering ordering) noexcept {
    switch (ordering) {
        case Ordering::standard: return "standard";
        case Ordering::antistandard: return "antistandard";
        case Ordering::weyl: return "weyl";
        case Ordering::normal: return "normal";
        case Ordering::antinormal: return "antinormal";
    }
    return "?";
}

Ordering parse_ordering(std::string_view name) {
    for (Ordering o : {Ordering::standard, Ordering::antistandard, Ordering::weyl, Ordering::normal,
                       Ordering::antinormal}) {
        if (name == to_string(o)) return o;
    }
    throw DomainError("unknown ordering '" + std::string(name) +
                      "' (expected weyl|standard|antistandard|normal|antinormal)");
}

namespace {

class PowerCache {
public:
    PowerCache(const FockMatrix& base) : base_(base) {}

    const FockMatrix& operator()(int n) {
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
        FockMatrix m = n == 0 ? FockMatrix::Identity(base_.rows(), base_.cols()) : FockMatrix(base_ * (*this)(n - 1));
        return cache_.emplace(n, std::move(m)).first->second;
    }

private:
    FockMatrix base_;
    std::map<int, FockMatrix> cache_;
};

Basis ordering_basis(Ordering ordering, Basis own) {
    switch (ordering) {
        case Ordering::standard:
        case Ordering::antistandard: return Basis::canonical;
        case Ordering::normal:
        case Ordering::antinormal: return Basis::holomorphic;
        case Ordering::weyl: return own;
    }
    return own;
}

}  // namespace

FockMatrix theta_order(const PhasePoly& f, Ordering ordering, int dim, const PhysParams& params) {
    const PhasePoly g = to_basis(f, ordering_basis(ordering, f.basis()), params).bind_hbar(params.hbar);
    const int ext = dim + std::max(0, g.degree());
    const FockOperators ops = fock_operators(params, ext);
    const bool holo = g.basis() == Basis::holomorphic;
    // x <-> Q or a, y <-> P or a^dag
    const FockMatrix& x = holo ? ops.a : ops.q;
    const FockMatrix& y = holo ? ops.adag : ops.p;
    PowerCache xp(x), yp(y);

    FockMatrix out = FockMatrix::Zero(ext, ext);
    std::map<std::pair<int, int>, FockMatrix> weyl;
    // W(m, n) = (X W(m-1, n) + W(m-1, n) X) / 2, W(0, n) = Y^n
    auto weyl_image = [&](auto&& self, int m, int n) -> FockMatrix {
        if (m == 0) return yp(n);
        auto it = weyl.find({m, n});
        if (it != weyl.end()) return it->second;
        const FockMatrix prev = self(self, m - 1, n);
        FockMatrix w = 0.5 * (x * prev + prev * x);
        weyl.emplace(std::make_pair(m, n), w);
        return w;
    };
    for (const auto& [e, c] : g.terms()) {
        const cplx coef = c.coefficient(0);
        switch (ordering) {
            case Ordering::standard:
            case Ordering::antinormal: out += coef * (xp(e.x) * yp(e.y)); break;
            case Ordering::antistandard:
            case Ordering::normal: out += coef * (yp(e.y) * xp(e.x)); break;
            case Ordering::weyl: out += coef * weyl_image(weyl_image, e.x, e.y); break;
        }
    }
    return out.topLeftCorner(dim, dim);
}

FockMatrix weyl_by_enumeration(int m, int n, int dim, const PhysParams& params) {
    if (m < 0 || n < 0) throw DomainError("negative exponent");
    const FockOperators ops = fock_operators(params, dim + m + n);
    std::vector<int> word(m, 0);
    word.insert(word.end(), n, 1);
    FockMatrix sum = FockMatrix::Zero(dim + m + n, dim + m + n);
    long count = 0;
    do {
        FockMatrix prod = FockMatrix::Identity(dim + m + n, dim + m + n);
        for (int letter : word) prod = prod * (letter == 0 ? ops.q : ops.p);
        sum += prod;
        ++count;
    } while (std::next_permutation(word.begin(), word.end()));
    return (sum / static_cast<double>(count)).topLeftCorner(dim, dim);
}

std::string_view to_string(Pairing pairing) noexcept {
    switch (pairing) {
        case Pairing::weyl_moyal: return "weyl/moyal";
        case Pairing::normal_normal: return "normal/normal";
        case Pairing::standard_star: return "antistandard/standard";
    }
    return "?";
}

Ordering pairing_ordering(Pairing pairing) noexcept {
    switch (pairing) {
        case Pairing::weyl_moyal: return Ordering::weyl;
        case Pairing::normal_normal: return Ordering::normal;
        case Pairing::standard_star: return Ordering::antistandard;
    }
    return Ordering::weyl;
}

Scheme pairing_scheme(Pairing pairing) noexcept {
    switch (pairing) {
        case Pairing::weyl_moyal: return Scheme::moyal;
        case Pairing::normal_normal: return Scheme::normal;
        case Pairing::standard_star: return Scheme::standard;
    }
    return Scheme::moyal;
}

double homomorphism_residual(const PhasePoly& f, const PhasePoly& g, Ordering ordering, Scheme scheme, int dim,
                             const PhysParams& params) {
    const int block = dim - std::max(0, f.degree()) - std::max(0, g.degree());
    if (block < 1) throw DomainError("dim too small for the operand degrees");
    const FockMatrix lhs = theta_order(f, ordering, dim, params) * theta_order(g, ordering, dim, params);
    const FockMatrix rhs = theta_order(star_poly(f, g, scheme, params), ordering, dim, params);
    const double scale = std::max(lhs.topLeftCorner(block, block).cwiseAbs().maxCoeff(), 1e-300);
    return (lhs - rhs).topLeftCorner(block, block).cwiseAbs().maxCoeff() / scale;
}

double homomorphism_residual(const PhasePoly& f, const PhasePoly& g, Pairing pairing, int dim,
                             const PhysParams& params) {
    return homomorphism_residual(f, g, pairing_ordering(pairing), pairing_scheme(pairing), dim, params);
}

CoherentSymbol coherent_symbol(const FockMatrix& op, cplx a, const PhysParams& params) {
    params.validate();
    const Eigen::Index dim = op.rows();
    if (dim < 1 || op.cols() != dim) throw DomainError("operator must be square");
    Eigen::VectorXcd v(dim);
    v(0) = std::exp(-std::norm(a) / (2.0 * params.hbar));
    for (Eigen::Index n = 1; n < dim; ++n) v(n) = v(n - 1) * a / std::sqrt(params.hbar * n);
    return {v.dot(op * v), std::norm(v(dim - 1))};
}

WeylSymbol weyl_symbol(const FockMatrix& op, const std::vector<double>& q, const std::vector<double>& p,
                       const PhysParams& params) {
    params.validate();
    const int dim = static_cast<int>(op.rows());
    if (dim < 1 || op.cols() != dim) throw DomainError("operator must be square");
    const double ell = params.length_scale();

    WeylSymbol out;
    out.q = q;
    out.p = p;
    const double big = std::max(op.cwiseAbs().maxCoeff(), 1e-300);
    double trailing = 0.0;
    for (int j = std::max(0, dim - 2); j < dim; ++j) {
        trailing = std::max({trailing, op.row(j).cwiseAbs().maxCoeff(), op.col(j).cwiseAbs().maxCoeff()});
    }
    out.trailing_weight = trailing / big;
    out.truncated = out.trailing_weight > 1e-8;

    // Hermite functions of index < dim are negligible beyond |x| = radius.
    const double radius = (std::sqrt(2.0 * dim + 1.0) + 7.0) * ell;
    double p_max = 0.0;
    for (double pj : p) p_max = std::max(p_max, std::abs(pj));
    const double band = std::sqrt(2.0 * dim + 1.0) / ell + p_max / params.hbar;
    const double half_width = 2.0 * radius;
    const double d_xi = std::min(0.25 * ell, M_PI / (2.0 * band));
    const int n_xi = 2 * static_cast<int>(std::ceil(half_width / d_xi)) + 1;
    const double step = 2.0 * half_width / (n_xi - 1);

    std::vector<double> xi(n_xi);
    for (int k = 0; k < n_xi; ++k) xi[k] = -half_width + k * step;
    Eigen::MatrixXcd fourier(p.size(), n_xi);
    for (std::size_t j = 0; j < p.size(); ++j) {
        for (int k = 0; k < n_xi; ++k) fourier(j, k) = std::exp(cplx(0.0, -xi[k] * p[j] / params.hbar)) * step;
    }

    const double amp = 1.0 / std::sqrt(ell);
    out.values = Eigen::MatrixXcd::Zero(q.size(), p.size());
    Eigen::MatrixXd u(n_xi, dim), v(n_xi, dim);
    for (std::size_t i = 0; i < q.size(); ++i) {
        for (int k = 0; k < n_xi; ++k) {
            const std::vector<double> hu = hermite_functions(dim - 1, (q[i] + xi[k] / 2.0) / ell);
            const std::vector<double> hv = hermite_functions(dim - 1, (q[i] - xi[k] / 2.0) / ell);
            for (int n = 0; n < dim; ++n) {
                u(k, n) = amp * hu[n];
                v(k, n) = amp * hv[n];
            }
        }
        const Eigen::VectorXcd g = ((u.cast<cplx>() * op).cwiseProduct(v.cast<cplx>())).rowwise().sum();
        out.values.row(i) = (fourier * g).transpose();
    }
    return out;
}

}  // namespace dq
