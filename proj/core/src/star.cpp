#include "dq/star.hpp"

#include "dq/error.hpp"

#include <string>
#include <vector>

namespace dq {

std::string_view to_string(Scheme scheme) noexcept {
    switch (scheme) {
        case Scheme::moyal: return "moyal";
        case Scheme::standard: return "standard";
        case Scheme::normal: return "normal";
    }
    return "?";
}

Scheme parse_scheme(std::string_view name) {
    if (name == "moyal") return Scheme::moyal;
    if (name == "standard") return Scheme::standard;
    if (name == "normal") return Scheme::normal;
    throw DomainError("unknown scheme '" + std::string(name) + "' (expected moyal|standard|normal)");
}

Basis natural_basis(Scheme scheme) noexcept {
    return scheme == Scheme::normal ? Basis::holomorphic : Basis::canonical;
}

StarKernel star_kernel(Scheme scheme, Basis basis) {
    const cplx i{0.0, 1.0};
    switch (scheme) {
        case Scheme::moyal:
            if (basis == Basis::canonical) return {basis, 0.5 * i, -0.5 * i};
            return {basis, 0.5, -0.5};
        case Scheme::standard:
            if (basis != Basis::canonical) throw BasisMismatch("the standard product is defined in (q, p)");
            return {basis, i, 0.0};
        case Scheme::normal:
            if (basis != Basis::holomorphic) throw BasisMismatch("the normal product is defined in (a, abar)");
            return {basis, 1.0, 0.0};
    }
    throw DomainError("unknown scheme");
}

namespace {

double factorial(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

// sum_{j,k} hbar^{j+k} c_xy^j c_yx^k / (j! k!) (d_x^j d_y^k f)(d_y^j d_x^k g)
PhasePoly series_product(const PhasePoly& f, const PhasePoly& g, const StarKernel& kernel) {
    PhasePoly out(f.basis());
    if (f.is_zero() || g.is_zero()) return out;
    const int jmax = kernel.c_xy == cplx{} ? 0 : std::min(f.degree_x(), g.degree_y());
    const int kmax = kernel.c_yx == cplx{} ? 0 : std::min(f.degree_y(), g.degree_x());
    for (int j = 0; j <= jmax; ++j) {
        for (int k = 0; k <= kmax; ++k) {
            const PhasePoly df = derivative(f, j, k);
            if (df.is_zero()) continue;
            const PhasePoly dg = derivative(g, k, j);
            if (dg.is_zero()) continue;
            const cplx weight =
                int_pow(kernel.c_xy, j) * int_pow(kernel.c_yx, k) / (factorial(j) * factorial(k));
            out += (df * dg) * (HbarPoly::monomial(j + k) * weight);
        }
    }
    return out;
}

}  // namespace

PhasePoly star_poly(const PhasePoly& f, const PhasePoly& g, Scheme scheme, const PhysParams& params) {
    Basis target;
    switch (scheme) {
        case Scheme::standard: target = Basis::canonical; break;
        case Scheme::normal: target = Basis::holomorphic; break;
        case Scheme::moyal:
        default:
            target = (f.basis() == g.basis()) ? f.basis() : Basis::holomorphic;
            break;
    }
    const PhasePoly fa = to_basis(f, target, params);
    const PhasePoly ga = to_basis(g, target, params);
    require_same_basis(fa, ga);
    return series_product(fa, ga, star_kernel(scheme, target));
}

PhasePoly star_shift(const PhasePoly& f, const PhasePoly& g) {
    if (f.basis() != Basis::canonical || g.basis() != Basis::canonical) {
        throw BasisMismatch("the shift formula is implemented in canonical coordinates");
    }
    // q^m p^n -> (q + U)^m (p + V)^n with U = (i hbar/2) d_p, V = -(i hbar/2) d_q
    // acting on g only; the leftover powers of q and p multiply afterwards.
    const cplx half_i{0.0, 0.5};
    std::vector<std::vector<PhasePoly>> shifted_g;  // [j][k] = U^j V^k g without hbar
    const int jmax = std::max(0, f.degree_x());
    const int kmax = std::max(0, f.degree_y());
    shifted_g.resize(jmax + 1);
    for (int j = 0; j <= jmax; ++j) {
        for (int k = 0; k <= kmax; ++k) {
            shifted_g[j].push_back(derivative(g, k, j) * (int_pow(half_i, j) * int_pow(-half_i, k)));
        }
    }
    PhasePoly out(Basis::canonical);
    for (const auto& [e, c] : f.terms()) {
        for (int j = 0; j <= e.x; ++j) {
            for (int k = 0; k <= e.y; ++k) {
                const PhasePoly& sg = shifted_g[j][k];
                if (sg.is_zero()) continue;
                const PhasePoly left =
                    PhasePoly::monomial(Basis::canonical, {e.x - j, e.y - k},
                                        c.shifted(j + k) * cplx(binomial(e.x, j) * binomial(e.y, k)));
                out += left * sg;
            }
        }
    }
    return out;
}

PhasePoly star_commutator(const PhasePoly& f, const PhasePoly& g, Scheme scheme, const PhysParams& params) {
    return star_poly(f, g, scheme, params) - star_poly(g, f, scheme, params);
}

PhasePoly transition_apply(const TransitionOp& op, const PhasePoly& f) {
    if (f.basis() != op.basis()) {
        throw BasisMismatch("transition operator acts in the " + std::string(to_string(op.basis())) + " basis");
    }
    // exp(s hbar d_x d_y) f = sum_k (s hbar)^k / k! d_x^k d_y^k f
    const cplx s = op.kind == TransitionOp::Kind::standard_to_moyal ? cplx(0.0, -0.5) : cplx(-0.5, 0.0);
    const cplx sign = op.inverse ? -1.0 : 1.0;
    PhasePoly out(f.basis());
    const int kmax = std::min(f.degree_x(), f.degree_y());
    cplx weight = 1.0;
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0) weight *= sign * s / static_cast<double>(k);
        out += derivative(f, k, k) * (HbarPoly::monomial(k) * weight);
    }
    return out;
}

PhasePoly hermitean_conj(const PhasePoly& f) {
    PhasePoly out(f.basis());
    const bool swap = f.basis() == Basis::holomorphic;
    for (const auto& [e, c] : f.terms()) {
        out.add_term(swap ? Exponents{e.y, e.x} : e, c.conj());
    }
    return out;
}

}  // namespace dq
