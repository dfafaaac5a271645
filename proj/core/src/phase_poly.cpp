#include "dq/phase_poly.hpp"

#include "dq/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dq {

std::string_view to_string(Basis basis) noexcept {
    return basis == Basis::canonical ? "canonical" : "holomorphic";
}

std::string_view to_string(Var var) noexcept {
    switch (var) {
        case Var::q: return "q";
        case Var::p: return "p";
        case Var::a: return "a";
        case Var::abar: return "abar";
    }
    return "?";
}

Basis basis_of(Var var) noexcept {
    return (var == Var::q || var == Var::p) ? Basis::canonical : Basis::holomorphic;
}

namespace {

bool is_x_slot(Var var) noexcept { return var == Var::q || var == Var::a; }

// Falling factorial n (n-1) ... (n-k+1).
double falling(int n, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= static_cast<double>(n - i);
    return r;
}

}  // namespace

PhasePoly PhasePoly::constant(cplx c, Basis basis) {
    PhasePoly out(basis);
    out.add_term({0, 0}, HbarPoly(c));
    return out;
}

PhasePoly PhasePoly::variable(Var var) {
    PhasePoly out(basis_of(var));
    out.add_term(is_x_slot(var) ? Exponents{1, 0} : Exponents{0, 1}, HbarPoly(1.0));
    return out;
}

PhasePoly PhasePoly::hbar(Basis basis) {
    PhasePoly out(basis);
    out.add_term({0, 0}, HbarPoly::monomial(1));
    return out;
}

PhasePoly PhasePoly::monomial(Basis basis, Exponents e, const HbarPoly& coefficient) {
    PhasePoly out(basis);
    out.add_term(e, coefficient);
    return out;
}

HbarPoly PhasePoly::coefficient(Exponents e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? HbarPoly{} : it->second;
}

PhasePoly PhasePoly::hbar_slice(int k) const {
    PhasePoly out(basis_);
    for (const auto& [e, c] : terms_) out.add_term(e, HbarPoly(c.coefficient(k)));
    return out;
}

PhasePoly PhasePoly::bind_hbar(double hbar) const {
    PhasePoly out(basis_);
    for (const auto& [e, c] : terms_) out.add_term(e, HbarPoly(c.evaluate(hbar)));
    return out;
}

int PhasePoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.total());
    return d;
}

int PhasePoly::degree_x() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.x);
    return d;
}

int PhasePoly::degree_y() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.y);
    return d;
}

int PhasePoly::hbar_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, c.degree());
    return d;
}

double PhasePoly::max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, c.max_abs());
    return m;
}

PhasePoly PhasePoly::chopped(double tol) const {
    PhasePoly out(basis_);
    for (const auto& [e, c] : terms_) {
        HbarPoly kept = c.chopped(tol);
        if (!kept.is_zero()) out.terms_.emplace(e, std::move(kept));
    }
    return out;
}

void PhasePoly::add_term(Exponents e, const HbarPoly& c) {
    if (c.is_zero()) return;
    if (e.x < 0 || e.y < 0) throw DomainError("negative exponent");
    if (e.x >= kMaxExponent || e.y >= kMaxExponent) {
        throw DegreeOverflow("exponent " + std::to_string(std::max(e.x, e.y)) +
                             " exceeds the per-variable bound " + std::to_string(kMaxExponent - 1));
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PhasePoly& PhasePoly::operator+=(const PhasePoly& other) {
    require_same_basis(*this, other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

PhasePoly& PhasePoly::operator-=(const PhasePoly& other) {
    require_same_basis(*this, other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

PhasePoly& PhasePoly::operator*=(const PhasePoly& other) {
    *this = *this * other;
    return *this;
}

PhasePoly& PhasePoly::operator*=(cplx scalar) {
    Terms kept;
    for (auto& [e, c] : terms_) {
        HbarPoly scaled = c * scalar;
        if (!scaled.is_zero()) kept.emplace(e, std::move(scaled));
    }
    terms_ = std::move(kept);
    return *this;
}

PhasePoly PhasePoly::operator-() const {
    PhasePoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

PhasePoly operator*(const PhasePoly& lhs, const PhasePoly& rhs) {
    require_same_basis(lhs, rhs);
    PhasePoly out(lhs.basis_);
    for (const auto& [e1, c1] : lhs.terms_) {
        for (const auto& [e2, c2] : rhs.terms_) out.add_term({e1.x + e2.x, e1.y + e2.y}, c1 * c2);
    }
    return out;
}

PhasePoly operator*(PhasePoly lhs, const HbarPoly& s) {
    PhasePoly out(lhs.basis_);
    for (const auto& [e, c] : lhs.terms_) out.add_term(e, c * s);
    return out;
}

PhasePoly PhasePoly::pow(int n) const {
    if (n < 0) throw DomainError("negative power of a polynomial");
    PhasePoly result = constant(1.0, basis_);
    PhasePoly base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

void require_same_basis(const PhasePoly& f, const PhasePoly& g) {
    if (f.basis() != g.basis()) {
        throw BasisMismatch("operands live in different bases (" + std::string(to_string(f.basis())) +
                            " vs " + std::string(to_string(g.basis())) + ")");
    }
}

double max_coefficient_difference(const PhasePoly& f, const PhasePoly& g) {
    return (f - g).max_abs_coefficient();
}

bool approx_equal(const PhasePoly& f, const PhasePoly& g, double tol) {
    if (f.basis() != g.basis()) return false;
    const double scale = std::max({1.0, f.max_abs_coefficient(), g.max_abs_coefficient()});
    return max_coefficient_difference(f, g) <= tol * scale;
}

PhasePoly derivative(const PhasePoly& f, int nx, int ny) {
    if (nx < 0 || ny < 0) throw DomainError("negative derivative order");
    PhasePoly out(f.basis());
    for (const auto& [e, c] : f.terms()) {
        if (e.x < nx || e.y < ny) continue;
        out.add_term({e.x - nx, e.y - ny}, c * cplx(falling(e.x, nx) * falling(e.y, ny)));
    }
    return out;
}

PhasePoly differentiate(const PhasePoly& f, Var var, int order) {
    if (basis_of(var) != f.basis()) {
        throw BasisMismatch("cannot differentiate a " + std::string(to_string(f.basis())) +
                            " polynomial by " + std::string(to_string(var)));
    }
    return is_x_slot(var) ? derivative(f, order, 0) : derivative(f, 0, order);
}

cplx evaluate(const PhasePoly& f, PhasePoint point, double hbar_value) {
    cplx acc{};
    for (const auto& [e, c] : f.terms()) {
        acc += c.evaluate(hbar_value) * int_pow(point.x, e.x) * int_pow(point.y, e.y);
    }
    return acc;
}

namespace {

// Substitutes x -> sx, y -> sy (each a polynomial in the target basis).
PhasePoly substitute(const PhasePoly& f, const PhasePoly& sx, const PhasePoly& sy) {
    PhasePoly out(sx.basis());
    std::map<int, PhasePoly> xpow, ypow;
    auto power = [](std::map<int, PhasePoly>& cache, const PhasePoly& base, int n) -> const PhasePoly& {
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        return cache.emplace(n, base.pow(n)).first->second;
    };
    for (const auto& [e, c] : f.terms()) {
        out += power(xpow, sx, e.x) * power(ypow, sy, e.y) * c;
    }
    return out;
}

}  // namespace

PhasePoly to_holomorphic(const PhasePoly& f, const PhysParams& params) {
    if (f.basis() == Basis::holomorphic) throw BasisMismatch("polynomial is already holomorphic");
    params.validate();
    const double mw = params.m_omega();
    const PhasePoly a = PhasePoly::variable(Var::a);
    const PhasePoly abar = PhasePoly::variable(Var::abar);
    // q = (a + abar)/sqrt(2 m w), p = -i sqrt(m w / 2) (a - abar)
    const PhasePoly q = (a + abar) * cplx(1.0 / std::sqrt(2.0 * mw));
    const PhasePoly p = (a - abar) * cplx(0.0, -std::sqrt(mw / 2.0));
    return substitute(f, q, p);
}

PhasePoly to_canonical(const PhasePoly& f, const PhysParams& params) {
    if (f.basis() == Basis::canonical) throw BasisMismatch("polynomial is already canonical");
    params.validate();
    const double mw = params.m_omega();
    const PhasePoly q = PhasePoly::variable(Var::q);
    const PhasePoly p = PhasePoly::variable(Var::p);
    const PhasePoly a = q * cplx(std::sqrt(mw / 2.0)) + p * cplx(0.0, 1.0 / std::sqrt(2.0 * mw));
    const PhasePoly abar = q * cplx(std::sqrt(mw / 2.0)) - p * cplx(0.0, 1.0 / std::sqrt(2.0 * mw));
    return substitute(f, a, abar);
}

PhasePoly to_basis(const PhasePoly& f, Basis target, const PhysParams& params) {
    if (f.basis() == target) return f;
    return target == Basis::holomorphic ? to_holomorphic(f, params) : to_canonical(f, params);
}

PoissonTensor PoissonTensor::for_basis(Basis basis) {
    if (basis == Basis::canonical) {
        return {basis, {{{cplx{0.0}, cplx{1.0}}, {cplx{-1.0}, cplx{0.0}}}}};
    }
    return {basis, {{{cplx{0.0}, cplx{0.0, -1.0}}, {cplx{0.0, 1.0}, cplx{0.0}}}}};
}

PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g) {
    require_same_basis(f, g);
    const PoissonTensor tensor = PoissonTensor::for_basis(f.basis());
    const PhasePoly df[2] = {derivative(f, 1, 0), derivative(f, 0, 1)};
    const PhasePoly dg[2] = {derivative(g, 1, 0), derivative(g, 0, 1)};
    PhasePoly out(f.basis());
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            if (tensor.alpha[i][j] != cplx{}) out += df[i] * dg[j] * tensor.alpha[i][j];
        }
    }
    return out;
}

}  // namespace dq
