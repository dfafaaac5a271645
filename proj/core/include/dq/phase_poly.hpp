#pragma once

#include "dq/hbar_poly.hpp"
#include "dq/params.hpp"

#include <array>
#include <compare>
#include <map>
#include <string_view>

namespace dq {

/// Coordinate system of a phase-space polynomial: (q, p) or (a, abar).
enum class Basis { canonical, holomorphic };

/// The four phase-space variables. q/p live in the canonical basis,
/// a/abar in the holomorphic one.
enum class Var { q, p, a, abar };

std::string_view to_string(Basis basis) noexcept;
std::string_view to_string(Var var) noexcept;
Basis basis_of(Var var) noexcept;

/// Exponent pair of a monomial. `x` is the power of q (or a), `y` the power
/// of p (or abar).
struct Exponents {
    int x = 0;
    int y = 0;

    int total() const noexcept { return x + y; }
    auto operator<=>(const Exponents&) const = default;
};

/// Every variable's exponent must stay below this bound.
inline constexpr int kMaxExponent = 64;

/// A point of phase space. In the canonical basis `x = q`, `y = p`; in the
/// holomorphic basis `x = a`, `y = abar` (normally conj(a), but the two are
/// treated as independent arguments).
struct PhasePoint {
    cplx x;
    cplx y;
};

/// Sparse polynomial in two phase-space variables whose coefficients are
/// polynomials in hbar. Value type: all operations return new polynomials.
class PhasePoly {
public:
    using Terms = std::map<Exponents, HbarPoly>;

    explicit PhasePoly(Basis basis = Basis::canonical) : basis_(basis) {}

    static PhasePoly constant(cplx c, Basis basis);
    static PhasePoly variable(Var var);
    static PhasePoly hbar(Basis basis);
    static PhasePoly monomial(Basis basis, Exponents e, const HbarPoly& coefficient);

    Basis basis() const noexcept { return basis_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient of x^e.x y^e.y (zero if absent).
    HbarPoly coefficient(Exponents e) const;
    /// The hbar^k slice as an hbar-free polynomial.
    PhasePoly hbar_slice(int k) const;
    /// Replaces hbar with a number; the result has only hbar^0 coefficients.
    PhasePoly bind_hbar(double hbar) const;

    int degree() const;       // total degree in the phase variables, -1 for zero
    int degree_x() const;
    int degree_y() const;
    int hbar_degree() const;  // highest hbar power present, -1 for zero

    double max_abs_coefficient() const;
    PhasePoly chopped(double tol) const;

    /// Adds c * x^e.x y^e.y. Throws DegreeOverflow when an exponent reaches kMaxExponent.
    void add_term(Exponents e, const HbarPoly& c);

    PhasePoly& operator+=(const PhasePoly& other);
    PhasePoly& operator-=(const PhasePoly& other);
    PhasePoly& operator*=(const PhasePoly& other);
    PhasePoly& operator*=(cplx scalar);
    PhasePoly operator-() const;

    friend PhasePoly operator+(PhasePoly lhs, const PhasePoly& rhs) { return lhs += rhs; }
    friend PhasePoly operator-(PhasePoly lhs, const PhasePoly& rhs) { return lhs -= rhs; }
    friend PhasePoly operator*(const PhasePoly& lhs, const PhasePoly& rhs);
    friend PhasePoly operator*(PhasePoly lhs, cplx s) { return lhs *= s; }
    friend PhasePoly operator*(cplx s, PhasePoly rhs) { return rhs *= s; }
    friend PhasePoly operator*(PhasePoly lhs, const HbarPoly& s);

    friend bool operator==(const PhasePoly&, const PhasePoly&) = default;

    /// f^n for n >= 0.
    PhasePoly pow(int n) const;

private:
    Basis basis_;
    Terms terms_;
};

void require_same_basis(const PhasePoly& f, const PhasePoly& g);

/// Coefficient-wise comparison: every |difference| <= tol * max(1, scale).
bool approx_equal(const PhasePoly& f, const PhasePoly& g, double tol = 1e-12);

/// Largest |coefficient| of f - g.
double max_coefficient_difference(const PhasePoly& f, const PhasePoly& g);

/// Exact partial derivative d^order/d(var)^order.
PhasePoly differentiate(const PhasePoly& f, Var var, int order = 1);

/// Mixed derivative d^nx/dx^nx d^ny/dy^ny in the polynomial's own basis.
PhasePoly derivative(const PhasePoly& f, int nx, int ny);

/// Numeric value at a phase point with hbar bound to `hbar_value`.
cplx evaluate(const PhasePoly& f, PhasePoint point, double hbar_value);

/// Exact substitution a = sqrt(m w/2)(q + i p/(m w)), abar = conj.
PhasePoly to_holomorphic(const PhasePoly& f, const PhysParams& params);
PhasePoly to_canonical(const PhasePoly& f, const PhysParams& params);
PhasePoly to_basis(const PhasePoly& f, Basis target, const PhysParams& params);

/// Constant Poisson tensor alpha^{ij} of a two-dimensional phase space.
/// Canonical: {q, p} = 1. Holomorphic: transported through the change of
/// variables, {a, abar} = -i.
struct PoissonTensor {
    Basis basis;
    std::array<std::array<cplx, 2>, 2> alpha;

    static PoissonTensor for_basis(Basis basis);
};

/// {f, g} = alpha^{ij} d_i f d_j g.
PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g);

}  // namespace dq
