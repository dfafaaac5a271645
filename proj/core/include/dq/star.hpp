#pragma once

#include "dq/phase_poly.hpp"

#include <string_view>

namespace dq {

/// Which star product is in use.
///
///   moyal    : f exp[(i hbar/2)(<-d_q ->d_p - <-d_p ->d_q)] g
///              = f exp[(hbar/2)(<-d_a ->d_abar - <-d_abar ->d_a)] g
///   standard : f exp[i hbar <-d_q ->d_p] g          (canonical basis)
///   normal   : f exp[hbar <-d_a ->d_abar] g         (holomorphic basis)
enum class Scheme { moyal, standard, normal };

std::string_view to_string(Scheme scheme) noexcept;
Scheme parse_scheme(std::string_view name);

/// The bidifferential exponent hbar (c_xy <-d_x ->d_y + c_yx <-d_y ->d_x) of
/// a scheme in a given basis, x/y being (q, p) or (a, abar).
struct StarKernel {
    Basis basis;
    cplx c_xy;
    cplx c_yx;
};

/// Natural basis of a scheme (Moyal works in either; defaults to canonical).
Basis natural_basis(Scheme scheme) noexcept;
StarKernel star_kernel(Scheme scheme, Basis basis);

/// Exact star product by the terminating bidifferential series.
///
/// Operands are brought to a common basis first: standard works in (q, p),
/// normal in (a, abar), Moyal keeps canonical inputs canonical and otherwise
/// goes holomorphic. `params` fixes m*omega for those conversions.
PhasePoly star_poly(const PhasePoly& f, const PhasePoly& g, Scheme scheme,
                    const PhysParams& params = {});

/// Moyal product through the shift formula
/// f(q + (i hbar/2) d_p, p - (i hbar/2) d_q) g, with the shifts expanded
/// binomially monomial by monomial. Canonical basis only.
PhasePoly star_shift(const PhasePoly& f, const PhasePoly& g);

/// f * g - g * f.
PhasePoly star_commutator(const PhasePoly& f, const PhasePoly& g, Scheme scheme,
                          const PhysParams& params = {});

/// The two transition operators T realising c-equivalence with Moyal:
///   standard_to_moyal : T = exp(-(i hbar/2) d_q d_p)
///   normal_to_moyal   : T = exp(-(hbar/2) d_a d_abar)
/// `inverse` flips the sign of the exponent.
struct TransitionOp {
    enum class Kind { standard_to_moyal, normal_to_moyal };
    Kind kind = Kind::normal_to_moyal;
    bool inverse = false;

    static TransitionOp standard_to_moyal() { return {Kind::standard_to_moyal, false}; }
    static TransitionOp normal_to_moyal() { return {Kind::normal_to_moyal, false}; }
    TransitionOp inverted() const { return {kind, !inverse}; }

    Basis basis() const noexcept {
        return kind == Kind::standard_to_moyal ? Basis::canonical : Basis::holomorphic;
    }
    Scheme source() const noexcept {
        return kind == Kind::standard_to_moyal ? Scheme::standard : Scheme::normal;
    }
};

/// Applies T to a polynomial; the exponential series terminates. The input
/// must already be in T's basis.
PhasePoly transition_apply(const TransitionOp& op, const PhasePoly& f);

/// Complex conjugation of the function: conjugates coefficients and, in the
/// holomorphic basis, swaps a and abar.
PhasePoly hermitean_conj(const PhasePoly& f);

}  // namespace dq
