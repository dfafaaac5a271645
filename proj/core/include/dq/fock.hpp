#pragma once

#include "dq/star.hpp"

#include <Eigen/Dense>

#include <string_view>
#include <vector>

namespace dq {

/// Operator in the truncated number basis |0>, ..., |D-1>.
using FockMatrix = Eigen::MatrixXcd;

/// a|n> = sqrt(hbar n)|n-1>, so [a, a^dag] = hbar on the untruncated block.
/// Q = (a + a^dag)/sqrt(2 m w), P = i sqrt(m w/2)(a^dag - a). H is the exact
/// diagonal (n + 1/2) hbar w, which w (a a^dag + a^dag a)/2 misses in the last row.
struct FockOperators {
    FockMatrix q, p, a, adag, h;
};

FockOperators fock_operators(const PhysParams& params, int dim);

/// The five ordering points: standard (Q left of P), antistandard, Weyl,
/// normal (a^dag left of a), antinormal.
enum class Ordering { standard, antistandard, weyl, normal, antinormal };

std::string_view to_string(Ordering ordering) noexcept;
Ordering parse_ordering(std::string_view name);

/// Theta(f): monomial-wise operator image under the chosen ordering.
/// Canonical orderings act on q/p, holomorphic ones on a/abar; the input is
/// converted to the ordering's basis first (Weyl uses f's own basis, the
/// two Weyl images agree). The hbar in coefficients is bound to params.hbar.
///
/// Products are formed in dimension dim + deg f and cropped, so the full
/// dim x dim result is exact.
FockMatrix theta_order(const PhasePoly& f, Ordering ordering, int dim, const PhysParams& params);

/// Weyl image of q^m p^n by brute-force average over all interleavings.
/// Factorial cost; exists to validate the recursion used by theta_order.
FockMatrix weyl_by_enumeration(int m, int n, int dim, const PhysParams& params);

/// The three (ordering, star) pairings for which Theta is a homomorphism.
/// The standard product exp(i hbar <-d_q ->d_p) pairs with antistandard
/// ordering: q *_S p = qp + i hbar, so Theta(qp) + i hbar = QP forces
/// Theta(qp) = PQ when [Q, P] = i hbar.
enum class Pairing { weyl_moyal, normal_normal, standard_star };

std::string_view to_string(Pairing pairing) noexcept;
Ordering pairing_ordering(Pairing pairing) noexcept;
Scheme pairing_scheme(Pairing pairing) noexcept;

/// Largest entry of Theta(f)Theta(g) - Theta(f * g) on the top-left
/// (dim - deg f - deg g) block, relative to the largest entry of
/// Theta(f)Theta(g) there.
double homomorphism_residual(const PhasePoly& f, const PhasePoly& g, Ordering ordering, Scheme scheme, int dim,
                             const PhysParams& params);
double homomorphism_residual(const PhasePoly& f, const PhasePoly& g, Pairing pairing, int dim,
                             const PhysParams& params);

/// <a|op|a> with the normalized coherent state
/// |a> = e^{-a abar/2 hbar} sum a^n / sqrt(n! hbar^n) |n>.
struct CoherentSymbol {
    cplx value;
    double tail_weight;  // |<D-1|a>|^2, the truncation warning indicator
};
CoherentSymbol coherent_symbol(const FockMatrix& op, cplx a, const PhysParams& params);

/// Weyl symbol W(q, p) = int <q + xi/2|op|q - xi/2> e^{-i xi p/hbar} d xi
/// on the given (q, p) nodes, with Hermite-function wavefunctions and
/// trapezoid quadrature in xi.
struct WeylSymbol {
    std::vector<double> q;
    std::vector<double> p;
    Eigen::MatrixXcd values;  // values(i, j) = W(q[i], p[j])
    double trailing_weight;   // largest |op| entry touching the last two basis states, relative
    bool truncated;           // trailing_weight > 1e-8
};
WeylSymbol weyl_symbol(const FockMatrix& op, const std::vector<double>& q, const std::vector<double>& p,
                       const PhysParams& params);

}  // namespace dq
