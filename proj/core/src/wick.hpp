#pragma once

// Heat-kernel action on polynomial-times-Gaussian functions of up to four
// complex variables. Shared by the Gaussian star product and the Gaussian
// transition operator.

#include "dq/phase_poly.hpp"

#include <Eigen/Dense>

#include <array>
#include <map>
#include <vector>

namespace dq::detail {

using Exps4 = std::array<int, 4>;

/// Polynomial in up to four variables with numeric coefficients.
struct MultiPoly {
    std::map<Exps4, cplx> terms;

    void add(const Exps4& e, cplx c);
    bool empty() const { return terms.empty(); }
    int degree() const;
};

/// Lifts a holomorphic PhasePoly (hbar already bound) into slots (ia, iabar).
MultiPoly embed(const PhasePoly& f, int ia, int iabar);
MultiPoly multiply(const MultiPoly& f, const MultiPoly& g);

/// exp((hbar/2) d^T C d) P, a terminating sum.
MultiPoly heat(const MultiPoly& p, const Eigen::MatrixXcd& c, double hbar);

/// P(z -> L z), where row i of `linear` expresses z_i as x*a + y*abar.
PhasePoly substitute_linear(const MultiPoly& p, const std::vector<std::array<cplx, 2>>& linear);

/// exp((hbar/2) d^T B d) [P(z) exp(z^T A z / 2 hbar)]
///   = s * exp(z^T A R z / 2 hbar) * [exp((hbar/2) d^T (R B) d) P](R z),
/// R = (I - B A)^{-1}. Variables come in (a-type, abar-type) classes and A, B
/// only couple across classes, so det(I - BA) is a perfect square and s is
/// the inverse of the a-type block determinant: the branch continuous from B = 0.
struct HeatResult {
    Eigen::MatrixXcd exponent;  // A R
    Eigen::MatrixXcd r;
    MultiPoly prefactor;        // heat-evolved P, before substituting R z
    cplx scale;
    cplx block_det;
};

HeatResult apply_heat(const MultiPoly& p, const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                      const std::vector<int>& a_slots, const std::vector<int>& abar_slots, double hbar);

}  // namespace dq::detail
