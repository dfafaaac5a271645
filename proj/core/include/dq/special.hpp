#pragma once

#include <vector>

namespace dq {

/// Laguerre polynomial L_n(x) by the three-term recurrence
/// (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}.
double laguerre(int n, double x);

/// Coefficients c_m of L_n(x) = sum_m c_m x^m, from the closed sum
/// c_m = (-1)^m n! / ((n-m)! m! m!).
std::vector<double> laguerre_coefficients(int n);

/// Physicists' Hermite polynomial H_n(x): H_{k+1} = 2x H_k - 2k H_{k-1}.
double hermite(int n, double x);

/// Orthonormal Hermite function (2^n n! sqrt(pi))^{-1/2} H_n(x) e^{-x^2/2},
/// evaluated by its own normalized recurrence (no overflow for large n).
double hermite_function(int n, double x);

/// All hermite_function(k, x) for k = 0..n_max.
std::vector<double> hermite_functions(int n_max, double x);

/// Gauss-Hermite rule for weight e^{-x^2}, Golub-Welsch.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
QuadratureRule gauss_hermite(int n);

}  // namespace dq
