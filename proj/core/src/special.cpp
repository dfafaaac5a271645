#include "dq/special.hpp"

#include "dq/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace dq {

double laguerre(int n, double x) {
    if (n < 0) throw DomainError("Laguerre index must be non-negative");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> laguerre_coefficients(int n) {
    if (n < 0) throw DomainError("Laguerre index must be non-negative");
    std::vector<double> c(n + 1);
    // c_m / c_{m-1} = -(n-m+1) / m^2
    c[0] = 1.0;
    for (int m = 1; m <= n; ++m) c[m] = -c[m - 1] * (n - m + 1) / (static_cast<double>(m) * m);
    return c;
}

double hermite(int n, double x) {
    if (n < 0) throw DomainError("Hermite index must be non-negative");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> hermite_functions(int n_max, double x) {
    if (n_max < 0) throw DomainError("Hermite index must be non-negative");
    std::vector<double> h(n_max + 1);
    h[0] = std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x);
    if (n_max >= 1) h[1] = std::sqrt(2.0) * x * h[0];
    for (int k = 1; k < n_max; ++k) {
        h[k + 1] = std::sqrt(2.0 / (k + 1.0)) * x * h[k] - std::sqrt(k / (k + 1.0)) * h[k - 1];
    }
    return h;
}

double hermite_function(int n, double x) { return hermite_functions(n, x).back(); }

QuadratureRule gauss_hermite(int n) {
    if (n < 1) throw DomainError("quadrature needs at least one node");
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(k / 2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    if (solver.info() != Eigen::Success) throw NumericalError("Golub-Welsch eigensolver failed");
    QuadratureRule rule;
    for (int i = 0; i < n; ++i) {
        const double v0 = solver.eigenvectors()(0, i);
        rule.nodes.push_back(solver.eigenvalues()(i));
        rule.weights.push_back(std::sqrt(M_PI) * v0 * v0);
    }
    return rule;
}

}  // namespace dq
