#pragma once

// 2-D FFTW wrapper for periodic grids stored as column-major (nq x np)
// Eigen matrices.

#include <Eigen/Dense>

#include <vector>

namespace dq::detail {

class Spectral2D {
public:
    Spectral2D(int nq, int np, double lq, double lp);
    ~Spectral2D();
    Spectral2D(const Spectral2D&) = delete;
    Spectral2D& operator=(const Spectral2D&) = delete;

    Eigen::MatrixXcd forward(const Eigen::MatrixXcd& x) const;
    /// Includes the 1/(nq np) normalization.
    Eigen::MatrixXcd inverse(const Eigen::MatrixXcd& x) const;

    /// Angular wavenumbers in FFT order; the Nyquist entry is 0.
    const std::vector<double>& kq() const { return kq_; }
    const std::vector<double>& kp() const { return kp_; }

    /// d_q^nq d_p^np in spectral space (Nyquist modes zeroed).
    Eigen::MatrixXcd derivative_symbol(int nq, int np) const;

private:
    int nq_, np_;
    std::vector<double> kq_, kp_;
    void* forward_plan_;
    void* inverse_plan_;
};

}  // namespace dq::detail
