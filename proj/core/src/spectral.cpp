#include "spectral.hpp"

#include "dq/error.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>

namespace dq::detail {

namespace {

// The FFTW planner is not thread-safe; execution on new arrays is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

std::vector<double> wavenumbers(int n, double half_length) {
    std::vector<double> k(n);
    const double base = 2.0 * M_PI / (2.0 * half_length);
    for (int j = 0; j < n; ++j) {
        const int s = j <= n / 2 ? j : j - n;
        k[j] = (2 * j == n) ? 0.0 : base * s;
    }
    return k;
}

// (i k)^n, exact for n = 0 even when k = 0.
std::complex<double> ipow(double k, int n) {
    std::complex<double> r = 1.0;
    for (int j = 0; j < n; ++j) r *= std::complex<double>(0.0, k);
    return r;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

Spectral2D::Spectral2D(int nq, int np, double lq, double lp)
    : nq_(nq), np_(np), kq_(wavenumbers(nq, lq)), kp_(wavenumbers(np, lp)) {
    Eigen::MatrixXcd scratch(nq, np);
    std::lock_guard<std::mutex> lock(planner_mutex());
    // Column-major (nq x np) is row-major (np x nq).
    forward_plan_ = fftw_plan_dft_2d(np, nq, as_fftw(scratch.data()), as_fftw(scratch.data()), FFTW_FORWARD,
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
    inverse_plan_ = fftw_plan_dft_2d(np, nq, as_fftw(scratch.data()), as_fftw(scratch.data()), FFTW_BACKWARD,
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (forward_plan_ == nullptr || inverse_plan_ == nullptr) throw NumericalError("FFTW planning failed");
}

Spectral2D::~Spectral2D() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
    fftw_destroy_plan(static_cast<fftw_plan>(inverse_plan_));
}

Eigen::MatrixXcd Spectral2D::forward(const Eigen::MatrixXcd& x) const {
    Eigen::MatrixXcd in = x;
    Eigen::MatrixXcd out(nq_, np_);
    fftw_execute_dft(static_cast<fftw_plan>(forward_plan_), as_fftw(in.data()), as_fftw(out.data()));
    return out;
}

Eigen::MatrixXcd Spectral2D::inverse(const Eigen::MatrixXcd& x) const {
    Eigen::MatrixXcd in = x;
    Eigen::MatrixXcd out(nq_, np_);
    fftw_execute_dft(static_cast<fftw_plan>(inverse_plan_), as_fftw(in.data()), as_fftw(out.data()));
    return out / static_cast<double>(nq_ * np_);
}

Eigen::MatrixXcd Spectral2D::derivative_symbol(int nq, int np) const {
    Eigen::MatrixXcd s(nq_, np_);
    for (int b = 0; b < np_; ++b) {
        const std::complex<double> fp = ipow(kp_[b], np);
        for (int a = 0; a < nq_; ++a) s(a, b) = ipow(kq_[a], nq) * fp;
    }
    return s;
}

}  // namespace dq::detail
