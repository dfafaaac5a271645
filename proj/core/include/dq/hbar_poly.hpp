#pragma once

#include <complex>
#include <map>

namespace dq {

using cplx = std::complex<double>;

/// z^n for n >= 0 by repeated multiplication (0^0 = 1).
inline cplx int_pow(cplx z, int n) {
    cplx r = 1.0;
    for (int k = 0; k < n; ++k) r *= z;
    return r;
}

/// Polynomial in the formal deformation parameter hbar with complex
/// coefficients. Powers are non-negative; exact zeros are never stored.
class HbarPoly {
public:
    using Map = std::map<int, cplx>;

    HbarPoly() = default;
    HbarPoly(cplx constant);  // NOLINT: implicit lift of scalars is intended
    static HbarPoly monomial(int power, cplx coefficient = 1.0);

    const Map& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    cplx coefficient(int power) const;
    int degree() const;       // -1 for the zero polynomial
    int low_degree() const;   // lowest power present, -1 for zero

    cplx evaluate(double hbar) const;
    double max_abs() const;

    /// Drops coefficients with |c| <= tol.
    HbarPoly chopped(double tol) const;
    HbarPoly conj() const;

    HbarPoly& operator+=(const HbarPoly& other);
    HbarPoly& operator-=(const HbarPoly& other);
    HbarPoly& operator*=(cplx scalar);
    HbarPoly operator-() const;

    friend HbarPoly operator+(HbarPoly lhs, const HbarPoly& rhs) { return lhs += rhs; }
    friend HbarPoly operator-(HbarPoly lhs, const HbarPoly& rhs) { return lhs -= rhs; }
    friend HbarPoly operator*(const HbarPoly& lhs, const HbarPoly& rhs);
    friend HbarPoly operator*(HbarPoly lhs, cplx s) { return lhs *= s; }
    friend HbarPoly operator*(cplx s, HbarPoly rhs) { return rhs *= s; }

    /// Multiplies by hbar^k.
    HbarPoly shifted(int k) const;

    friend bool operator==(const HbarPoly&, const HbarPoly&) = default;

private:
    void add_term(int power, cplx c);
    Map coeffs_;
};

}  // namespace dq
