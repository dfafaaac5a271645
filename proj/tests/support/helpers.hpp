#pragma once

#include "dq/dq.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>

namespace testing {

/// Coefficients with hbar bound to a number, in the oracle's dense layout.
inline oracle::Poly to_dense(const dq::PhasePoly& f, double hbar) {
    oracle::Poly out;
    for (const auto& [e, c] : f.terms()) out[{e.x, e.y}] += c.evaluate(hbar);
    return out;
}

/// {f, g} = f_q g_p - f_p g_q on dense polynomials.
inline oracle::Poly poisson(const oracle::Poly& f, const oracle::Poly& g) {
    oracle::Poly out = oracle::times(oracle::derive(f, 1, 0), oracle::derive(g, 0, 1));
    for (const auto& [e, c] : oracle::times(oracle::derive(f, 0, 1), oracle::derive(g, 1, 0))) out[e] -= c;
    return out;
}

/// Random polynomial with Gaussian-integer coefficients in [-3, 3] + i[-3, 3].
inline dq::PhasePoly random_poly(std::mt19937_64& rng, dq::Basis basis, int max_degree, int max_terms = 6) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_int_distribution<int> deg(0, max_degree);
    dq::PhasePoly f(basis);
    const int n = count(rng);
    for (int k = 0; k < n; ++k) {
        const int total = deg(rng);
        const int x = std::uniform_int_distribution<int>(0, total)(rng);
        f.add_term({x, total - x}, dq::cplx(coef(rng), coef(rng)));
    }
    if (f.is_zero()) f.add_term({0, 1}, dq::cplx(1.0));
    return f;
}

inline double relative(const dq::PhasePoly& f, const dq::PhasePoly& g) {
    return dq::max_coefficient_difference(f, g) / std::max({1.0, f.max_abs_coefficient(), g.max_abs_coefficient()});
}

inline double relative(const dq::GaussianPoly& f, const dq::GaussianPoly& g) {
    return dq::max_coefficient_difference(f, g) / std::max({1.0, f.max_abs_coefficient(), g.max_abs_coefficient()});
}

}  // namespace testing
