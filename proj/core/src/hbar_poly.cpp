#include "dq/hbar_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dq {

HbarPoly::HbarPoly(cplx constant) {
    add_term(0, constant);
}

HbarPoly HbarPoly::monomial(int power, cplx coefficient) {
    if (power < 0) throw std::invalid_argument("negative hbar power");
    HbarPoly out;
    out.add_term(power, coefficient);
    return out;
}

void HbarPoly::add_term(int power, cplx c) {
    if (c == cplx{}) return;
    auto [it, inserted] = coeffs_.try_emplace(power, c);
    if (!inserted) {
        it->second += c;
        if (it->second == cplx{}) coeffs_.erase(it);
    }
}

cplx HbarPoly::coefficient(int power) const {
    auto it = coeffs_.find(power);
    return it == coeffs_.end() ? cplx{} : it->second;
}

int HbarPoly::degree() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

int HbarPoly::low_degree() const {
    return coeffs_.empty() ? -1 : coeffs_.begin()->first;
}

cplx HbarPoly::evaluate(double hbar) const {
    cplx acc{};
    for (const auto& [k, c] : coeffs_) acc += c * std::pow(hbar, k);
    return acc;
}

double HbarPoly::max_abs() const {
    double m = 0.0;
    for (const auto& [k, c] : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

HbarPoly HbarPoly::chopped(double tol) const {
    HbarPoly out;
    for (const auto& [k, c] : coeffs_) {
        if (std::abs(c) > tol) out.coeffs_.emplace(k, c);
    }
    return out;
}

HbarPoly HbarPoly::conj() const {
    HbarPoly out;
    for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k, std::conj(c));
    return out;
}

HbarPoly& HbarPoly::operator+=(const HbarPoly& other) {
    for (const auto& [k, c] : other.coeffs_) add_term(k, c);
    return *this;
}

HbarPoly& HbarPoly::operator-=(const HbarPoly& other) {
    for (const auto& [k, c] : other.coeffs_) add_term(k, -c);
    return *this;
}

HbarPoly& HbarPoly::operator*=(cplx scalar) {
    if (scalar == cplx{}) {
        coeffs_.clear();
        return *this;
    }
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        it->second *= scalar;
        if (it->second == cplx{}) {
            it = coeffs_.erase(it);
        } else {
            ++it;
        }
    }
    return *this;
}

HbarPoly HbarPoly::operator-() const {
    HbarPoly out = *this;
    for (auto& [k, c] : out.coeffs_) c = -c;
    return out;
}

HbarPoly operator*(const HbarPoly& lhs, const HbarPoly& rhs) {
    HbarPoly out;
    for (const auto& [i, a] : lhs.coeffs_) {
        for (const auto& [j, b] : rhs.coeffs_) out.add_term(i + j, a * b);
    }
    return out;
}

HbarPoly HbarPoly::shifted(int k) const {
    if (k < 0 && low_degree() + k < 0 && !is_zero()) throw std::invalid_argument("negative hbar power");
    HbarPoly out;
    for (const auto& [p, c] : coeffs_) out.coeffs_.emplace(p + k, c);
    return out;
}

}  // namespace dq
