#include "wick.hpp"

#include "dq/error.hpp"

#include <algorithm>
#include <cmath>

namespace dq::detail {

void MultiPoly::add(const Exps4& e, cplx c) {
    if (c == cplx{}) return;
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == cplx{}) terms.erase(it);
    }
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
    return d;
}

MultiPoly embed(const PhasePoly& f, int ia, int iabar) {
    MultiPoly out;
    for (const auto& [e, c] : f.terms()) {
        Exps4 x{0, 0, 0, 0};
        x[ia] = e.x;
        x[iabar] = e.y;
        out.add(x, c.coefficient(0));
    }
    return out;
}

MultiPoly multiply(const MultiPoly& f, const MultiPoly& g) {
    MultiPoly out;
    for (const auto& [e1, c1] : f.terms) {
        for (const auto& [e2, c2] : g.terms) {
            out.add({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]}, c1 * c2);
        }
    }
    return out;
}

namespace {

// (hbar/2) sum_ij C_ij d_i d_j P
MultiPoly laplacian(const MultiPoly& p, const Eigen::MatrixXcd& c, double hbar) {
    MultiPoly out;
    const int n = static_cast<int>(c.rows());
    for (const auto& [e, coef] : p.terms) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (c(i, j) == cplx{}) continue;
                Exps4 d = e;
                double factor = d[i];
                if (d[i] == 0) continue;
                --d[i];
                factor *= d[j];
                if (d[j] == 0) continue;
                --d[j];
                out.add(d, 0.5 * hbar * c(i, j) * factor * coef);
            }
        }
    }
    return out;
}

}  // namespace

MultiPoly heat(const MultiPoly& p, const Eigen::MatrixXcd& c, double hbar) {
    MultiPoly out = p;
    MultiPoly term = p;
    for (int k = 1; !term.empty(); ++k) {
        term = laplacian(term, c, hbar);
        for (auto& [e, v] : term.terms) v /= static_cast<double>(k);
        for (const auto& [e, v] : term.terms) out.add(e, v);
    }
    return out;
}

PhasePoly substitute_linear(const MultiPoly& p, const std::vector<std::array<cplx, 2>>& linear) {
    const int n = static_cast<int>(linear.size());
    std::vector<PhasePoly> forms;
    for (const auto& row : linear) {
        PhasePoly f(Basis::holomorphic);
        f.add_term({1, 0}, row[0]);
        f.add_term({0, 1}, row[1]);
        forms.push_back(f);
    }
    std::vector<std::map<int, PhasePoly>> cache(n);
    auto power = [&](int i, int k) -> const PhasePoly& {
        auto it = cache[i].find(k);
        if (it != cache[i].end()) return it->second;
        return cache[i].emplace(k, forms[i].pow(k)).first->second;
    };
    PhasePoly out(Basis::holomorphic);
    for (const auto& [e, c] : p.terms) {
        PhasePoly term = PhasePoly::constant(c, Basis::holomorphic);
        for (int i = 0; i < n; ++i) {
            if (e[i] > 0) term = term * power(i, e[i]);
        }
        out += term;
    }
    return out;
}

HeatResult apply_heat(const MultiPoly& p, const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                      const std::vector<int>& a_slots, const std::vector<int>& abar_slots, double hbar) {
    const Eigen::Index n = a.rows();
    const Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n) - b * a;

    Eigen::MatrixXcd block(a_slots.size(), a_slots.size());
    for (std::size_t i = 0; i < a_slots.size(); ++i) {
        for (std::size_t j = 0; j < a_slots.size(); ++j) block(i, j) = m(a_slots[i], a_slots[j]);
    }
    // The abar block has the same determinant; the cross blocks vanish.
    (void)abar_slots;
    const cplx block_det = block.determinant();
    const double scale = std::max(1.0, (b * a).cwiseAbs().maxCoeff());
    if (std::abs(block_det) < 1e-12 * scale) {
        throw SingularityError("Gaussian exponent combination is singular (det(I - BA) = 0)");
    }

    HeatResult out;
    out.r = m.inverse();
    out.exponent = a * out.r;
    out.prefactor = heat(p, out.r * b, hbar);
    out.scale = 1.0 / block_det;
    out.block_det = block_det;
    return out;
}

}  // namespace dq::detail
