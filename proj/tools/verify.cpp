#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace dq::verify {

void SuiteResult::check_below(const std::string& metric, double value, double limit) {
    metrics[metric] = std::max(metrics.count(metric) ? metrics[metric] : 0.0, value);
    if (!(value <= limit)) {
        std::ostringstream msg;
        msg << metric << " = " << value << " exceeds " << limit;
        failures.push_back(msg.str());
        passed = false;
    }
}

void SuiteResult::check(bool ok, const std::string& what) {
    if (!ok) {
        failures.push_back(what);
        passed = false;
    }
}

PhasePoly random_poly(std::mt19937_64& rng, Basis basis, int max_degree, int max_terms) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> terms(1, max_terms);
    std::uniform_int_distribution<int> deg(0, max_degree);
    PhasePoly f(basis);
    const int n = terms(rng);
    for (int k = 0; k < n; ++k) {
        const int total = deg(rng);
        std::uniform_int_distribution<int> split(0, total);
        const int x = split(rng);
        f.add_term({x, total - x}, cplx(coef(rng), coef(rng)));
    }
    if (f.is_zero()) f.add_term({1, 0}, cplx(1.0));
    return f;
}

namespace {

constexpr cplx kI{0.0, 1.0};

double relative(const PhasePoly& f, const PhasePoly& g) {
    const double scale = std::max({1.0, f.max_abs_coefficient(), g.max_abs_coefficient()});
    return max_coefficient_difference(f, g) / scale;
}

double relative(const GaussianPoly& f, const GaussianPoly& g) {
    const double scale = std::max({1.0, f.max_abs_coefficient(), g.max_abs_coefficient()});
    return max_coefficient_difference(f, g) / scale;
}

SuiteResult equivalence(const PhysParams&) {
    SuiteResult r;
    r.name = "equivalence";
    std::mt19937_64 rng(1);
    const TransitionOp ts = TransitionOp::standard_to_moyal();
    const TransitionOp tn = TransitionOp::normal_to_moyal();
    for (int k = 0; k < 100; ++k) {
        const PhasePoly f = random_poly(rng, Basis::canonical, 6);
        const PhasePoly g = random_poly(rng, Basis::canonical, 6);
        const PhasePoly lhs = transition_apply(ts, star_poly(f, g, Scheme::standard));
        const PhasePoly rhs = star_poly(transition_apply(ts, f), transition_apply(ts, g), Scheme::moyal);
        r.check_below("standard_max_rel", relative(lhs, rhs), 1e-12);
        r.check_below("standard_roundtrip", relative(transition_apply(ts.inverted(), transition_apply(ts, f)), f), 1e-12);
    }
    for (int k = 0; k < 100; ++k) {
        const PhasePoly f = random_poly(rng, Basis::holomorphic, 6);
        const PhasePoly g = random_poly(rng, Basis::holomorphic, 6);
        const PhasePoly lhs = transition_apply(tn, star_poly(f, g, Scheme::normal));
        const PhasePoly rhs = star_poly(transition_apply(tn, f), transition_apply(tn, g), Scheme::moyal);
        r.check_below("normal_max_rel", relative(lhs, rhs), 1e-12);
    }
    return r;
}

SuiteResult ground_projector(const PhysParams& params) {
    SuiteResult r;
    r.name = "ground-projector";
    const GaussianPoly a(PhasePoly::variable(Var::a), 0.0, params.hbar);
    const GaussianPoly abar(PhasePoly::variable(Var::abar), 0.0, params.hbar);
    const GaussianPoly h = GaussianPoly::polynomial(hamiltonian(params), params);
    for (Scheme s : {Scheme::moyal, Scheme::normal}) {
        const std::string tag(to_string(s));
        const GaussianPoly pi0 = projector(0, s, params);
        r.check_below(tag + "_annihilation", gaussian_star(a, pi0, s).max_abs_coefficient(), 1e-12);
        r.check_below(tag + "_conjugate_annihilation", gaussian_star(pi0, abar, s).max_abs_coefficient(), 1e-12);
        r.check_below(tag + "_normalization", std::abs(phase_space_integral(pi0) - 1.0), 1e-12);
        const double e0 = s == Scheme::moyal ? 0.5 * params.hbar * params.omega : 0.0;
        GaussianPoly res = gaussian_star(h, pi0, s);
        res -= pi0 * cplx(e0);
        r.check_below(tag + "_genvalue", res.max_abs_coefficient(), 1e-12);
    }
    const GaussianPoly moved = transition_apply(TransitionOp::normal_to_moyal(), projector(0, Scheme::normal, params));
    r.check_below("transition_to_moyal", relative(moved, projector(0, Scheme::moyal, params)), 1e-12);

    FockMatrix vac = FockMatrix::Zero(24, 24);
    vac(0, 0) = 1.0;
    const GaussianPoly pi0n = projector(0, Scheme::normal, params);
    double worst = 0.0;
    for (cplx z : {cplx(0.0, 0.0), cplx(0.4, -0.3), cplx(-1.1, 0.5)}) {
        worst = std::max(worst, std::abs(coherent_symbol(vac, z, params).value - pi0n(z, std::conj(z))));
    }
    r.check_below("coherent_symbol", worst, 1e-12);
    return r;
}

SuiteResult idempotency(const PhysParams& params) {
    SuiteResult r;
    r.name = "idempotency";
    for (Scheme s : {Scheme::moyal, Scheme::normal}) {
        const std::string tag(to_string(s));
        std::vector<GaussianPoly> pis;
        for (int n = 0; n <= 5; ++n) pis.push_back(projector(n, s, params));
        for (int n = 0; n <= 5; ++n) {
            r.check_below(tag + "_normalization", std::abs(phase_space_integral(pis[n]) - 1.0), 1e-12);
            for (int m = 0; m <= 5; ++m) {
                const GaussianPoly prod = gaussian_star(pis[n], pis[m], s);
                const double d = n == m ? relative(prod, pis[n]) : prod.max_abs_coefficient();
                r.check_below(tag + "_residual", d, 1e-10);
            }
            const GaussianPoly ladder = projector(n, s, params, ProjectorMethod::ladder);
            r.check_below(tag + "_ladder_vs_closed", relative(ladder, pis[n]), 1e-10);
        }
    }
    return r;
}

SuiteResult weyl_inverse(const PhysParams& params) {
    SuiteResult r;
    r.name = "weyl-inverse";
    const std::vector<double> q = {-1.5, -0.5, 0.0, 0.7, 1.3};
    std::vector<double> p;
    for (double x : q) p.push_back(x * params.m_omega());
    for (int n = 0; n <= 5; ++n) {
        FockMatrix proj = FockMatrix::Zero(40, 40);
        proj(n, n) = 1.0;
        const WeylSymbol w = weyl_symbol(proj, q, p, params);
        const GaussianPoly pin = projector(n, Scheme::moyal, params);
        for (std::size_t i = 0; i < q.size(); ++i) {
            for (std::size_t j = 0; j < p.size(); ++j) {
                r.check_below("projector_symbol", std::abs(w.values(i, j) - pin.at_qp(q[i], p[j], params)), 1e-8);
            }
        }
        r.check(!w.truncated, "weyl symbol flagged truncation");
    }
    for (int m = 0; m <= 5; ++m) {
        for (int n = 0; m + n <= 5; ++n) {
            PhasePoly mono(Basis::canonical);
            mono.add_term({m, n}, cplx(1.0));
            const FockMatrix rec = theta_order(mono, Ordering::weyl, 16, params);
            const FockMatrix brute = weyl_by_enumeration(m, n, 16, params);
            r.check_below("recursion_vs_enumeration", (rec - brute).cwiseAbs().maxCoeff(), 1e-10);
        }
    }
    return r;
}

SuiteResult hermite_laguerre(const PhysParams&) {
    SuiteResult r;
    r.name = "hermite-laguerre";
    for (int n = 0; n <= 6; ++n) {
        for (double a : {0.3, 0.8, 1.4}) {
            for (double b : {0.2, 0.9, 1.5}) {
                const HermiteLaguerre hl = hermite_laguerre_check(n, a, b);
                r.check_below("max_rel", std::abs(hl.lhs - hl.rhs) / std::max(1.0, std::abs(hl.rhs)), 1e-8);
            }
        }
    }
    return r;
}

SuiteResult path_integral(const PhysParams& params) {
    SuiteResult r;
    r.name = "path-integral";
    const double t = 0.5 / params.omega;
    const GaussianKernel exact = mehler_kernel(t, params);
    const double e256 = relative_difference(slice_compose(t, 256, params), exact);
    const double e512 = relative_difference(slice_compose(t, 512, params), exact);
    const double order = std::log2(e256 / e512);
    r.metrics["slice_order"] = order;
    r.check(std::abs(order - 2.0) <= 0.1, "slice convergence order outside 2.0 +- 0.1");
    r.check_below("slice_error_512", e512, 1e-4);
    r.check_below("group_law", relative_difference(compose(mehler_kernel(0.3 * t, params), mehler_kernel(0.7 * t, params)), exact),
                  1e-12);
    for (double wt : {0.3, 1.0, 2.5}) {
        const StarExponential ex(Scheme::moyal, wt / params.omega, params);
        for (int i = -2; i <= 2; ++i) {
            for (int j = -2; j <= 2; ++j) {
                const double q = 0.5 * i * params.length_scale();
                const double p = 0.5 * j * params.momentum_scale();
                const double h = p * p / (2.0 * params.mass) + 0.5 * params.mass * params.omega * params.omega * q * q;
                const cplx want = ex(h);
                r.check_below("kernel_to_phase", std::abs(kernel_to_phase(wt / params.omega, q, p, params) - want) / std::abs(want),
                              1e-5);
            }
        }
    }
    return r;
}

SuiteResult correspondence(const PhysParams&) {
    SuiteResult r;
    r.name = "correspondence";
    std::mt19937_64 rng(2);
    for (Scheme s : {Scheme::moyal, Scheme::standard, Scheme::normal}) {
        const std::string tag(to_string(s));
        const Basis basis = natural_basis(s);
        for (int k = 0; k < 100; ++k) {
            const PhasePoly f = random_poly(rng, basis, 5);
            const PhasePoly g = random_poly(rng, basis, 5);
            const PhasePoly c = star_commutator(f, g, s) * (-kI);
            const PhasePoly pb = poisson_bracket(f, g);
            r.check_below(tag + "_order0", c.hbar_slice(0).max_abs_coefficient(), 0.0);
            r.check_below(tag + "_order1", relative(c.hbar_slice(1), pb), 1e-12);
            if (s == Scheme::moyal) {
                for (int j = 2; j <= c.hbar_degree(); j += 2) {
                    r.check_below("moyal_even_orders", c.hbar_slice(j).max_abs_coefficient(), 0.0);
                }
            }
        }
    }
    return r;
}

SuiteResult associativity(const PhysParams&) {
    SuiteResult r;
    r.name = "associativity";
    std::mt19937_64 rng(3);
    for (Scheme s : {Scheme::moyal, Scheme::standard, Scheme::normal}) {
        const std::string tag(to_string(s));
        const Basis basis = s == Scheme::normal ? Basis::holomorphic : Basis::canonical;
        for (int k = 0; k < 100; ++k) {
            const PhasePoly f = random_poly(rng, basis, 3);
            const PhasePoly g = random_poly(rng, basis, 3);
            const PhasePoly h = random_poly(rng, basis, 3);
            const PhasePoly left = star_poly(star_poly(f, g, s), h, s);
            const PhasePoly right = star_poly(f, star_poly(g, h, s), s);
            r.check_below(tag + "_max_rel", relative(left, right), 1e-12);
        }
    }
    return r;
}

SuiteResult spectrum_suite(const PhysParams& params) {
    SuiteResult r;
    r.name = "spectrum";
    const double hw = params.hbar * params.omega;
    for (Scheme s : {Scheme::moyal, Scheme::normal}) {
        const std::string tag(to_string(s));
        const double zero_point = s == Scheme::moyal ? 0.5 : 0.0;
        for (const SpectralLine& line : spectrum(s, 8, params)) {
            r.check_below(tag + "_energy_error", std::abs(line.energy - (line.n + zero_point) * hw) / hw, 1e-12);
            r.check_below(tag + "_residual", line.residual, 1e-12);
        }
    }
    return r;
}

SuiteResult homomorphism(const PhysParams& params) {
    SuiteResult r;
    r.name = "homomorphism";
    std::mt19937_64 rng(4);
    for (Pairing pairing : {Pairing::weyl_moyal, Pairing::normal_normal, Pairing::standard_star}) {
        const std::string tag(to_string(pairing));
        const Basis basis = pairing == Pairing::normal_normal ? Basis::holomorphic : Basis::canonical;
        for (int k = 0; k < 20; ++k) {
            const PhasePoly f = random_poly(rng, basis, 4);
            const PhasePoly g = random_poly(rng, basis, 4);
            r.check_below(tag + "_residual", homomorphism_residual(f, g, pairing, 32, params), 1e-9);
        }
    }
    return r;
}

SuiteResult marginals(const PhysParams& params) {
    SuiteResult r;
    r.name = "marginals";
    const GridSpec spec = GridSpec::defaults(params);
    const double lq = params.length_scale();
    const double lp = params.momentum_scale();
    for (int n = 0; n <= 5; ++n) {
        const GridFunction w = sample(projector(n, Scheme::moyal, params), spec);
        const Marginal mq = marginal(w, Axis::position);
        const Marginal mp = marginal(w, Axis::momentum);
        for (std::size_t i = 0; i < mq.x.size(); ++i) {
            const double psi = hermite_function(n, mq.x[i] / lq);
            r.check_below("position_max_abs", std::abs(mq.values[i] - psi * psi / lq), 1e-6);
        }
        for (std::size_t j = 0; j < mp.x.size(); ++j) {
            const double psi = hermite_function(n, mp.x[j] / lp);
            r.check_below("momentum_max_abs", std::abs(mp.values[j] - psi * psi / lp), 1e-6);
        }
    }
    const PhaseMoments m = moments(sample(projector(0, Scheme::moyal, params), spec));
    r.check_below("uncertainty_product", std::abs(std::sqrt(m.var_q * m.var_p) - 0.5 * params.hbar), 1e-8);
    return r;
}

SuiteResult star_exponential(const PhysParams& params) {
    SuiteResult r;
    r.name = "star-exponential";
    const double hw = params.hbar * params.omega;
    const double t = 0.3 / params.omega;
    RadialGrid grid;
    grid.h_max = 6.0 * hw;
    const RadialSamples ode = star_exponential_ode(t, grid, params);
    const StarExponential exact(Scheme::moyal, t, params);
    for (std::size_t i = 0; i < ode.h.size(); ++i) {
        const cplx want = exact(ode.h[i]);
        r.check_below("ode_max_rel", std::abs(ode.values[i] - want) / std::abs(want), 1e-6);
    }

    std::vector<double> hs;
    const double dh = 0.05 * hw;
    for (int i = 0; i <= 200; ++i) hs.push_back(i * dh);
    const StarExpFunction fn = closed_form_sampler(Scheme::moyal, params);
    for (int n = 0; n <= 5; ++n) {
        const std::vector<cplx> got = fd_project(fn, (n + 0.5) * hw, hs, params);
        const GaussianPoly pin = projector(n, Scheme::moyal, params);
        double l2 = 0.0;
        for (std::size_t i = 0; i < hs.size(); ++i) {
            const double amp = std::sqrt(hs[i] / params.omega);
            l2 += std::norm(got[i] - pin(amp, amp)) * dh;
        }
        r.check_below("fd_projector_l2", std::sqrt(l2), 1e-8);
    }
    const std::vector<double> lines = discover_lines(fn, 4.0 * hw, hs, params);
    r.check(lines.size() == 4, "expected four lines below 4 hbar omega");
    for (std::size_t n = 0; n < lines.size(); ++n) {
        r.check_below("line_position", std::abs(lines[n] - (n + 0.5) * hw) / hw, 1e-9);
    }
    return r;
}

SuiteResult grid_star(const PhysParams& params) {
    SuiteResult r;
    r.name = "grid-star";
    const GridSpec spec = GridSpec::defaults(params);
    const PhasePoly h = hamiltonian(params);
    const double hw = params.hbar * params.omega;
    for (int n = 0; n <= 3; ++n) {
        const GridFunction pin = sample(projector(n, Scheme::moyal, params), spec);
        const GridFunction hp = grid_star_poly(h, pin);
        const double peak = pin.values.cwiseAbs().maxCoeff();
        r.check_below("genvalue_rel", (hp.values - (n + 0.5) * hw * pin.values).cwiseAbs().maxCoeff() / peak, 1e-7);
    }
    const GridFunction pi0 = sample(projector(0, Scheme::moyal, params), spec);
    r.check_below("annihilation", grid_star_poly(PhasePoly::variable(Var::a), pi0).values.cwiseAbs().maxCoeff(), 1e-7);

    // A pair whose Moyal series converges: mu_f = mu_g = -1.
    const GaussianPoly g1(PhasePoly::constant(1.0, Basis::holomorphic), -1.0, params.hbar);
    const GaussianPoly exact = gaussian_star(g1, g1, Scheme::moyal);
    const GridFunction s1 = sample(g1, spec);
    const SeriesResult series = grid_star_series(s1, s1, 40);
    double worst = 0.0;
    for (int j = 0; j < spec.np; ++j) {
        for (int i = 0; i < spec.nq; ++i) {
            if (std::abs(spec.q(i)) > 1.5 * params.length_scale() || std::abs(spec.p(j)) > 1.5 * params.momentum_scale()) {
                continue;
            }
            worst = std::max(worst, std::abs(series.value.values(i, j) - exact.at_qp(spec.q(i), spec.p(j), params)));
        }
    }
    r.check_below("series_window", worst, 1e-6);
    return r;
}

using SuiteFn = std::function<SuiteResult(const PhysParams&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"equivalence", equivalence},
        {"ground-projector", ground_projector},
        {"idempotency", idempotency},
        {"weyl-inverse", weyl_inverse},
        {"hermite-laguerre", hermite_laguerre},
        {"path-integral", path_integral},
        {"correspondence", correspondence},
        {"associativity", associativity},
        {"spectrum", spectrum_suite},
        {"homomorphism", homomorphism},
        {"marginals", marginals},
        {"star-exponential", star_exponential},
        {"grid-star", grid_star},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteResult run_suite(std::string_view name, const PhysParams& params) {
    params.validate();
    for (const auto& [tag, fn] : registry()) {
        if (tag == name) return fn(params);
    }
    throw DomainError("unknown verify suite '" + std::string(name) + "'");
}

}  // namespace dq::verify
