#include "json_out.hpp"
#include "verify.hpp"

#include "dq/dq.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using dq::cli::complex_json;
using dq::cli::format_double;
using dq::cli::Json;
using dq::cplx;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

struct Globals {
    double hbar = 1.0;
    double mass = 1.0;
    double omega = 1.0;
    std::string out;
    std::string format;

    dq::PhysParams params() const {
        dq::PhysParams p{hbar, mass, omega};
        p.validate();
        return p;
    }
};

// A command fills the JSON document and, when it has a tabular form, the CSV.
struct Output {
    Json json = Json::object();
    std::string csv;
    std::string default_format = "json";
    bool verify_failed = false;
};

// Thrown for an expression parse error so the caret line can name the flag.
struct ExprError {
    std::string flag;
    std::string text;
    dq::ParseError error;
};

dq::PhasePoly parse_flag(const std::string& flag, const std::string& text) {
    try {
        return dq::parse_expr(text);
    } catch (const dq::ParseError& e) {
        throw ExprError{flag, text, e};
    }
}

Json terms_json(const dq::PhasePoly& f) {
    const bool canon = f.basis() == dq::Basis::canonical;
    Json rows = Json::array();
    for (const auto& [e, c] : f.terms()) {
        for (const auto& [k, v] : c.coefficients()) {
            Json row = Json::object();
            row[canon ? "q" : "a"] = e.x;
            row[canon ? "p" : "abar"] = e.y;
            row["hbar"] = k;
            row["coefficient"] = complex_json(v);
            rows.push_back(row);
        }
    }
    return rows;
}

std::string terms_csv(const dq::PhasePoly& f) {
    const bool canon = f.basis() == dq::Basis::canonical;
    std::ostringstream s;
    s << (canon ? "q,p" : "a,abar") << ",hbar,re,im\n";
    for (const auto& [e, c] : f.terms()) {
        for (const auto& [k, v] : c.coefficients()) {
            s << e.x << ',' << e.y << ',' << k << ',' << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
        }
    }
    return s.str();
}

Json params_json(const dq::PhysParams& p) {
    Json j = Json::object();
    j["hbar"] = p.hbar;
    j["mass"] = p.mass;
    j["omega"] = p.omega;
    return j;
}

dq::GridSpec grid_from(const dq::PhysParams& params, int n, double lq, double lp) {
    dq::GridSpec spec = dq::GridSpec::defaults(params, n);
    if (lq > 0.0) spec.lq = lq;
    if (lp > 0.0) spec.lp = lp;
    spec.validate();
    return spec;
}

void emit(const Output& out, const Globals& g) {
    const std::string format = g.format.empty() ? out.default_format : g.format;
    std::string text;
    if (format == "csv") {
        if (out.csv.empty()) throw dq::UnsupportedError("this command has no CSV form; use --format json");
        text = out.csv;
    } else {
        text = dq::cli::dump(out.json);
    }
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(g.out, std::ios::binary);
    if (!file) throw dq::DomainError("cannot open output file '" + g.out + "'");
    file << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deformation quantization toolkit: star products, oscillator spectra, Wigner data and propagators."};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--hbar", g.hbar, "Reduced Planck constant")->envname("DQ_HBAR")->check(CLI::PositiveNumber);
    app.add_option("--mass", g.mass, "Oscillator mass")->envname("DQ_MASS")->check(CLI::PositiveNumber);
    app.add_option("--omega", g.omega, "Oscillator frequency")->envname("DQ_OMEGA")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "Write output to this file instead of stdout");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    Output out;
    std::function<void()> action;

    // star
    std::string f_text, g_text, scheme_name = "moyal";
    auto* star = app.add_subcommand("star", "Star product of two polynomials");
    star->add_option("--f", f_text, "Left operand, e.g. \"q^2*p\"")->required();
    star->add_option("--g", g_text, "Right operand")->required();
    star->add_option("--scheme", scheme_name, "moyal | standard | normal")->check(CLI::IsMember({"moyal", "standard", "normal"}));
    star->callback([&] {
        action = [&] {
            const dq::PhysParams params = g.params();
            const dq::PhasePoly f = parse_flag("--f", f_text);
            const dq::PhasePoly gg = parse_flag("--g", g_text);
            const dq::PhasePoly r = dq::star_poly(f, gg, dq::parse_scheme(scheme_name), params);
            out.json["scheme"] = scheme_name;
            out.json["f"] = dq::to_string(f);
            out.json["g"] = dq::to_string(gg);
            out.json["basis"] = std::string(dq::to_string(r.basis()));
            out.json["result"] = dq::to_string(r);
            out.json["terms"] = terms_json(r);
            out.csv = terms_csv(r);
        };
    });

    // spectrum
    int n_max = 8;
    std::string spec_scheme = "moyal";
    auto* spectrum = app.add_subcommand("spectrum", "Oscillator spectrum from the star-genvalue equation");
    spectrum->add_option("--scheme", spec_scheme, "moyal | normal")->check(CLI::IsMember({"moyal", "normal"}));
    spectrum->add_option("--n-max", n_max, "Highest level")->check(CLI::NonNegativeNumber);
    spectrum->callback([&] {
        action = [&] {
            const dq::PhysParams params = g.params();
            Json rows = Json::array();
            std::ostringstream csv;
            csv << "n,energy,residual_norm\n";
            for (const dq::SpectralLine& line : dq::spectrum(dq::parse_scheme(spec_scheme), n_max, params)) {
                Json row = Json::object();
                row["n"] = line.n;
                row["energy"] = line.energy;
                row["residual_norm"] = line.residual;
                rows.push_back(row);
                csv << line.n << ',' << format_double(line.energy) << ',' << format_double(line.residual) << '\n';
            }
            out.json["scheme"] = spec_scheme;
            out.json["params"] = params_json(params);
            out.json["lines"] = rows;
            out.csv = csv.str();
        };
    });

    // projector
    int proj_n = 0;
    std::string proj_scheme = "moyal", proj_method = "closed";
    auto* proj = app.add_subcommand("projector", "Oscillator projector pi_n as prefactor * exp(mu a abar / hbar)");
    proj->add_option("--n", proj_n, "Level")->required();
    proj->add_option("--scheme", proj_scheme, "moyal | normal")->check(CLI::IsMember({"moyal", "normal"}));
    proj->add_option("--method", proj_method, "closed | ladder")->check(CLI::IsMember({"closed", "ladder"}));
    proj->callback([&] {
        action = [&] {
            const dq::PhysParams params = g.params();
            const auto method = proj_method == "ladder" ? dq::ProjectorMethod::ladder : dq::ProjectorMethod::closed;
            const dq::GaussianPoly pi = dq::projector(proj_n, dq::parse_scheme(proj_scheme), params, method);
            out.json["n"] = proj_n;
            out.json["scheme"] = proj_scheme;
            out.json["method"] = proj_method;
            out.json["mu"] = complex_json(pi.mu());
            out.json["prefactor"] = dq::to_string(pi.prefactor());
            out.json["terms"] = terms_json(pi.prefactor());
            out.json["normalization"] = complex_json(dq::phase_space_integral(pi));
            out.csv = terms_csv(pi.prefactor());
        };
    });

    // wigner
    int wig_n = 0, grid_n = 256;
    double grid_lq = 0.0, grid_lp = 0.0;
    auto* wigner = app.add_subcommand("wigner", "Moyal projector pi_n sampled on the (q, p) grid");
    wigner->add_option("--n", wig_n, "Level")->required();
    wigner->add_option("--grid-n", grid_n, "Points per axis (power of two)");
    wigner->add_option("--lq", grid_lq, "Half-extent in q (default 8 length scales)");
    wigner->add_option("--lp", grid_lp, "Half-extent in p (default 8 momentum scales)");
    wigner->callback([&] {
        action = [&] {
            const dq::PhysParams params = g.params();
            const dq::GridSpec spec = grid_from(params, grid_n, grid_lq, grid_lp);
            const dq::GridFunction w = dq::sample(dq::projector(wig_n, dq::Scheme::moyal, params), spec);
            std::ostringstream csv;
            csv << "q,p,re,im\n";
            Json values = Json::array();
            for (int i = 0; i < spec.nq; ++i) {
                for (int j = 0; j < spec.np; ++j) {
                    const cplx v = w.values(i, j);
                    csv << format_double(spec.q(i)) << ',' << format_double(spec.p(j)) << ',' << format_double(v.real())
                        << ',' << format_double(v.imag()) << '\n';
                    Json row = Json::array({spec.q(i), spec.p(j), v.real(), v.imag()});
                    values.push_back(row);
                }
            }
            out.default_format = "csv";
            out.csv = csv.str();
            out.json["n"] = wig_n;
            out.json["params"] = params_json(params);
            out.json["columns"] = Json::array({"q", "p", "re", "im"});
            out.json["values"] = values;
        };
    });

    // marginal
    int marg_n = 0;
    std::string axis = "q";
    auto* marg = app.add_subcommand("marginal", "Position (--axis q) or momentum (--axis p) distribution of pi_n");
    marg->add_option("--n", marg_n, "Level")->required();
    marg->add_option("--axis", axis, "Variable kept: q gives |psi(q)|^2, p gives |psi(p)|^2")
        ->check(CLI::IsMember({"q", "p"}));
    marg->add_option("--grid-n", grid_n, "Points per axis (power of two)");
    marg->callback([&] {
        action = [&] {
            const dq::PhysParams params = g.params();
            const dq::GridSpec spec = grid_from(params, grid_n, 0.0, 0.0);
            const dq::GridFunction w = dq::sample(dq::projector(marg_n, dq::Scheme::moyal, params), spec);
            const dq::Marginal m = dq::marginal(w, axis == "q" ? dq::Axis::position : dq::Axis::momentum);
            std::ostringstream csv;
            csv << "x,value\n";
            Json rows = Json::array();
            for (std::size_t i = 0; i < m.x.size(); ++i) {
                csv << format_double(m.x[i]) << ',' << format_double(m.values[i].real()) << '\n';
                rows.push_back(Json::array({m.x[i], m.values[i].real()}));
            }
            out.default_format = "csv";
            out.csv = csv.str();
            out.json["n"] = marg_n;
            out.json["axis"] = axis;
            out.json["columns"] = Json::array({"x", "value"});
            out.json["values"] = rows;
        };
    });

    // evolve
    double ev_t = 0.3, ev_hmax = 6.0;
    int ev_points = 2048;
    std::string ev_method = "closed", ev_scheme = "moyal";
    auto* evolve = app.add_subcommand("evolve", "Star exponential Exp(Ht) as a function of H");
    evolve->add_option("--t", ev_t, "Time");
    evolve->add_option("--method", ev_method, "closed | ode")->check(CLI::IsMember({"closed", "ode"}));
    evolve->add_option("--scheme", ev_scheme, "moyal | normal (closed form only)")->check(CLI::IsMember({"moyal", "normal"}));
    evolve->add_option("--h-max", ev_hmax, "Largest H value")->check(CLI::PositiveNumber);
    evolve->add_option("--points", ev_points, "Radial grid points")->check(CLI::Range(8, 1 << 20));
    evolve->callback([&] {
        action = [&] {
            const dq::PhysParams params = g.params();
            std::vector<double> hs;
            std::vector<cplx> vals;
            if (ev_method == "ode") {
                if (ev_scheme != "moyal") throw dq::UnsupportedError("the ODE integrator solves the Moyal equation");
                dq::RadialGrid grid;
                grid.h_max = ev_hmax;
                grid.points = ev_points;
                const dq::RadialSamples s = dq::star_exponential_ode(ev_t, grid, params);
                hs = s.h;
                vals = s.values;
            } else {
                const dq::StarExponential ex(dq::parse_scheme(ev_scheme), ev_t, params);
                for (int i = 0; i <= ev_points; ++i) {
                    hs.push_back(ev_hmax * i / ev_points);
                    vals.push_back(ex(hs.back()));
                }
            }
            std::ostringstream csv;
            csv << "h,re,im\n";
            Json rows = Json::array();
            for (std::size_t i = 0; i < hs.size(); ++i) {
                csv << format_double(hs[i]) << ',' << format_double(vals[i].real()) << ',' << format_double(vals[i].imag())
                    << '\n';
                rows.push_back(Json::array({hs[i], vals[i].real(), vals[i].imag()}));
            }
            out.csv = csv.str();
            out.json["t"] = ev_t;
            out.json["method"] = ev_method;
            out.json["scheme"] = ev_scheme;
            out.json["columns"] = Json::array({"h", "re", "im"});
            out.json["values"] = rows;
        };
    });

    // kernel
    double k_t = 0.5, k_q1 = 0.0, k_q2 = 0.0, k_damping = 0.0;
    int k_slices = 512, k_nmax = 200;
    std::string k_method = "mehler", k_rule = "trapezoid";
    auto* kernel = app.add_subcommand("kernel", "Oscillator propagator <q2|exp(-iHt/hbar)|q1>");
    kernel->add_option("--t", k_t, "Time");
    kernel->add_option("--method", k_method, "mehler | slices | eigen")->check(CLI::IsMember({"mehler", "slices", "eigen"}));
    kernel->add_option("--slices", k_slices, "Number of short-time slices")->check(CLI::Range(2, 1 << 24));
    kernel->add_option("--rule", k_rule, "Slice potential rule: trapezoid | midpoint | free")
        ->check(CLI::IsMember({"trapezoid", "midpoint", "free"}));
    kernel->add_option("--n-max", k_nmax, "Eigenfunction sum cutoff")->check(CLI::NonNegativeNumber);
    kernel->add_option("--q1", k_q1, "Initial position (eigen method)");
    kernel->add_option("--q2", k_q2, "Final position (eigen method)");
    kernel->add_option("--damping", k_damping, "Evaluate at t - i*damping (eigen method)")->check(CLI::NonNegativeNumber);
    kernel->callback([&] {
        action = [&] {
            const dq::PhysParams params = g.params();
            const cplx t(k_t, -k_damping);
            const dq::GaussianKernel exact = dq::mehler_kernel(t, params);
            auto coeffs = [](const dq::GaussianKernel& k) {
                Json j = Json::object();
                j["A"] = complex_json(k.a);
                j["B"] = complex_json(k.b);
                j["C"] = complex_json(k.c);
                j["n0"] = complex_json(k.n0);
                return j;
            };
            out.json["t"] = complex_json(t);
            out.json["method"] = k_method;
            out.json["mehler"] = coeffs(exact);
            if (k_method == "slices") {
                if (k_damping != 0.0) throw dq::UnsupportedError("slice composition takes a real time");
                const dq::SliceRule rule = k_rule == "midpoint" ? dq::SliceRule::midpoint
                                          : k_rule == "free"   ? dq::SliceRule::free
                                                               : dq::SliceRule::trapezoid;
                const dq::GaussianKernel s = dq::slice_compose(k_t, k_slices, params, rule);
                out.json["slices"] = k_slices;
                out.json["rule"] = k_rule;
                out.json["composed"] = coeffs(s);
                out.json["relative_difference"] = dq::relative_difference(s, exact);
            } else if (k_method == "eigen") {
                const dq::EigenKernelSum e = dq::eigenfunction_kernel(t, k_nmax, k_q1, k_q2, params);
                const cplx want = exact(k_q2, k_q1);
                out.json["n_max"] = k_nmax;
                out.json["q1"] = k_q1;
                out.json["q2"] = k_q2;
                out.json["value"] = complex_json(e.value);
                out.json["last_term"] = e.last_term;
                out.json["mehler_value"] = complex_json(want);
                out.json["relative_difference"] = std::abs(e.value - want) / std::abs(want);
            }
        };
    });

    // weyl
    std::string w_ordering = "weyl", w_expr = "q*p";
    int w_dim = 8;
    auto* weyl = app.add_subcommand("weyl", "Operator image Theta(f) in the truncated number basis");
    weyl->add_option("--f", w_expr, "Phase-space polynomial");
    weyl->add_option("--ordering", w_ordering, "weyl | standard | antistandard | normal | antinormal")
        ->check(CLI::IsMember({"weyl", "standard", "antistandard", "normal", "antinormal"}));
    weyl->add_option("--dim", w_dim, "Basis size")->check(CLI::Range(1, 4096));
    weyl->callback([&] {
        action = [&] {
            const dq::PhysParams params = g.params();
            const dq::PhasePoly f = parse_flag("--f", w_expr);
            const dq::FockMatrix m = dq::theta_order(f, dq::parse_ordering(w_ordering), w_dim, params);
            std::ostringstream csv;
            csv << "row,col,re,im\n";
            Json rows = Json::array();
            for (Eigen::Index i = 0; i < m.rows(); ++i) {
                Json row = Json::array();
                for (Eigen::Index j = 0; j < m.cols(); ++j) {
                    row.push_back(complex_json(m(i, j)));
                    csv << i << ',' << j << ',' << format_double(m(i, j).real()) << ',' << format_double(m(i, j).imag())
                        << '\n';
                }
                rows.push_back(row);
            }
            out.csv = csv.str();
            out.json["f"] = dq::to_string(f);
            out.json["ordering"] = w_ordering;
            out.json["dim"] = w_dim;
            out.json["matrix"] = rows;
        };
    });

    // bridge
    double b_t = 0.5;
    int b_points = 5;
    auto* bridge = app.add_subcommand("bridge", "Weyl transform of the Mehler kernel against the closed-form star exponential");
    bridge->add_option("--t", b_t, "Time");
    bridge->add_option("--points", b_points, "Samples per axis over [-1, 1] natural units")->check(CLI::Range(1, 1000));
    bridge->callback([&] {
        action = [&] {
            const dq::PhysParams params = g.params();
            const dq::StarExponential ex(dq::Scheme::moyal, b_t, params);
            Json rows = Json::array();
            std::ostringstream csv;
            csv << "q,p,kernel_re,kernel_im,closed_re,closed_im\n";
            double worst = 0.0;
            for (int i = 0; i < b_points; ++i) {
                for (int j = 0; j < b_points; ++j) {
                    const double u = b_points == 1 ? 0.0 : -1.0 + 2.0 * i / (b_points - 1);
                    const double v = b_points == 1 ? 0.0 : -1.0 + 2.0 * j / (b_points - 1);
                    const double q = u * params.length_scale();
                    const double p = v * params.momentum_scale();
                    const double h = p * p / (2.0 * params.mass) + 0.5 * params.mass * params.omega * params.omega * q * q;
                    const cplx k = dq::kernel_to_phase(b_t, q, p, params);
                    const cplx c = ex(h);
                    worst = std::max(worst, std::abs(k - c) / std::abs(c));
                    Json row = Json::object();
                    row["q"] = q;
                    row["p"] = p;
                    row["kernel"] = complex_json(k);
                    row["closed_form"] = complex_json(c);
                    rows.push_back(row);
                    csv << format_double(q) << ',' << format_double(p) << ',' << format_double(k.real()) << ','
                        << format_double(k.imag()) << ',' << format_double(c.real()) << ',' << format_double(c.imag())
                        << '\n';
                }
            }
            out.csv = csv.str();
            out.json["t"] = b_t;
            out.json["samples"] = rows;
            out.json["max_relative_difference"] = worst;
        };
    });

    // verify
    std::string suite = "all";
    std::vector<std::string> suite_choices = dq::verify::suite_names();
    suite_choices.push_back("all");
    auto* verify = app.add_subcommand("verify", "Run invariant suites and report pass/fail");
    verify->add_option("--suite", suite, "Suite tag or 'all'")->check(CLI::IsMember(suite_choices));
    verify->callback([&] {
        action = [&] {
            const dq::PhysParams params = g.params();
            std::vector<std::string> names;
            if (suite == "all") {
                names = dq::verify::suite_names();
            } else {
                names.push_back(suite);
            }
            Json rows = Json::array();
            bool all_passed = true;
            for (const std::string& name : names) {
                const auto start = std::chrono::steady_clock::now();
                Json row = Json::object();
                row["suite"] = name;
                try {
                    const dq::verify::SuiteResult r = dq::verify::run_suite(name, params);
                    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                    row["passed"] = r.passed;
                    row["seconds"] = secs;
                    Json metrics = Json::object();
                    for (const auto& [k, v] : r.metrics) metrics[k] = v;
                    row["metrics"] = metrics;
                    row["failures"] = r.failures;
                    all_passed = all_passed && r.passed;
                } catch (const dq::Error& e) {
                    row["passed"] = false;
                    row["error"] = e.what();
                    all_passed = false;
                }
                std::cerr << (row["passed"].get<bool>() ? "PASS " : "FAIL ") << name << '\n';
                rows.push_back(row);
            }
            out.json["params"] = params_json(params);
            out.json["suites"] = rows;
            out.json["passed"] = all_passed;
            out.verify_failed = !all_passed;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        action();
        emit(out, g);
    } catch (const ExprError& e) {
        std::cerr << "error: " << e.flag << ": " << e.error.what() << '\n'
                  << "  " << e.text << '\n'
                  << "  " << std::string(e.error.position(), ' ') << "^\n";
        return kExitUsage;
    } catch (const dq::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const dq::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitComputation;
    }
    return out.verify_failed ? kExitVerifyFailed : 0;
}
