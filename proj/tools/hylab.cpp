// hylab command-line front end: Laplace-transform evaluation along rays and
// curves, ray-norm spectra, discretized operator norms, well-projectedness
// certificates, the p > 2 counterexample family, and the full verification
// suite runner.

#include "hylab/csv.hpp"
#include "hylab/errors.hpp"
#include "hylab/inequality_lab.hpp"
#include "hylab/integral_ops.hpp"
#include "hylab/json_io.hpp"
#include "hylab/laplace.hpp"
#include "hylab/plot.hpp"
#include "hylab/spectral.hpp"
#include "hylab/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace hylab;

std::string load_arg(const std::string& arg) {
    // inline JSON or @file / bare filename
    if (!arg.empty() && arg.front() == '@') return read_file(arg.substr(1));
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
    return read_file(arg);
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    if (out.empty()) throw ParseError("empty numeric list");
    return out;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw ParseError("cannot open output file: " + path);
    return file;
}

int requested_threads() {
    // HYLAB_THREADS caps worker parallelism; evaluation is sequential and
    // deterministic, which always respects the cap
    if (const char* env = std::getenv("HYLAB_THREADS")) return std::max(1, std::atoi(env));
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hylab: Laplace transforms along rays and curves in the right half-plane,\n"
                 "with exact L2 ray constants, well-projected measure certificates, and\n"
                 "weighted Poisson/Cauchy estimates"};
    app.require_subcommand(1);
    (void)requested_threads();

    // ---- eval ------------------------------------------------------------
    auto* eval = app.add_subcommand(
        "eval", "Evaluate L f at a point, along a ray (Hausdorff-Young setting, exponents\n"
                "1 <= p <= 2), or along a compound curve with arclength weights");
    std::string ev_func, ev_curve, ev_z, ev_out, ev_quad = "closed";
    double ev_theta = 0.0;
    std::string ev_rho;
    int ev_samples = 64;
    eval->add_option("--func", ev_func, "FunctionSpec JSON (inline or filename)")->required();
    eval->add_option("--z", ev_z, "single point re,im");
    eval->add_option("--theta", ev_theta, "ray angle in radians, |theta| <= pi/2");
    eval->add_option("--rho", ev_rho, "comma-separated radii along the ray");
    eval->add_option("--curve", ev_curve, "compound-curve JSON file");
    eval->add_option("--samples", ev_samples, "samples per curve piece");
    eval->add_option("--quad", ev_quad, "closed|adaptive");
    eval->add_option("-o,--output", ev_out, "output CSV path (default stdout)");

    // ---- spectrum ----------------------------------------------------------
    auto* spectrum = app.add_subcommand(
        "spectrum", "Multiplier lambda_tau(theta) = pi e^{2 theta tau}/cosh(pi tau) of the\n"
                    "ray composition operator: closed form against direct quadrature");
    std::string sp_theta = "0", sp_tau = "0", sp_out;
    spectrum->add_option("--theta", sp_theta, "comma-separated angles");
    spectrum->add_option("--tau", sp_tau, "comma-separated frequencies");
    spectrum->add_option("-o,--output", sp_out, "output CSV path");

    // ---- opnorm ------------------------------------------------------------
    auto* opnorm = app.add_subcommand(
        "opnorm", "Largest singular value of the discretized ray composition kernel against\n"
                  "the exact L2 ray-norm square K1(theta)^2");
    double on_theta = 0.0, on_lo = 1e-4, on_hi = 1e4;
    std::string on_n = "64,128,256,512", on_out, on_plot;
    opnorm->add_option("--theta", on_theta, "ray angle");
    opnorm->add_option("--n", on_n, "comma-separated grid sizes");
    opnorm->add_option("--lo", on_lo, "grid lower endpoint");
    opnorm->add_option("--hi", on_hi, "grid upper endpoint");
    opnorm->add_option("-o,--output", on_out, "output CSV path");
    opnorm->add_option("--plot", on_plot, "also emit an SVG convergence chart");

    // ---- certify -----------------------------------------------------------
    auto* certify = app.add_subcommand(
        "certify", "Well-projectedness certificate (monotone/Lipschitz/convex/radial/comb/\n"
                   "boxed class formulas, or empirical adversarial search)");
    std::string cf_curve, cf_class, cf_out;
    double cf_alpha = 0.0, cf_phi = 0.0, cf_c = 0.0, cf_lambda = -1.0;
    int cf_nu = 0;
    bool cf_empirical = false;
    long cf_budget = 2000;
    std::uint64_t cf_seed = 42;
    certify->add_option("--curve", cf_curve, "compound-curve JSON file")->required();
    certify->add_option("--class", cf_class, "override declared class");
    certify->add_option("--alpha", cf_alpha, "rotation angle of the projection frame");
    certify->add_option("--phi", cf_phi, "radial sector aperture");
    certify->add_option("--nu", cf_nu, "run-length parameter");
    certify->add_option("--c", cf_c, "growth/spacing parameter");
    certify->add_option("--lambda", cf_lambda, "Lipschitz constant");
    certify->add_flag("--empirical", cf_empirical, "adversarial search instead of class formula");
    certify->add_option("--budget", cf_budget, "search budget (candidates)");
    certify->add_option("--seed", cf_seed, "search seed");
    certify->add_option("-o,--output", cf_out, "output path (certificate JSON)");

    // ---- counterexample ------------------------------------------------------
    auto* cx = app.add_subcommand(
        "counterexample", "p > 2 failure of the L^p -> L^p' mapping: norm-ratio blow-up along\n"
                          "u_a(t) = t^{a-1} e^{-t}, a = 1/p' + eps");
    double cx_p = 4.0, cx_lo = 1e-4, cx_hi = 1e-2;
    int cx_n = 9;
    std::string cx_out, cx_plot;
    cx->add_option("--p", cx_p, "exponent p > 2");
    cx->add_option("--eps-lo", cx_lo, "smallest eps");
    cx->add_option("--eps-hi", cx_hi, "largest eps");
    cx->add_option("--eps-n", cx_n, "grid size");
    cx->add_option("-o,--output", cx_out, "output CSV path");
    cx->add_option("--plot", cx_plot, "also emit a log-log SVG chart");

    // ---- verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand(
        "verify", "Run the verification suites: exact ray constants, Mellin diagonalization,\n"
                  "well-projected certificates, weak-(1,1) Poisson bounds, the master sector\n"
                  "bound with its curve-class corollaries, the maximal Paley-Wiener bound,\n"
                  "the restricted angular bound, and the vertical-comb identity");
    std::string vf_suite = "all", vf_out;
    std::uint64_t vf_seed = 42;
    verify->add_option("--suite", vf_suite, "all or comma-separated suite names");
    verify->add_option("--seed", vf_seed, "corpus seed");
    verify->add_option("-o,--output", vf_out, "aggregated CSV path (default stdout)");

    // ---- plot -------------------------------------------------------------------
    auto* plot = app.add_subcommand("plot", "Static SVG charts of the named quantities");
    std::string pl_kind = "k1", pl_out = "plot.svg";
    plot->add_option("--kind", pl_kind, "k1 | opnorm | counterexample");
    plot->add_option("-o,--output", pl_out, "output SVG path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval) {
            const FunctionSpec f = function_from_json(load_arg(ev_func));
            QuadratureScheme quad;
            if (ev_quad == "adaptive")
                quad = QuadratureScheme::adaptive();
            else if (ev_quad != "closed")
                throw ParseError("--quad must be closed or adaptive");
            std::ofstream file;
            std::ostream& out = open_output(file, ev_out);
            CsvWriter w(out);
            w.header({"s_or_rho", "re", "im", "abs", "weight"});
            if (!ev_z.empty()) {
                const auto parts = parse_list(ev_z);
                if (parts.size() != 2) throw ParseError("--z needs re,im");
                const Complex v = laplace_at(f, {parts[0], parts[1]}, quad);
                w.field(std::abs(Complex(parts[0], parts[1])))
                    .field(v.real())
                    .field(v.imag())
                    .field(std::abs(v))
                    .field(1.0);
                w.end_row();
            } else if (!ev_curve.empty()) {
                const CompoundCurve curve = curve_from_json(read_file(ev_curve));
                for (const CurveSample& s : laplace_curve(f, curve, ev_samples, quad)) {
                    w.field(s.s)
                        .field(s.value.real())
                        .field(s.value.imag())
                        .field(std::abs(s.value))
                        .field(s.weight);
                    w.end_row();
                }
            } else {
                if (ev_rho.empty()) throw ParseError("eval needs --z, --rho, or --curve");
                for (const RaySample& s : laplace_ray(f, ev_theta, parse_list(ev_rho), quad)) {
                    w.field(s.rho)
                        .field(s.value.real())
                        .field(s.value.imag())
                        .field(std::abs(s.value))
                        .field(0.0);
                    w.end_row();
                }
            }
            return 0;
        }

        if (*spectrum) {
            std::ofstream file;
            std::ostream& out = open_output(file, sp_out);
            CsvWriter w(out);
            w.header({"theta", "tau", "lambda_formula", "lambda_integral_re",
                      "lambda_integral_im"});
            for (double th : parse_list(sp_theta))
                for (double tau : parse_list(sp_tau)) {
                    const Complex I = eigenvalue_by_integral(th, tau);
                    w.field(th)
                        .field(tau)
                        .field(eigenvalue_lambda(th, tau))
                        .field(I.real())
                        .field(I.imag());
                    w.end_row();
                }
            return 0;
        }

        if (*opnorm) {
            std::ofstream file;
            std::ostream& out = open_output(file, on_out);
            CsvWriter w(out);
            w.header({"theta", "n", "sigma_max", "k1_squared"});
            PlotSeries sigma{"sigma_max", {}, {}}, bound{"K1^2", {}, {}};
            for (double dn : parse_list(on_n)) {
                const int n = static_cast<int>(dn);
                const OperatorNormEstimate est =
                    discretized_s_theta_norm(on_theta, n, GridKind::LogTrapezoid, on_lo, on_hi);
                w.field(on_theta).field(n).field(est.sigma_max).field(est.bound);
                w.end_row();
                sigma.x.push_back(n);
                sigma.y.push_back(est.sigma_max);
                bound.x.push_back(n);
                bound.y.push_back(est.bound);
            }
            if (!on_plot.empty()) {
                std::ofstream svg(on_plot, std::ios::binary);
                svg << svg_line_chart("discretized operator norm vs K1^2", {sigma, bound});
            }
            return 0;
        }

        if (*certify) {
            CompoundCurve curve = curve_from_json(read_file(cf_curve));
            if (!cf_class.empty()) {
                // override the declared class from the command line
                const std::string cj = "{\"pieces\":[[[0,0],[1,1]]],\"class\":{\"name\":\"" +
                                       cf_class + "\"}}";
                curve.cls.kind = curve_from_json(cj).cls.kind;
            }
            if (cf_phi > 0.0) curve.cls.phi = cf_phi;
            if (cf_nu > 0) curve.cls.nu = cf_nu;
            if (cf_c > 0.0) curve.cls.c = cf_c;
            if (cf_lambda >= 0.0) curve.cls.lambda = cf_lambda;
            ProjectionCertificate cert;
            if (cf_empirical) {
                SearchBudget budget;
                budget.candidates = cf_budget;
                cert = empirical_certificate(MeasureSpec(MeasureSpec::Arclength{curve}),
                                             cf_alpha, budget, cf_seed);
            } else {
                cert = class_certificate(curve, cf_alpha);
            }
            std::ofstream file;
            std::ostream& out = open_output(file, cf_out);
            out << certificate_to_json(cert) << "\n";
            return 0;
        }

        if (*cx) {
            std::vector<double> eps;
            for (int i = 0; i < cx_n; ++i)
                eps.push_back(cx_lo * std::pow(cx_hi / cx_lo, cx_n > 1 ? i / (cx_n - 1.0) : 0.0));
            const SlopeReport rep = p_gt_2_counterexample(cx_p, eps);
            std::ofstream file;
            std::ostream& out = open_output(file, cx_out);
            CsvWriter w(out);
            w.header({"eps", "ratio", "slope", "target"});
            for (std::size_t i = 0; i < rep.eps.size(); ++i) {
                w.field(rep.eps[i]).field(rep.ratio[i]).field(rep.slope).field(rep.target);
                w.end_row();
            }
            if (!cx_plot.empty()) {
                std::ofstream svg(cx_plot, std::ios::binary);
                svg << svg_line_chart("norm-ratio blow-up, p=" + fmt_g17(cx_p),
                                      {{"ratio", rep.eps, rep.ratio}}, true, true);
            }
            std::cerr << "slope " << fmt_g17(rep.slope) << " target " << fmt_g17(rep.target)
                      << "\n";
            return 0;
        }

        if (*verify) {
            std::vector<std::string> names;
            if (vf_suite != "all") {
                std::stringstream ss(vf_suite);
                std::string item;
                while (std::getline(ss, item, ',')) names.push_back(item);
            }
            std::ofstream file;
            std::ostream& out = open_output(file, vf_out);
            std::vector<SuiteReport> reports;
            const bool ok = run_suites(names, vf_seed, out, std::cerr, &reports);
            if (!ok) {
                std::cerr << "failing checks:\n";
                for (const SuiteReport& rep : reports)
                    for (const CheckRow& row : rep.rows)
                        if (!row.pass) std::cerr << "  " << rep.name << "/" << row.theorem << "\n";
                return 1;
            }
            return 0;
        }

        if (*plot) {
            std::ofstream svg(pl_out, std::ios::binary);
            if (!svg) throw ParseError("cannot open output file: " + pl_out);
            if (pl_kind == "k1") {
                PlotSeries s{"K1(theta)", {}, {}};
                for (int i = 0; i <= 200; ++i) {
                    const double th = (M_PI / 2) * i / 200.0;
                    s.x.push_back(th);
                    s.y.push_back(k1_norm(th));
                }
                svg << svg_line_chart("exact L2 ray norm", {s});
            } else if (pl_kind == "opnorm") {
                PlotSeries s{"sigma_max/K1^2", {}, {}};
                for (int n : {16, 32, 64, 128, 256, 512}) {
                    const auto est = discretized_s_theta_norm(0.0, n);
                    s.x.push_back(n);
                    s.y.push_back(est.sigma_max / est.bound);
                }
                svg << svg_line_chart("operator-norm convergence, theta=0", {s});
            } else if (pl_kind == "counterexample") {
                std::vector<double> eps;
                for (int i = 0; i < 9; ++i) eps.push_back(1e-4 * std::pow(100.0, i / 8.0));
                const SlopeReport rep = p_gt_2_counterexample(4.0, eps);
                svg << svg_line_chart("norm-ratio blow-up, p=4",
                                      {{"ratio", rep.eps, rep.ratio}}, true, true);
            } else {
                throw ParseError("unknown plot kind: " + pl_kind);
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
