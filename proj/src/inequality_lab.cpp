#include "hylab/inequality_lab.hpp"
#include "hylab/errors.hpp"
#include "hylab/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace hylab {

namespace ladder {

namespace {
double pow_conj(double base, double p) {
    if (p == 1.0) return 1.0; // 1/p' = 0
    const double pc = p / (p - 1.0);
    return std::pow(base, 1.0 / pc);
}
} // namespace

double k5(double p, double k, double kp, double l, double lp) {
    if (!(p >= 1.0 && p <= 2.0)) throw ExponentRangeError("K5 needs 1 <= p <= 2");
    const double s = std::sqrt(6.0 * k + kp) + std::sqrt(6.0 * l + lp);
    return pow_conj(8.0 * M_PI * s * s, p);
}
double k6(double p) { return pow_conj(224.0 * M_PI, p); }
double k7(double p) { return pow_conj(16.0 * 224.0 * M_PI, p); }
double k8(double p, double lambda) { return pow_conj(32.0 * M_PI * (1.0 + lambda * lambda), p); }
double k8_rot(double p, double lambda) {
    return pow_conj(36.0 * 32.0 * M_PI * (1.0 + lambda * lambda), p);
}
double k9(double p, double c) { return pow_conj(1344.0 * M_PI * (1.0 / c + 2.0), p); }
double k10(double p) { return pow_conj(192.0 * M_PI, p); }
double k11(double p, int nu, double c) {
    if (!(c > 1.0)) throw ExponentRangeError("K11 needs c > 1");
    return pow_conj(18.0 * 8.0 * 24.0 * (std::log(2.0) / std::log(c) + nu + 2.0), p);
}

} // namespace ladder

FunctionSpec random_simple(Rng& rng, int max_steps) {
    const int n = 1 + static_cast<int>(rng.uniform_int(max_steps));
    std::vector<double> breaks;
    double b = rng.uniform(0.2, 1.0);
    breaks.push_back(b);
    for (int i = 0; i < n; ++i) {
        b *= rng.uniform(1.08, 1.9);
        breaks.push_back(b);
    }
    if (breaks.back() > 10.0) {
        const double sc = 10.0 / breaks.back();
        for (double& x : breaks) x *= sc;
    }
    std::vector<Complex> values;
    for (int i = 0; i < n; ++i) {
        const double r = std::sqrt(rng.uniform());
        const double ph = rng.uniform(0.0, 2.0 * M_PI);
        values.push_back(std::polar(r, ph));
    }
    return FunctionSpec(SimpleFunction{std::move(breaks), std::move(values)});
}

VerificationRun master_theorem_check(const FunctionSpec& f, const CompoundCurve& curve,
                                     const ProjectionCertificate& cert_alpha,
                                     const ProjectionCertificate& cert_beta, double p,
                                     std::uint64_t seed) {
    if (!(p >= 1.0 && p <= 2.0)) throw ExponentRangeError("master theorem needs 1 <= p <= 2");
    if (!(cert_alpha.alpha < cert_beta.alpha))
        throw SectorError("sector needs alpha < beta");
    if (cert_alpha.alpha < -M_PI / 2 - 1e-12 || cert_beta.alpha > M_PI / 2 + 1e-12)
        throw SectorError("sector must sit inside [-pi/2, pi/2]");
    // support must lie in the sector alpha <= arg z <= beta
    for (const auto& piece : curve.pieces)
        for (const auto& v : piece.vertices) {
            const double th = std::arg(v);
            if (th < cert_alpha.alpha - 1e-9 || th > cert_beta.alpha + 1e-9)
                throw SectorError("curve leaves the certificate sector");
        }
    const double pc = ExponentPair{p}.conj();
    VerificationRun run;
    run.theorem = "master_sector";
    run.seed = seed;
    run.lhs = laplace_curve_norm(f, curve, pc) / lp_norm(f, p);
    run.rhs = ladder::k5(p, cert_alpha.k_xi, cert_alpha.k_eta, cert_beta.k_xi, cert_beta.k_eta);
    run.margin = run.rhs - run.lhs;
    run.pass = run.lhs <= run.rhs * (1.0 + 1e-9);
    return run;
}

Complex cauchy_sector_representation(const FunctionSpec& f, Complex z, double alpha, double beta,
                                     const QuadratureScheme& quad) {
    if (f.is_expmono())
        throw UnsupportedFunctionError("sector representation implemented for step functions");
    const double th = std::arg(z);
    if (!(alpha < th && th < beta))
        throw SectorError("z must lie strictly inside the sector");
    // integrate (1/2 pi i) (L_b f)(x) e^{ib}/(x e^{ib} - z) dx along both rays;
    // the integrand decays like 1/x^2, so truncate at X and add the analytic
    // 1/x^2 tail whose coefficient is the x -> inf limit of x L f(x), i.e.
    // the value of f at 0+ (all deeper cells decay exponentially on the ray)
    const Complex total_f = f.eval(0.0);
    auto ray_part = [&](double ang) {
        const Complex dir = std::polar(1.0, ang);
        const double X = 4.0e3 * std::max(1.0, std::abs(z));
        QuadratureScheme q = quad.rule == QuadratureScheme::Rule::ClosedFormWhenAvailable
                                 ? QuadratureScheme::adaptive(1e-10)
                                 : quad;
        QuadResult r = integrate_oscillatory(
            [&](double x) {
                return laplace_at(f, x * dir) * dir / (x * dir - z);
            },
            1e-12, X, f.support_hi(), q);
        // tail: L f(x e^{ia}) ~ (sum v)/(x e^{ia}), 1/(x e^{ia} - z) ~ e^{-ia}/x
        const Complex tail = total_f / dir * (1.0 / X);
        return r.value + tail;
    };
    // counterclockwise sector boundary: outward along the alpha ray, back
    // along the beta ray, so the alpha part carries the plus sign
    const Complex upper = ray_part(beta);
    const Complex lower = ray_part(alpha);
    return (lower - upper) / Complex(0.0, 2.0 * M_PI);
}

SlopeReport p_gt_2_counterexample(double p, const std::vector<double>& eps_grid) {
    if (!(p > 2.0 || p == 2.0)) throw ExponentRangeError("counterexample family needs p >= 2");
    SlopeReport rep;
    rep.p = p;
    const double pc = p / (p - 1.0);
    rep.target = 1.0 / p - 1.0 / pc;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double eps : eps_grid) {
        if (!(eps > 0.0 && eps <= 0.2)) throw ExponentRangeError("eps grid must lie in (0, 0.2]");
        const double a = 1.0 / pc + eps;
        // ||u_a||_p = p^{1/p' - a} Gamma(p(a-1)+1)^{1/p}
        const double log_u =
            (1.0 / pc - a) * std::log(p) + std::lgamma(p * (a - 1.0) + 1.0) / p;
        // ||v_a||_{p'} = Gamma(a) (p' a - 1)^{-1/p'}
        const double log_v = std::lgamma(a) - std::log(pc * a - 1.0) / pc;
        const double r = std::exp(log_v - log_u);
        rep.eps.push_back(eps);
        rep.ratio.push_back(r);
        const double x = std::log(eps), y = log_v - log_u;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(eps_grid.size());
    rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return rep;
}

BloomReport bloom_condition_check(const FunctionSpec& w, const std::vector<double>& x_grid) {
    BloomReport rep;
    std::vector<double> xs = x_grid;
    std::sort(xs.begin(), xs.end());
    std::vector<double> vals;
    for (double x : xs) {
        const double v = x * std::abs(laplace_at(w, {x, 0.0}));
        vals.push_back(v);
        if (v > rep.sup_x_lw) {
            rep.sup_x_lw = v;
            rep.argmax = x;
        }
    }
    // growth diagnostic: slope of log(x Lw) vs log x over the decade just
    // above the maximizer (a truncated unbounded weight shows the 1/x wall
    // there, while an admissible weight sits on a plateau)
    double x_lo = rep.argmax * 3.0;
    if (x_lo * 10.0 > xs.back()) x_lo = xs.back() / 10.0;
    int m = 0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < x_lo || xs[i] > x_lo * 10.0) continue;
        const double lx = std::log(xs[i]), ly = std::log(std::max(vals[i], 1e-300));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++m;
    }
    rep.edge_slope = m >= 2 ? (m * sxy - sx * sy) / (m * sxx - sx * sx) : 0.0;
    rep.admissible = rep.edge_slope > -0.1 && std::isfinite(rep.sup_x_lw);
    return rep;
}

CombTightnessReport comb_tightness(double alpha, double beta, double p,
                                   const std::vector<double>& k_values) {
    if (!(alpha >= 1.0)) throw ExponentRangeError("comb spacing needs alpha >= 1");
    if (!(p > 1.0 && p <= 2.0)) throw ExponentRangeError("comb family needs 1 < p <= 2");
    CombTightnessReport rep;
    rep.alpha = alpha;
    rep.beta = beta;
    rep.p = p;
    rep.delta = 1.0 - (beta + 1.0) / alpha;
    const double pc = p / (p - 1.0);

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double k : k_values) {
        const double Ak = std::pow(k * p, 1.0 / p);
        // ||f_k||_p = Ak (pk)^{-1/p} = 1 exactly
        const FunctionSpec fk = FunctionSpec::exp_decay({k, 0.0}, {Ak, 0.0});
        rep.norm_deviation = std::max(rep.norm_deviation, std::abs(lp_norm(fk, p) - 1.0));
        // W(k) = Ak^{p'} int (t+k)^{-p'} (1+t)^delta dt over [0, 100k] plus the
        // power-law tail with its first-order correction
        const double T = 100.0 * std::max(k, 10.0);
        QuadratureScheme q = QuadratureScheme::adaptive(1e-9);
        auto integrand = [&](double t) {
            return Complex(std::pow(t + k, -pc) * std::pow(1.0 + t, rep.delta), 0.0);
        };
        double W = integrate(integrand, 0.0, T, q).value.real();
        // (t+k)^{-p'}(1+t)^d ~ t^{d-p'} (1 + (d - p' k)/t + ...)
        W += std::pow(T, rep.delta - pc + 1.0) / (pc - rep.delta - 1.0) +
             (rep.delta - pc * k) * std::pow(T, rep.delta - pc) / (pc - rep.delta);
        W *= std::pow(Ak, pc);
        rep.k.push_back(k);
        rep.weighted.push_back(W);
        const double x = std::log(k), y = std::log(W);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(k_values.size());
    rep.fitted_exponent = n >= 2 ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;

    // tooth comparability: |L f_k(t)| / |L f_k(a_n + iy)| <= 1 + c with
    // c = sup |Delta t| / t over the teeth geometry a_n = n^alpha, b_n = n^beta
    double worst = 0.0, allowed = 0.0;
    for (double k : k_values)
        for (int n = 2; n <= 12; ++n) {
            const double an = std::pow(n, alpha), an1 = std::pow(n - 1.0, alpha);
            const double bn = std::pow(n, beta);
            for (int iy = 1; iy <= 4; ++iy) {
                const double y = bn * iy / 4.0;
                const double t = an - (an - an1) * y / bn;
                const double num = std::abs(1.0 / Complex(t + k, 0.0));
                const double den = std::abs(1.0 / (Complex(an, y) + k));
                worst = std::max(worst, num / den);
                const double dt = std::abs(Complex(an, y) - t);
                allowed = std::max(allowed, 1.0 + dt / t);
            }
        }
    rep.cond_c_worst = worst;
    rep.cond_c_allowed = allowed;
    return rep;
}

namespace {

// sum_{n > N} phi(n) for smooth decaying phi via the midpoint Euler-Maclaurin
// form: int_{N+1/2}^inf phi + phi'(N+1/2)/24 (phi''' term negligible here).
double em_tail(const std::function<double(double)>& phi, double N, double decay_exponent) {
    // integrate phi over [N+1/2, inf) by mapping s = (N+1/2)/u
    const double S = N + 0.5;
    QuadratureScheme q = QuadratureScheme::adaptive(1e-10);
    q.abs_tol = 1e-14;
    const double I = integrate_real(
        [&](double u) { return phi(S / u) * S / (u * u); }, 1e-8, 1.0, q);
    // numerical derivative for the correction term
    const double h = 1e-4 * S;
    const double dphi = (phi(S + h) - phi(S - h)) / (2.0 * h);
    (void)decay_exponent;
    return I + dphi / 24.0;
}

} // namespace

VertCombReport vertical_comb_identity(const FunctionSpec& f, double b, int N, double tol) {
    if (!f.is_expmono())
        throw UnsupportedFunctionError("comb identity corpus uses exp-monomials");
    const auto& m = f.expmono();
    const double br = m.beta.real(), bi = m.beta.imag();
    const double C2 = std::norm(m.coef) * std::exp(2.0 * std::lgamma(m.alpha));

    // |L f(x+in)|^2 = C2 / ((x+br)^2 + (n+bi)^2)^alpha
    auto tooth = [&](double n) {
        QuadratureScheme q = QuadratureScheme::adaptive(1e-10);
        q.abs_tol = 1e-15;
        return integrate_real(
            [&](double x) {
                const double q2 = (x + br) * (x + br) + (n + bi) * (n + bi);
                return C2 * std::pow(q2, -m.alpha);
            },
            0.0, b, q);
    };
    if (N < 1) throw TruncationError("tooth sum needs N >= 1");
    VertCombReport rep;
    double lhs = 0.0;
    for (int n = -N; n <= N; ++n) lhs += tooth(n);
    // analytic tails on both sides
    rep.tail = em_tail([&](double s) { return tooth(s); }, N, 2.0 * m.alpha) +
               em_tail([&](double s) { return tooth(-s); }, N, 2.0 * m.alpha);
    if (rep.tail > 0.2 * lhs)
        throw TruncationError("truncation too short: tail estimate " + std::to_string(rep.tail) +
                              " against a partial sum of " + std::to_string(lhs));
    lhs += rep.tail;
    rep.lhs = lhs;

    // rhs: 2 pi int_0^b dx int_0^{2pi} |g(x,t)|^2 dt with
    // g(x,t) = sum_m f(t + 2 pi m) e^{-(t + 2 pi m) x}
    auto g = [&](double x, double t) {
        Complex acc{0.0, 0.0};
        for (int mm = 0;; ++mm) {
            const double tm = t + 2.0 * M_PI * mm;
            const Complex term = m.coef * std::pow(tm, m.alpha - 1.0) *
                                 std::exp(-(m.beta + x) * tm);
            acc += term;
            if (std::abs(term) < 1e-17 * (1.0 + std::abs(acc)) && mm > 2) break;
            if (mm > 4000) break;
        }
        return acc;
    };
    QuadratureScheme q = QuadratureScheme::adaptive(1e-9);
    q.abs_tol = 1e-13;
    const double inner_then_outer = integrate_real(
        [&](double x) {
            QuadratureScheme qi = QuadratureScheme::adaptive(1e-9);
            qi.abs_tol = 1e-13;
            return integrate_real(
                [&](double t) { return std::norm(g(x, t)); }, 0.0, 2.0 * M_PI, qi);
        },
        0.0, b, q);
    rep.rhs = 2.0 * M_PI * inner_then_outer;
    rep.residual = std::abs(rep.lhs - rep.rhs) / rep.rhs;
    rep.pass = rep.residual <= tol;

    // Hilbert-route bound 2 pi C(b) ||f||_2^2 with C(b) = pi C1 b / min(1, 2 pi b),
    // C1 = sup_x (1 + 1/x)(1 - e^{-x})
    double C1 = 0.0;
    for (int i = 0; i <= 4000; ++i) {
        const double x = 0.01 + i * 0.01;
        C1 = std::max(C1, (1.0 + 1.0 / x) * (1.0 - std::exp(-x)));
    }
    const double Cb = M_PI * C1 * b / std::min(1.0, 2.0 * M_PI * b);
    const double f2 = lp_norm(f, 2.0);
    rep.hilbert_route_bound = 2.0 * M_PI * Cb * f2 * f2;
    rep.pass = rep.pass && rep.rhs <= rep.hilbert_route_bound * (1.0 + 1e-9);
    return rep;
}

std::vector<double> hilbert_matrix_top_eigenvalues(const std::vector<int>& sizes) {
    std::vector<double> out;
    for (int n : sizes) {
        std::vector<double> v(n, 1.0), w(n);
        double eig = 0.0;
        for (int it = 0; it < 20000; ++it) {
            for (int i = 0; i < n; ++i) {
                double acc = 0.0;
                for (int j = 0; j < n; ++j) acc += v[j] / (i + j + 1.0);
                w[i] = acc;
            }
            double nrm = 0.0;
            for (double x : w) nrm += x * x;
            nrm = std::sqrt(nrm);
            for (int i = 0; i < n; ++i) v[i] = w[i] / nrm;
            if (std::abs(nrm - eig) <= 1e-14 * nrm) {
                eig = nrm;
                break;
            }
            eig = nrm;
        }
        out.push_back(eig);
    }
    return out;
}

double Staircase::level_at(double y) const {
    std::size_t i = 0;
    while (i < y_breaks.size() && y >= y_breaks[i]) ++i;
    return levels[i];
}

namespace {

// coefficient M and exponent e with |L f(x+iy)| <= M / |y|^e for |y| >= Y
std::pair<double, double> vertical_decay_bound(const FunctionSpec& f, double Y) {
    if (f.is_expmono()) {
        const auto& m = f.expmono();
        const double slack = 1.0 / (1.0 - std::abs(m.beta.imag()) / Y);
        return {std::abs(m.coef) * std::exp(std::lgamma(m.alpha)) * std::pow(slack, m.alpha),
                m.alpha};
    }
    double sumv = 0.0;
    for (const Cell& c : f.cells()) sumv += std::abs(c.v);
    return {2.0 * sumv, 1.0};
}

} // namespace

VerificationRun maximal_pw_check(const FunctionSpec& f, double p, const Staircase& b,
                                 std::uint64_t seed) {
    if (!(p > 1.0 && p <= 2.0)) throw ExponentRangeError("maximal bound needs 1 < p <= 2");
    const double pc = ExponentPair{p}.conj();
    // integrate |L f(b(y)+iy)|^{p'} over y in [-Y, Y] piecewise (levels are
    // constant between breakpoints), then add the one-sided decay-tail bound
    // for |y| > Y so the check stays conservative
    const double Y = 2.0e3;
    std::vector<double> cuts{-Y, Y};
    for (double yb : b.y_breaks)
        if (std::abs(yb) < Y) cuts.push_back(yb);
    std::sort(cuts.begin(), cuts.end());
    QuadratureScheme q = QuadratureScheme::adaptive(1e-9);
    q.abs_tol = 1e-13;
    const double tscale = oscillation_scale(f);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double y0 = cuts[i], y1 = cuts[i + 1];
        const double lvl = b.level_at(0.5 * (y0 + y1));
        QuadResult r = integrate_oscillatory(
            [&](double y) {
                return Complex(std::pow(std::abs(laplace_at(f, {lvl, y})), pc), 0.0);
            },
            y0, y1, tscale, q);
        acc += r.value.real();
    }
    const auto [M, e] = vertical_decay_bound(f, Y);
    const double tail = 2.0 * std::pow(M, pc) * std::pow(Y, 1.0 - e * pc) / (e * pc - 1.0);
    acc += tail;

    VerificationRun run;
    run.theorem = "maximal_paley_wiener";
    run.seed = seed;
    run.lhs = std::pow(acc, 1.0 / pc);
    run.rhs = ladder::k10(p) * lp_norm(f, p);
    run.margin = run.rhs - run.lhs;
    run.pass = run.lhs <= run.rhs * (1.0 + 1e-9);
    return run;
}

double paley_wiener_line_integral(const FunctionSpec& f, double x, double p) {
    const double pc = ExponentPair{p}.conj();
    const double Y = 2.0e3;
    QuadratureScheme q = QuadratureScheme::adaptive(1e-9);
    q.abs_tol = 1e-13;
    QuadResult r = integrate_oscillatory(
        [&](double y) {
            return Complex(std::pow(std::abs(laplace_at(f, {x, y})), pc), 0.0);
        },
        -Y, Y, oscillation_scale(f), q);
    const auto [M, e] = vertical_decay_bound(f, Y);
    return r.value.real() + 2.0 * std::pow(M, pc) * std::pow(Y, 1.0 - e * pc) / (e * pc - 1.0);
}

VerificationRun restricted_angular_check(const FunctionSpec& f, const CompoundCurve& curve,
                                         double p, std::uint64_t seed) {
    if (curve.cls.kind != CurveClassKind::Radial)
        throw ClassPreconditionError("restricted angular check needs a radial-class curve");
    const double pc = ExponentPair{p}.conj();
    VerificationRun run;
    run.theorem = "restricted_angular";
    run.seed = seed;
    run.lhs = laplace_curve_norm(f, curve, pc) / lp_norm(f, p);
    run.rhs = ladder::k11(p, curve.cls.nu, curve.cls.c);
    run.margin = run.rhs - run.lhs;
    run.pass = run.lhs <= run.rhs * (1.0 + 1e-9);
    return run;
}

} // namespace hylab
