#include "hylab/integral_ops.hpp"
#include "hylab/csv.hpp"
#include "hylab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace hylab {

void write_weak_type_csv(const WeakTypeReport& rep, std::ostream& out) {
    CsvWriter w(out);
    w.header({"lambda", "measured", "bound", "ratio"});
    for (std::size_t i = 0; i < rep.lambdas.size(); ++i) {
        const double ratio = rep.bound[i] > 0.0 ? rep.measured[i] / rep.bound[i] : 0.0;
        w.field(rep.lambdas[i]).field(rep.measured[i]).field(rep.bound[i]).field(ratio);
        w.end_row();
    }
}

double poisson_kernel(double x, double y) {
    return y / (M_PI * (x * x + y * y));
}

namespace {

// int_a^b P(x-t, y) dt = (1/pi)(atan((x-a)/y) - atan((x-b)/y))
double poisson_cell(double a, double b, double x, double y) {
    return (std::atan((x - a) / y) - std::atan((x - b) / y)) / M_PI;
}

} // namespace

Complex poisson(const FunctionSpec& u, Complex z, const QuadratureScheme& quad) {
    UpperHalfPlanePoint p(z);
    const double x = p.z.real(), y = p.z.imag();
    if (!u.is_expmono() && quad.rule == QuadratureScheme::Rule::ClosedFormWhenAvailable) {
        Complex acc{0.0, 0.0};
        for (const Cell& c : u.cells()) acc += c.v * poisson_cell(c.a, c.b, x, y);
        return acc;
    }
    // quadrature route; support is [lo, hi] for steps, [0, inf) for exp-monomials
    if (u.is_expmono()) {
        const auto& m = u.expmono();
        QuadResult r = integrate_halfline(
            [&](double t) { return u.eval(t) * poisson_kernel(x - t, y); },
            m.beta.real(), std::abs(m.beta.imag()), quad);
        return r.value;
    }
    QuadResult r = integrate(
        [&](double t) { return u.eval(t) * poisson_kernel(x - t, y); }, u.support_lo(),
        u.support_hi(), quad);
    return r.value;
}

Complex truncated_poisson(const FunctionSpec& u, Complex z, double h) {
    UpperHalfPlanePoint p(z);
    if (!(h > 0.0)) throw Error("truncated_poisson: h > 0 required");
    const double x = p.z.real(), y = p.z.imag();
    // P_h(x - t, y) equals the flat value P(h,y) for |x-t| <= h and the plain
    // kernel outside; exact for step functions
    Complex acc{0.0, 0.0};
    const double flat = poisson_kernel(h, y);
    for (const Cell& c : u.cells()) {
        const double a = c.a, b = c.b;
        // inner region [x-h, x+h]
        const double ia = std::max(a, x - h), ib = std::min(b, x + h);
        if (ib > ia) acc += c.v * flat * (ib - ia);
        // left of the flat window
        const double la = a, lb = std::min(b, x - h);
        if (lb > la) acc += c.v * poisson_cell(la, lb, x, y);
        // right of the flat window
        const double ra = std::max(a, x + h), rb = b;
        if (rb > ra) acc += c.v * poisson_cell(ra, rb, x, y);
    }
    return acc;
}

double envelope_F(double t) {
    if (t < 0.0) throw Error("envelope_F: t >= 0 required");
    // int rho_1 = (2/pi)(pi/2 - atan t + t/(1+t^2))
    return (2.0 / M_PI) * (M_PI / 2.0 - std::atan(t) + t / (1.0 + t * t));
}

Complex hilbert_transform(const FunctionSpec& u, double x) {
    if (u.is_expmono())
        throw UnsupportedFunctionError("hilbert_transform: step functions only");
    for (const Cell& c : u.cells())
        if (x == c.a || x == c.b)
            throw SingularityError("evaluation exactly at a breakpoint of u");
    // (1/pi) sum v [ log|x-a| - log|x-b| ]
    Complex acc{0.0, 0.0};
    for (const Cell& c : u.cells())
        acc += c.v * (std::log(std::abs(x - c.a)) - std::log(std::abs(x - c.b)));
    return acc / M_PI;
}

Complex hilbert_transform_pv(const FunctionSpec& u, double x, double excision) {
    const double lo = u.support_lo(), hi = u.support_hi();
    QuadratureScheme q = QuadratureScheme::adaptive(1e-9);
    q.abs_tol = 1e-12;
    q.max_depth = 52; // the 1/(x-t) ramp next to the excision needs deep bisection
    auto integrand = [&](double t) { return u.eval(t) / (x - t); };
    Complex acc{0.0, 0.0};
    if (x < lo || x > hi) {
        acc = integrate(integrand, lo, hi, q).value;
    } else {
        // symmetric excision (-eps, eps) around the singularity cancels the
        // principal value of the locally constant part
        const double eps = excision;
        if (x - eps > lo) acc += integrate(integrand, lo, x - eps, q).value;
        if (x + eps < hi) acc += integrate(integrand, x + eps, hi, q).value;
    }
    return acc / M_PI;
}

Complex cauchy_integral(const FunctionSpec& u, Complex z) {
    UpperHalfPlanePoint p(z);
    if (u.is_expmono()) {
        const auto& m = u.expmono();
        QuadratureScheme q = QuadratureScheme::adaptive(1e-10);
        QuadResult r = integrate_halfline(
            [&](double t) {
                return u.eval(t) * (Complex(0.0, 1.0) / M_PI) / (p.z - t);
            },
            m.beta.real(), std::abs(m.beta.imag()), q);
        return r.value;
    }
    // (i/pi) int_a^b dt/(z-t) = (i/pi) [log(z-a) - log(z-b)]; Im z > 0 keeps
    // the integration path inside the upper half-plane where the principal
    // branch varies by less than pi
    Complex acc{0.0, 0.0};
    for (const Cell& c : u.cells())
        acc += c.v * (std::log(p.z - c.a) - std::log(p.z - c.b));
    return acc * Complex(0.0, 1.0) / M_PI;
}

double hl_maximal(const FunctionSpec& u, double x, bool centered) {
    if (u.is_expmono())
        throw UnsupportedFunctionError("hl_maximal: step functions only");
    const auto cells = u.cells();
    // |u| mass on [a, b]
    auto mass = [&](double a, double b) {
        double m = 0.0;
        for (const Cell& c : cells) {
            const double lo = std::max(a, c.a), hi = std::min(b, c.b);
            if (hi > lo) m += std::abs(c.v) * (hi - lo);
        }
        return m;
    };
    std::vector<double> endpoints;
    for (const Cell& c : cells) {
        endpoints.push_back(c.a);
        endpoints.push_back(c.b);
    }
    double best = std::abs(u.eval(x)); // the shrinking-interval limit
    if (centered) {
        // averages (mass over [x-a, x+a])/(2a) are monotone between candidate
        // radii |x - e|, so the candidates suffice
        for (double e : endpoints) {
            const double a = std::abs(x - e);
            if (a > 0.0) best = std::max(best, mass(x - a, x + a) / (2.0 * a));
        }
        return best;
    }
    endpoints.push_back(x);
    std::sort(endpoints.begin(), endpoints.end());
    for (std::size_t i = 0; i < endpoints.size(); ++i)
        for (std::size_t j = i + 1; j < endpoints.size(); ++j) {
            const double a = endpoints[i], b = endpoints[j];
            if (!(a <= x && x <= b) || !(b > a)) continue;
            best = std::max(best, mass(a, b) / (b - a));
        }
    return best;
}

WeakTypeReport weak_type_poisson(const FunctionSpec& u, const MeasureSpec& mu,
                                 const ProjectionCertificate& cert,
                                 const WeakTypeOptions& opt) {
    if (!mu.is_arclength())
        throw UnsupportedFunctionError("weak_type_poisson: arclength measures only");
    if (cert.alpha != 0.0)
        throw CertificateError("weak-type bound needs the axis-aligned certificate");
    const double u1 = l1_norm(u);
    const double C = 3.0 * cert.k_xi + cert.k_eta / M_PI;

    // sample |P u| along each piece
    const auto& curve = mu.curve();
    std::vector<std::vector<double>> vals;
    double h_total = 0.0;
    for (const auto& piece : curve.pieces) {
        std::vector<double> pv(opt.samples_per_piece + 1);
        for (int i = 0; i <= opt.samples_per_piece; ++i) {
            const double s = piece.length() * i / opt.samples_per_piece;
            pv[i] = std::abs(poisson(u, piece.point_at(s)));
        }
        vals.push_back(std::move(pv));
        h_total += piece.length();
    }

    // super-level arclength with linear refinement at crossings
    auto superlevel = [&](double lam) {
        double m = 0.0;
        for (std::size_t pi = 0; pi < vals.size(); ++pi) {
            const auto& pv = vals[pi];
            const double h = curve.pieces[pi].length() / opt.samples_per_piece;
            for (std::size_t i = 0; i + 1 < pv.size(); ++i) {
                const double a = pv[i], b = pv[i + 1];
                if (a > lam && b > lam)
                    m += h;
                else if (a > lam || b > lam) {
                    const double frac = std::abs(a - b) > 0 ? (std::max(a, b) - lam) /
                                                                   std::abs(a - b)
                                                             : 0.5;
                    m += h * std::clamp(frac, 0.0, 1.0);
                }
            }
        }
        return m;
    };

    WeakTypeReport rep;
    rep.constant = C;
    double vmax = 0.0;
    for (const auto& pv : vals)
        for (double v : pv) vmax = std::max(vmax, v);
    const double lam_hi = std::max(vmax, 1e-12);
    // the lambda grid is capped below at ||u||_1 / (100 * diam supp mu): the
    // discretized super-level measurement is meaningless past that point
    const double lam_lo = u1 / (100.0 * std::max(h_total, 1e-6));
    for (int i = 0; i < opt.lambda_points; ++i) {
        const double lam =
            lam_lo * std::pow(lam_hi / lam_lo, static_cast<double>(i) / (opt.lambda_points - 1));
        const double m = superlevel(lam);
        rep.lambdas.push_back(lam);
        rep.measured.push_back(m);
        rep.bound.push_back(C * u1 / lam);
        if (m > 0.0) rep.max_ratio = std::max(rep.max_ratio, lam * m / (C * u1));
    }
    return rep;
}

WeakTypeReport weak_type_poisson_comb(const FunctionSpec& u, double b, int n_teeth,
                                      const WeakTypeOptions& opt) {
    const double u1 = l1_norm(u);
    const double C = 2.0 * (1.0 / M_PI + 3.0 * b);
    // teeth n + iy, y in (0,b), n = -n_teeth..n_teeth
    std::vector<std::vector<double>> vals;
    for (int n = -n_teeth; n <= n_teeth; ++n) {
        std::vector<double> pv(opt.samples_per_piece + 1);
        for (int i = 0; i <= opt.samples_per_piece; ++i) {
            const double y = 1e-9 + (b - 2e-9) * i / opt.samples_per_piece;
            pv[i] = std::abs(poisson(u, {static_cast<double>(n), y}));
        }
        vals.push_back(std::move(pv));
    }
    auto superlevel = [&](double lam) {
        double m = 0.0;
        const double h = b / opt.samples_per_piece;
        for (const auto& pv : vals)
            for (std::size_t i = 0; i + 1 < pv.size(); ++i) {
                const double a = pv[i], bb = pv[i + 1];
                if (a > lam && bb > lam)
                    m += h;
                else if (a > lam || bb > lam)
                    m += h * std::clamp((std::max(a, bb) - lam) / std::max(std::abs(a - bb), 1e-300),
                                        0.0, 1.0);
            }
        return m;
    };
    WeakTypeReport rep;
    rep.constant = C;
    const double lam_hi = u1; // |P u| <= ||u||_inf-ish; scan a wide grid
    const double lam_lo = u1 / (100.0 * (2 * n_teeth + 1) * b);
    for (int i = 0; i < opt.lambda_points; ++i) {
        const double lam =
            lam_lo * std::pow(lam_hi / lam_lo, static_cast<double>(i) / (opt.lambda_points - 1));
        const double m = superlevel(lam);
        rep.lambdas.push_back(lam);
        rep.measured.push_back(m);
        rep.bound.push_back(C * u1 / lam);
        if (m > 0.0) rep.max_ratio = std::max(rep.max_ratio, lam * m / (C * u1));
    }
    return rep;
}

double pichorides_constant(double p) {
    if (!(p > 1.0 && p < kInf)) throw ExponentRangeError("Hilbert norm needs 1 < p < inf");
    const double pc = p / (p - 1.0);
    return std::tan(M_PI / 2.0 * std::max(1.0 / p, 1.0 / pc));
}

PoissonCauchyBounds lp_poisson_cauchy_norms(double p, double kx, double ky) {
    if (!(p > 1.0)) throw ExponentRangeError("K3 needs p > 1");
    PoissonCauchyBounds out;
    const double C = 3.0 * kx + ky / M_PI;
    if (p == kInf) {
        out.k3 = 1.0; // sup bound |P u| <= ||u||_inf
        out.k4 = kInf;
        return out;
    }
    const double pc = p / (p - 1.0);
    out.k3 = 2.0 * std::pow(C * pc, 1.0 / p);
    out.k4 = out.k3 * (1.0 + pichorides_constant(p));
    return out;
}

double cauchy_bound_p2(double kx, double ky) { return 4.0 * std::sqrt(6.0 * kx + ky); }

} // namespace hylab
