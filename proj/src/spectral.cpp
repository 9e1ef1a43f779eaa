#include "hylab/spectral.hpp"
#include "hylab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace hylab {

double eigenvalue_lambda(double theta, double tau) {
    // pi e^{2 theta tau} / cosh(pi tau), written via exponentials so the
    // e^{2 theta tau} growth and the cosh growth cancel before overflow
    const double a = 2.0 * theta * tau;
    const double pt = M_PI * tau;
    // cosh(pt) = (e^{|pt|}/2)(1 + e^{-2|pt|})
    const double lg = a - std::abs(pt) + std::log(2.0 / (1.0 + std::exp(-2.0 * std::abs(pt))));
    return M_PI * std::exp(lg);
}

Complex eigenvalue_by_integral(double theta, double tau, const QuadratureScheme& quad) {
    if (std::abs(theta) >= M_PI / 2)
        throw MethodNotApplicableError("integral form needs |theta| < pi/2");
    const Complex w = std::polar(1.0, theta);
    const Complex wc = std::conj(w);
    // substitute y = e^v: integrand e^{(1/2 + i tau) v} / (conj(w) + w e^v)
    QuadratureScheme q = quad.rule == QuadratureScheme::Rule::ClosedFormWhenAvailable
                             ? QuadratureScheme::adaptive(1e-11)
                             : quad;
    QuadResult r = integrate_line(
        [&](double v) {
            return std::exp(Complex(0.5 * v, tau * v)) / (wc + w * std::exp(v));
        },
        0.5, std::abs(tau), q);
    return r.value;
}

double k1_norm(double theta) {
    const double mu = std::abs(theta) / (M_PI / 2.0);
    if (mu > 1.0 + 1e-12) throw MethodNotApplicableError("k1_norm needs |theta| <= pi/2");
    if (mu >= 1.0) return std::sqrt(2.0 * M_PI);
    return std::sqrt(M_PI) * std::pow(1.0 - mu, (1.0 - mu) / 4.0) *
           std::pow(1.0 + mu, (1.0 + mu) / 4.0);
}

EigenReport lambda_maximizer(double theta) {
    if (std::abs(theta) >= M_PI / 2)
        throw MethodNotApplicableError("maximizer formula needs |theta| < pi/2");
    const double mu = 2.0 * theta / M_PI; // signed: tanh(pi tau*) = 2 theta / pi
    const double clamped = std::clamp(mu, -(1.0 - 1e-12), 1.0 - 1e-12);
    EigenReport rep;
    rep.tau_star = 0.5 * std::log((1.0 + clamped) / (1.0 - clamped)) / M_PI;
    rep.lambda_max = eigenvalue_lambda(theta, rep.tau_star);
    return rep;
}

OperatorNormEstimate discretized_s_theta_norm(double theta, int n, GridKind kind, double lo,
                                              double hi) {
    if (n < 2) throw Error("discretized norm needs n >= 2");
    if (kind != GridKind::LogTrapezoid) throw Error("unknown grid kind");
    const Complex w = std::polar(1.0, theta);
    const Complex wc = std::conj(w);

    std::vector<double> x(n), sqw(n);
    const double v0 = std::log(lo), v1 = std::log(hi);
    const double h = (v1 - v0) / (n - 1);
    for (int i = 0; i < n; ++i) {
        x[i] = std::exp(v0 + h * i);
        const double wi = ((i == 0 || i == n - 1) ? 0.5 * h : h) * x[i];
        sqw[i] = std::sqrt(wi);
    }
    std::vector<Complex> A(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            A[static_cast<std::size_t>(i) * n + j] = sqw[i] * sqw[j] / (x[i] * wc + x[j] * w);

    // power iteration on A^H A (A is Hermitian, so this is A^2)
    std::vector<Complex> v(n, Complex{1.0, 0.0}), Av(n);
    auto matvec = [&](const std::vector<Complex>& in, std::vector<Complex>& out, bool adj) {
        for (int i = 0; i < n; ++i) {
            Complex acc{0.0, 0.0};
            const Complex* row = &A[static_cast<std::size_t>(i) * n];
            if (!adj)
                for (int j = 0; j < n; ++j) acc += row[j] * in[j];
            else
                for (int j = 0; j < n; ++j) acc += std::conj(A[static_cast<std::size_t>(j) * n + i]) * in[j];
            out[i] = acc;
        }
    };
    double sigma = 0.0, prev = -1.0;
    int it = 0;
    const int max_it = 20000;
    std::vector<Complex> tmp(n);
    for (; it < max_it; ++it) {
        matvec(v, Av, false);
        matvec(Av, tmp, true);
        double nrm = 0.0;
        for (const Complex& c : tmp) nrm += std::norm(c);
        nrm = std::sqrt(nrm);
        if (!(nrm > 0.0)) throw LinearAlgebraError("power iteration collapsed to zero");
        for (int i = 0; i < n; ++i) v[i] = tmp[i] / nrm;
        sigma = std::sqrt(nrm); // ||A^H A v|| with unit v converges to sigma_max^2
        if (prev >= 0.0 && std::abs(sigma - prev) <= 1e-10 * sigma) break;
        prev = sigma;
    }
    OperatorNormEstimate est;
    est.n = n;
    est.sigma_max = sigma;
    est.bound = k1_norm(theta) * k1_norm(theta);
    est.iterations = it;
    est.converged = it < max_it;
    est.lo = lo;
    est.hi = hi;
    return est;
}

namespace {

void require_compact_step(const FunctionSpec& f, const char* who) {
    if (f.is_expmono() || !f.compactly_supported())
        throw UnsupportedFunctionError(std::string(who) + ": needs compact support (step function)");
    if (f.support_lo() <= 0.0)
        throw UnsupportedFunctionError(std::string(who) + ": support must stay inside (0, inf)");
}

} // namespace

std::vector<Complex> mellin_transform(const FunctionSpec& f, const std::vector<double>& taus) {
    require_compact_step(f, "mellin_transform");
    const double norm = 1.0 / std::sqrt(2.0 * M_PI);
    std::vector<Complex> out;
    out.reserve(taus.size());
    for (double tau : taus) {
        const Complex s{0.5, -tau}; // exponent of the antiderivative x^s / s
        Complex acc{0.0, 0.0};
        for (const Cell& c : f.cells())
            acc += c.v * (std::pow(Complex(c.b, 0.0), s) - std::pow(Complex(c.a, 0.0), s)) / s;
        out.push_back(acc * norm);
    }
    return out;
}

double mellin_squared_norm(const FunctionSpec& f, double T) {
    require_compact_step(f, "mellin_squared_norm");

    // bulk: adaptive over [-T, T]; the integrand oscillates with frequencies
    // up to log(b_max / a_min)
    const auto cells = f.cells();
    const double lnspread = std::log(f.support_hi() / f.support_lo());
    QuadratureScheme q = QuadratureScheme::adaptive(1e-10);
    q.abs_tol = 1e-12;
    QuadResult bulk = integrate_oscillatory(
        [&](double tau) {
            const Complex s{0.5, -tau};
            Complex acc{0.0, 0.0};
            for (const Cell& c : cells)
                acc += c.v *
                       (std::pow(Complex(c.b, 0.0), s) - std::pow(Complex(c.a, 0.0), s)) / s;
            return Complex(std::norm(acc) / (2.0 * M_PI), 0.0);
        },
        -T, T, lnspread, q);

    // tail: |f~(tau)|^2 = (2pi)^-1 sum_{j,k} A_jk e^{-i tau D_jk} / (1/4 + tau^2)
    // with points p = breakpoints, coefficients q = +-cell values; each term
    // integrates against h = 1/(1/4+tau^2) by parts, three levels deep
    struct Term {
        double p;
        Complex q;
    };
    std::vector<Term> ts;
    for (const Cell& c : cells) {
        ts.push_back({c.b, c.v});
        ts.push_back({c.a, -c.v});
    }
    auto hderiv = [](int k, double t) {
        // h = 1/(1/4 + t^2) = (1/i) [ (t - i/2)^{-1} - (t + i/2)^{-1} ]
        const Complex a = std::pow(Complex(t, -0.5), -(k + 1.0));
        const Complex b = std::pow(Complex(t, 0.5), -(k + 1.0));
        double fact = 1.0;
        for (int j = 2; j <= k; ++j) fact *= j;
        const Complex val = (a - b) / Complex(0.0, 1.0) * (k % 2 ? -fact : fact);
        return val.real();
    };
    auto tail_term = [&](double D) {
        if (D < 1e-14) {
            // int_{|tau|>T} h dtau = 2 (pi - 2 atan(2T)) / 2 per side
            return 2.0 * (M_PI - 2.0 * std::atan(2.0 * T));
        }
        // I(h) = -sin(DT) h(T)/D - cos(DT) h'(T)/D^2 - I(h'')/D^2, recursed
        double val = 0.0, scale = 1.0;
        const double s = std::sin(D * T), c = std::cos(D * T);
        for (int level = 0; level < 3; ++level) {
            val += scale * (-s * hderiv(2 * level, T) / D - c * hderiv(2 * level + 1, T) / (D * D));
            scale *= -1.0 / (D * D);
        }
        return 2.0 * val; // two-sided: integrand even in tau after pairing
    };
    double tail = 0.0;
    for (const Term& tj : ts)
        for (const Term& tk : ts) {
            const double A = (tj.q * std::conj(tk.q)).real() * std::sqrt(tj.p * tk.p);
            if (A == 0.0) continue;
            tail += A * tail_term(std::abs(std::log(tj.p / tk.p)));
        }
    tail /= 2.0 * M_PI;
    return bulk.value.real() + tail;
}

namespace {

// log(1 + w) without cancellation for small |w|
Complex clog1p(Complex w) {
    if (std::abs(w) > 1e-4) return std::log(1.0 + w);
    return w * (1.0 - w * (0.5 - w * (1.0 / 3.0 - w * 0.25)));
}

} // namespace

Complex apply_s_theta(const FunctionSpec& f, double theta, double x) {
    require_compact_step(f, "apply_s_theta");
    const Complex w = std::polar(1.0, theta);
    const Complex wc = std::conj(w);
    // int_a^b dy / (x conj(w) + y w) = (1/w) log(1 + (b-a) w / (x conj(w) + a w));
    // the log1p form keeps relative accuracy when x dwarfs the support
    Complex acc{0.0, 0.0};
    for (const Cell& c : f.cells())
        acc += c.v / w * clog1p((c.b - c.a) * w / (x * wc + c.a * w));
    return acc;
}

Complex mellin_of_s_theta(const FunctionSpec& f, double theta, double tau) {
    require_compact_step(f, "mellin_of_s_theta");
    const double norm = 1.0 / std::sqrt(2.0 * M_PI);
    // x = e^v; S f decays like 1/x at +inf and is bounded at 0, so the
    // integrand e^{(1/2 - i tau) v} S f(e^v) decays like e^{-|v|/2}
    QuadratureScheme q = QuadratureScheme::adaptive(1e-10);
    q.abs_tol = 1e-13;
    QuadResult r = integrate_line(
        [&](double v) {
            return std::exp(Complex(0.5 * v, -tau * v)) * apply_s_theta(f, theta, std::exp(v));
        },
        0.5, std::abs(tau), q);
    return r.value * norm;
}

double k2_bound(double theta, double p, K2Method method) {
    if (!(p >= 1.0 && p <= 2.0)) throw ExponentRangeError("k2_bound: 1 <= p <= 2 required");
    const ExponentPair ep{p};
    const double pc = ep.conj();
    const double inv_pc = (p == 1.0) ? 0.0 : 1.0 / pc;
    switch (method) {
    case K2Method::RieszThorin:
        return std::pow(k1_norm(theta), 2.0 * inv_pc);
    case K2Method::Beckner: {
        if (std::abs(std::abs(theta) - M_PI / 2) > 1e-12)
            throw MethodNotApplicableError("Beckner constant applies at theta = +-pi/2");
        if (p == 1.0) return 1.0;
        return std::pow(2.0 * M_PI, inv_pc) *
               std::sqrt(std::pow(p, 1.0 / p) / std::pow(pc, inv_pc));
    }
    case K2Method::Hardy: {
        if (theta != 0.0) throw MethodNotApplicableError("Hardy bound applies at theta = 0");
        if (p == 1.0) return 1.0;
        return std::pow(2.0 * M_PI / pc, inv_pc);
    }
    case K2Method::Setterqvist: {
        if (theta != 0.0)
            throw MethodNotApplicableError("Setterqvist bound applies at theta = 0");
        if (p == 1.0) return 1.0;
        return std::pow(M_PI * (p - 1.0), inv_pc) *
               std::pow(p * (2.0 - p), 1.0 / p - 0.5);
    }
    case K2Method::HardyTheta: {
        if (std::abs(theta) >= M_PI / 2)
            throw MethodNotApplicableError("angle-dependent Hardy bound needs |theta| < pi/2");
        if (p == 1.0) return 1.0;
        return std::pow(2.0 * M_PI / (pc * std::cos(theta)), inv_pc);
    }
    }
    throw MethodNotApplicableError("unknown method");
}

namespace {

double golden_max(const std::function<double(double)>& g, double a, double b, int iters = 120) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = g(x1), f2 = g(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = g(x1);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

ComparisonReport comparison_ratios() {
    ComparisonReport rep;
    // gap of the interpolation bound (2pi)^{1/p'} against the exact boundary
    // constant; reported at the scale of the squared norms, where the
    // maximum is ~1.158 at the smaller root of p^2 - e^2 p + e^2 = 0
    auto r1 = [](double p) {
        const double pc = p / (p - 1.0);
        return std::pow(pc, 1.0 / pc) / std::pow(p, 1.0 / p);
    };
    rep.beckner.p_star = golden_max(r1, 1.0 + 1e-9, 2.0);
    rep.beckner.ratio = r1(rep.beckner.p_star);

    auto r2 = [](double p) {
        const double pc = p / (p - 1.0);
        return std::pow(pc / 2.0, 1.0 / pc);
    };
    rep.hardy.p_star = golden_max(r2, 1.0 + 1e-9, 2.0);
    rep.hardy.ratio = r2(rep.hardy.p_star);

    auto r3 = [](double p) {
        const double pc = p / (p - 1.0);
        const double lhs = std::pow(M_PI, 1.0 / pc);
        const double rhs = std::pow(M_PI * (p - 1.0), 1.0 / pc) *
                           std::pow(p * (2.0 - p), 1.0 / p - 0.5);
        return lhs / rhs;
    };
    rep.setterqvist.p_star = golden_max(r3, 1.0 + 1e-9, 2.0 - 1e-9);
    rep.setterqvist.ratio = r3(rep.setterqvist.p_star);
    return rep;
}

} // namespace hylab
