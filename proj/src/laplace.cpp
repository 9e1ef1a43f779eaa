#include "hylab/laplace.hpp"
#include "hylab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace hylab {

namespace {

// exp(w) - 1 without cancellation for small |w|
Complex cexpm1(Complex w) {
    if (std::abs(w) > 1e-4) return std::exp(w) - 1.0;
    return w * (1.0 + w / 2.0 * (1.0 + w / 3.0 * (1.0 + w / 4.0 * (1.0 + w / 5.0))));
}

// int_a^b e^{-zt} dt, stable for small |z|
Complex cell_transform(double a, double b, Complex z) {
    if (std::abs(z) * (b - a) < 1e-300 || z == Complex{0.0, 0.0}) return {b - a, 0.0};
    // e^{-za} (1 - e^{-z(b-a)}) / z
    return -std::exp(-z * a) * cexpm1(-z * (b - a)) / z;
}

Complex closed_form(const FunctionSpec& f, Complex z) {
    if (f.is_expmono()) {
        const auto& m = f.expmono();
        const Complex w = z + m.beta;
        if (w.real() <= 0.0) throw DivergentIntegralError("Re(z + beta) <= 0");
        // Gamma(alpha) (z+beta)^(-alpha)
        return m.coef * std::exp(std::lgamma(m.alpha) - m.alpha * std::log(w));
    }
    Complex acc{0.0, 0.0};
    for (const Cell& c : f.cells()) acc += c.v * cell_transform(c.a, c.b, z);
    return acc;
}

Complex by_quadrature(const FunctionSpec& f, Complex z, const QuadratureScheme& quad) {
    const double freq = std::abs(z.imag());
    if (f.is_expmono()) {
        const auto& m = f.expmono();
        const double decay = z.real() + m.beta.real();
        if (!(decay > 0.0)) throw DivergentIntegralError("Re(z + beta) <= 0");
        if (quad.rule == QuadratureScheme::Rule::GaussLaguerre && freq == 0.0 &&
            m.beta.imag() == 0.0) {
            // int t^(a-1) e^{-(x+b)t} dt = decay^-a int u^(a-1) e^-u du
            const auto& gl = GaussLaguerre::cached(quad.laguerre_nodes);
            const Complex s = gl.apply(
                [&](double u) { return m.coef * std::pow(u, m.alpha - 1.0); });
            return s * std::pow(decay, -m.alpha);
        }
        // split off the endpoint power on [0, t0] by u = t^alpha
        const double t0 = 1.0;
        const double T = (std::log(1e16) + 12.0) / decay;
        const Complex zb = z + m.beta;
        QuadResult head = integrate(
            [&](double u) {
                const double t = std::pow(u, 1.0 / m.alpha);
                return m.coef / m.alpha * std::exp(-zb * t);
            },
            0.0, std::pow(std::min(t0, T), m.alpha), quad);
        QuadResult tail{};
        if (T > t0)
            tail = integrate_oscillatory(
                [&](double t) {
                    return m.coef * std::pow(t, m.alpha - 1.0) * std::exp(-zb * t);
                },
                t0, T, freq + std::abs(m.beta.imag()), quad);
        return head.value + tail.value;
    }
    // step functions: integrate each cell, chunked at the oscillation period
    Complex acc{0.0, 0.0};
    for (const Cell& c : f.cells()) {
        if (c.v == Complex{0.0, 0.0}) continue;
        QuadResult r = integrate_oscillatory(
            [&](double t) { return c.v * std::exp(-z * t); }, c.a, c.b, freq, quad);
        acc += r.value;
    }
    return acc;
}

void require_halfline_support(const FunctionSpec& f) {
    if (!f.supported_on_halfline())
        throw UnsupportedFunctionError("Laplace operators need support in [0, inf)");
}

} // namespace

Complex laplace_at(const FunctionSpec& f, Complex z, const QuadratureScheme& quad) {
    require_halfline_support(f);
    HalfPlanePoint p(z); // validates Re z >= 0
    // the boundary is reached by continuity from L^1 cap L^2 only
    if (p.z.real() == 0.0 && f.is_expmono() && !(f.expmono().alpha > 0.5))
        throw DivergentIntegralError("boundary evaluation needs f in L^1 cap L^2 (alpha > 1/2)");
    if (quad.rule == QuadratureScheme::Rule::ClosedFormWhenAvailable)
        return closed_form(f, p.z);
    if (p.z.real() == 0.0) {
        // boundary case: evaluate at Re z = eps with a Richardson consistency check
        const double eps = 1e-8;
        const Complex v1 = by_quadrature(f, p.z + eps, quad);
        const Complex v2 = by_quadrature(f, p.z + 2.0 * eps, quad);
        const Complex extrap = 2.0 * v1 - v2;
        if (std::abs(extrap - v1) > 1e-4 * (1.0 + std::abs(v1)))
            throw QuadratureError("boundary evaluation unstable at Re z = 0");
        return extrap;
    }
    return by_quadrature(f, p.z, quad);
}

std::vector<RaySample> laplace_ray(const FunctionSpec& f, double theta,
                                   const std::vector<double>& rho_grid,
                                   const QuadratureScheme& quad) {
    if (std::abs(theta) > M_PI / 2 + 1e-15)
        throw CurveError("ray angle outside [-pi/2, pi/2]");
    const Complex dir = std::polar(1.0, theta);
    const double ct = std::max(std::cos(theta), 0.0);
    std::vector<RaySample> out;
    out.reserve(rho_grid.size());
    // |f| has the same variant shape, so the domination transform is cheap
    for (double rho : rho_grid) {
        if (!(rho > 0.0)) throw CurveError("ray grid must be positive");
        RaySample s;
        s.rho = rho;
        s.value = laplace_at(f, rho * dir, quad);
        if (f.is_expmono()) {
            const auto& m = f.expmono();
            const double den = rho * ct + m.beta.real();
            s.domination = std::abs(m.coef) * std::exp(std::lgamma(m.alpha)) *
                           std::pow(den, -m.alpha);
        } else {
            double acc = 0.0;
            const double x = rho * ct;
            for (const Cell& c : f.cells())
                acc += std::abs(c.v) * cell_transform(c.a, c.b, Complex(x, 0.0)).real();
            s.domination = acc;
        }
        out.push_back(s);
    }
    return out;
}

std::vector<CurveSample> laplace_curve(const FunctionSpec& f, const CompoundCurve& curve,
                                       int samples_per_piece, const QuadratureScheme& quad) {
    if (curve.halfplane_violation() > 1e-12)
        throw CurveError("curve leaves the closed right half-plane");
    if (samples_per_piece < 2) throw Error("laplace_curve: need at least 2 samples per piece");
    std::vector<CurveSample> out;
    for (std::size_t pi = 0; pi < curve.pieces.size(); ++pi) {
        const auto& piece = curve.pieces[pi];
        const double L = piece.length();
        const double h = L / (samples_per_piece - 1);
        for (int i = 0; i < samples_per_piece; ++i) {
            CurveSample cs;
            cs.piece = static_cast<int>(pi);
            cs.s = h * i;
            cs.z = piece.point_at(cs.s);
            cs.value = laplace_at(f, cs.z, quad);
            cs.weight = (i == 0 || i == samples_per_piece - 1) ? h / 2.0 : h;
            out.push_back(cs);
        }
    }
    return out;
}

double oscillation_scale(const FunctionSpec& f) {
    if (f.is_expmono()) return std::min(40.0 / f.expmono().beta.real(), 50.0);
    return std::min(f.support_hi(), 50.0);
}

double laplace_curve_norm(const FunctionSpec& f, const CompoundCurve& curve, double q,
                          double rel_tol) {
    if (curve.halfplane_violation() > 1e-12)
        throw CurveError("curve leaves the closed right half-plane");
    QuadratureScheme qs = QuadratureScheme::adaptive(rel_tol);
    qs.abs_tol = 1e-14;
    const double tscale = oscillation_scale(f);
    double acc = 0.0;
    for (const auto& piece : curve.pieces) {
        for (std::size_t i = 1; i < piece.vertices.size(); ++i) {
            const Complex a = piece.vertices[i - 1];
            const Complex b = piece.vertices[i];
            const double len = std::abs(b - a);
            // oscillation along the segment comes from the Im z sweep; cap the
            // chunk length at one unit so decay pockets are never skipped
            const double freq =
                std::max(std::abs((b - a).imag()) / len * tscale, 2.0 * M_PI);
            QuadResult r = integrate_oscillatory(
                [&](double s) {
                    const Complex z = a + (s / len) * (b - a);
                    return Complex(std::pow(std::abs(laplace_at(f, z)), q), 0.0);
                },
                0.0, len, freq, qs);
            acc += r.value.real();
        }
    }
    return std::pow(acc, 1.0 / q);
}

namespace {

SupSearchResult golden_refine(const std::function<double(double)>& g, double lo, double hi,
                              int iters) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
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
    SupSearchResult r;
    r.argmax = 0.5 * (a + b);
    r.value = g(r.argmax);
    r.resolution = b - a;
    return r;
}

} // namespace

SupSearchResult maximal_laplace(const FunctionSpec& f, double y, int grid_points) {
    auto g = [&](double logx) { return std::abs(laplace_at(f, {std::exp(logx), y})); };
    const double llo = std::log(1e-6), lhi = std::log(1e6);
    double best = -1.0, bestl = llo;
    for (int i = 0; i < grid_points; ++i) {
        const double lx = llo + (lhi - llo) * i / (grid_points - 1);
        const double v = g(lx);
        if (v > best) {
            best = v;
            bestl = lx;
        }
    }
    const double step = (lhi - llo) / (grid_points - 1);
    SupSearchResult r = golden_refine(g, bestl - step, bestl + step, 80);
    if (!(r.value >= 0.0) || !std::isfinite(r.value))
        throw SearchError("maximal transform search failed");
    r.argmax = std::exp(r.argmax);
    r.resolution = r.argmax * r.resolution; // back to the x scale
    // the sup may sit at the boundary x -> 0+; compare against the edge value
    const double edge = g(llo);
    if (edge > r.value) {
        r.value = edge;
        r.argmax = 1e-6;
    }
    return r;
}

SupSearchResult angular_maximal(const FunctionSpec& f, double r, int grid_points) {
    if (!(r > 0.0)) throw Error("angular_maximal: r > 0 required");
    auto g = [&](double th) { return std::abs(laplace_at(f, std::polar(r, th))); };
    const double lo = -M_PI / 2, hi = M_PI / 2;
    double best = -1.0, bestt = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double th = lo + (hi - lo) * i / (grid_points - 1);
        const double v = g(th);
        if (v > best) {
            best = v;
            bestt = th;
        }
    }
    const double step = (hi - lo) / (grid_points - 1);
    SupSearchResult res =
        golden_refine(g, std::max(lo, bestt - step), std::min(hi, bestt + step), 80);
    if (!std::isfinite(res.value)) throw SearchError("angular maximal search failed");
    if (g(lo) > res.value) {
        res.value = g(lo);
        res.argmax = lo;
    }
    if (g(hi) > res.value) {
        res.value = g(hi);
        res.argmax = hi;
    }
    return res;
}

} // namespace hylab
