#include "hylab/funcspace.hpp"
#include "hylab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace hylab {

namespace {

void check_increasing(const std::vector<double>& xs, const char* what) {
    if (xs.size() < 2) throw ParseError(std::string(what) + ": need at least two points");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw ParseError(std::string(what) + ": points must be strictly increasing");
}

// |f|(t) for an exp-monomial: C * t^(alpha-1) * exp(-b t), C=|coef|, b=Re beta
struct AbsExpMono {
    double C, alpha, b;
    explicit AbsExpMono(const ExpMonomial& m)
        : C(std::abs(m.coef)), alpha(m.alpha), b(m.beta.real()) {}
    double operator()(double t) const { return C * std::pow(t, alpha - 1.0) * std::exp(-b * t); }
    double sup() const {
        if (alpha < 1.0) return kInf;
        if (alpha == 1.0) return C;
        const double ts = (alpha - 1.0) / b;
        return (*this)(ts);
    }
    double argmax() const { return alpha > 1.0 ? (alpha - 1.0) / b : 0.0; }
};

} // namespace

FunctionSpec::FunctionSpec(ExpMonomial m) : v_(m) {
    if (!(m.alpha > 0.0)) throw ParseError("ExpMonomial: alpha must be positive");
    if (!(m.beta.real() > 0.0)) throw ParseError("ExpMonomial: Re beta must be positive");
}

FunctionSpec::FunctionSpec(SimpleFunction s) : v_(std::move(s)) {
    const auto& sf = std::get<SimpleFunction>(v_);
    check_increasing(sf.breaks, "SimpleFunction breaks");
    if (sf.values.size() + 1 != sf.breaks.size())
        throw ParseError("SimpleFunction: values.size() must equal breaks.size()-1");
}

FunctionSpec::FunctionSpec(SampledFunction s) : v_(std::move(s)) {
    const auto& sf = std::get<SampledFunction>(v_);
    check_increasing(sf.grid, "SampledFunction grid");
    if (sf.values.size() != sf.grid.size())
        throw ParseError("SampledFunction: one value per grid point");
}

FunctionSpec FunctionSpec::indicator(double a, double b, Complex coef) {
    return FunctionSpec(SimpleFunction{{a, b}, {coef}});
}

Complex FunctionSpec::eval(double t) const {
    if (is_expmono()) {
        const auto& m = expmono();
        if (t <= 0.0) return {0.0, 0.0};
        return m.coef * std::pow(t, m.alpha - 1.0) * std::exp(-m.beta * t);
    }
    for (const Cell& c : cells())
        if (t >= c.a && t < c.b) return c.v;
    return {0.0, 0.0};
}

double FunctionSpec::support_lo() const {
    if (is_expmono()) return 0.0;
    if (is_simple()) return simple().breaks.front();
    return sampled().grid.front();
}

double FunctionSpec::support_hi() const {
    if (is_expmono()) return kInf;
    if (is_simple()) return simple().breaks.back();
    return sampled().grid.back();
}

std::vector<Cell> FunctionSpec::cells() const {
    std::vector<Cell> out;
    if (is_simple()) {
        const auto& s = simple();
        out.reserve(s.values.size());
        for (std::size_t i = 0; i < s.values.size(); ++i)
            out.push_back({s.breaks[i], s.breaks[i + 1], s.values[i]});
    } else if (is_sampled()) {
        const auto& s = sampled();
        out.reserve(s.grid.size() - 1);
        for (std::size_t i = 0; i + 1 < s.grid.size(); ++i)
            out.push_back({s.grid[i], s.grid[i + 1], s.values[i]});
    } else {
        throw UnsupportedFunctionError("cells(): not a step function");
    }
    return out;
}

ExponentPair ExponentPair::of(double p) {
    if (!(p >= 1.0)) throw ExponentRangeError("exponent p must satisfy p >= 1");
    return ExponentPair{p};
}

double lp_norm(const FunctionSpec& f, double p, const QuadratureScheme& quad) {
    if (!(p >= 1.0)) throw ExponentRangeError("lp_norm: p >= 1 required");
    if (f.is_expmono()) {
        const AbsExpMono g(f.expmono());
        if (p == kInf) return g.sup();
        const double e = p * (g.alpha - 1.0);
        if (!(e > -1.0))
            throw NonIntegrableError("lp_norm: (alpha-1)p <= -1, not in L^p near zero");
        if (quad.rule == QuadratureScheme::Rule::Adaptive) {
            // quadrature route, used to cross-check the closed form: the
            // substitution u = t^(e+1) flattens the endpoint power, leaving
            // int_0^inf (C^p/k) exp(-p b u^{1/k}) du with k = e+1; the
            // integrand keeps a singular derivative at 0, so bisect deep and
            // split the range into decades
            const double k = e + 1.0;
            const double U = std::pow((std::log(1e16) + 12.0) / (p * g.b), k);
            QuadratureScheme deep = quad;
            deep.max_depth = std::max(quad.max_depth, 48);
            auto integrand = [&](double u) {
                return Complex(
                    std::pow(g.C, p) / k * std::exp(-p * g.b * std::pow(u, 1.0 / k)), 0.0);
            };
            double acc = 0.0;
            for (double lo = 0.0, hi = std::min(1.0, U); lo < U;
                 lo = hi, hi = std::min(hi * 10.0, U))
                acc += integrate(integrand, lo, hi, deep).value.real();
            return std::pow(acc, 1.0 / p);
        }
        // ||f||_p^p = C^p * Gamma(e+1) / (p b)^(e+1)
        const double logpow =
            std::lgamma(e + 1.0) - (e + 1.0) * std::log(p * g.b) + p * std::log(g.C);
        return std::exp(logpow / p);
    }
    const auto cs = f.cells();
    if (p == kInf) {
        double m = 0.0;
        for (const Cell& c : cs)
            if (c.b > c.a) m = std::max(m, std::abs(c.v));
        return m;
    }
    double acc = 0.0;
    for (const Cell& c : cs) acc += std::pow(std::abs(c.v), p) * (c.b - c.a);
    return std::pow(acc, 1.0 / p);
}

double distribution_function(const FunctionSpec& f, double lambda) {
    if (lambda < 0.0) throw ExponentRangeError("distribution_function: lambda >= 0 required");
    if (!f.is_expmono()) {
        double m = 0.0;
        for (const Cell& c : f.cells())
            if (std::abs(c.v) > lambda) m += c.b - c.a;
        return m;
    }
    const AbsExpMono g(f.expmono());
    if (lambda == 0.0) return kInf; // |f| > 0 on all of (0,inf)
    const double fmax = g.sup();
    if (lambda >= fmax) return 0.0;

    // locate the upper crossing t2 > argmax by doubling then bisection
    double lo = std::max(g.argmax(), 1e-300), hi = std::max(1.0, 2.0 * lo);
    while (g(hi) > lambda) hi *= 2.0;
    double t2 = lo, t2hi = hi;
    for (int i = 0; i < 200 && t2hi - t2 > 1e-15 * std::max(1.0, t2hi); ++i) {
        const double mid = 0.5 * (t2 + t2hi);
        (g(mid) > lambda ? t2 : t2hi) = mid;
    }
    const double upper = 0.5 * (t2 + t2hi);

    if (g.alpha <= 1.0) return upper; // decreasing from +inf (or from C when alpha=1)

    // rising branch: crossing t1 in (0, argmax)
    double a = 0.0, b = g.argmax();
    for (int i = 0; i < 200 && b - a > 1e-15 * std::max(1.0, b); ++i) {
        const double mid = 0.5 * (a + b);
        (g(mid) > lambda ? b : a) = mid;
    }
    const double lower = 0.5 * (a + b);
    return upper - lower;
}

double decreasing_rearrangement(const FunctionSpec& f, double t) {
    if (t < 0.0) throw ExponentRangeError("decreasing_rearrangement: t >= 0 required");
    if (!f.is_expmono()) {
        // sort cells by |value| descending, accumulate widths
        auto cs = f.cells();
        std::sort(cs.begin(), cs.end(),
                  [](const Cell& x, const Cell& y) { return std::abs(x.v) > std::abs(y.v); });
        double acc = 0.0;
        for (const Cell& c : cs) {
            acc += c.b - c.a;
            if (t < acc) return std::abs(c.v);
        }
        return 0.0;
    }
    const AbsExpMono g(f.expmono());
    const double fmax = g.sup();
    if (t == 0.0) return fmax; // +inf sentinel when alpha < 1
    if (!std::isfinite(fmax)) {
        // decreasing unbounded profile: f*(t) solves D(lambda) = t
        double lo = 0.0, hi = 1.0;
        while (distribution_function(f, hi) > t) hi *= 2.0;
        for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
            const double mid = 0.5 * (lo + hi);
            (distribution_function(f, mid) > t ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }
    double lo = 0.0, hi = fmax;
    for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(hi, 1.0); ++i) {
        const double mid = 0.5 * (lo + hi);
        (distribution_function(f, mid) > t ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double lorentz_quasinorm(const FunctionSpec& f, double p, double r) {
    if (!(p >= 1.0)) throw ExponentRangeError("lorentz_quasinorm: p >= 1 required");
    if (!(r > 0.0)) throw ExponentRangeError("lorentz_quasinorm: r > 0 required");
    if (!f.is_expmono()) {
        // exact evaluation from the step rearrangement
        auto cs = f.cells();
        std::sort(cs.begin(), cs.end(),
                  [](const Cell& x, const Cell& y) { return std::abs(x.v) > std::abs(y.v); });
        if (r == kInf) {
            double sup = 0.0, T = 0.0;
            for (const Cell& c : cs) {
                T += c.b - c.a;
                sup = std::max(sup, std::pow(T, 1.0 / p) * std::abs(c.v));
            }
            return sup;
        }
        double acc = 0.0, T0 = 0.0;
        for (const Cell& c : cs) {
            const double T1 = T0 + (c.b - c.a);
            const double fv = std::abs(c.v);
            if (fv > 0.0)
                acc += std::pow(fv, r) * (p / r) *
                       (std::pow(T1, r / p) - std::pow(T0, r / p));
            T0 = T1;
        }
        return std::pow(acc, 1.0 / r);
    }
    // layer-cake route: ||f||_{p,r}^r = p int_0^fmax lambda^{r-1} D(lambda)^{r/p} dlambda
    const AbsExpMono g(f.expmono());
    const double fmax = g.sup();
    if (r == kInf) {
        // sup over lambda of lambda * D(lambda)^{1/p}, log grid plus refinement
        const double top = std::isfinite(fmax) ? fmax : g(1e-6);
        double best = 0.0;
        for (int i = 0; i <= 400; ++i) {
            const double lam = top * std::pow(10.0, -6.0 + 6.0 * i / 400.0);
            const double d = distribution_function(f, lam);
            if (std::isfinite(d)) best = std::max(best, lam * std::pow(d, 1.0 / p));
        }
        return best;
    }
    if (!std::isfinite(fmax))
        throw NonIntegrableError("lorentz_quasinorm: unbounded profile with finite r not supported");
    QuadratureScheme q = QuadratureScheme::adaptive(1e-9);
    q.abs_tol = 1e-13;
    const double val = integrate_real(
        [&](double lam) {
            const double d = distribution_function(f, lam);
            return std::pow(lam, r - 1.0) * std::pow(d, r / p);
        },
        0.0, fmax, q);
    return std::pow(p * val, 1.0 / r);
}

DistributionProfile distribution_profile(const FunctionSpec& f,
                                         const std::vector<double>& thresholds) {
    DistributionProfile prof;
    prof.thresholds = thresholds;
    std::sort(prof.thresholds.rbegin(), prof.thresholds.rend());
    prof.measures.reserve(prof.thresholds.size());
    for (double lam : prof.thresholds) prof.measures.push_back(distribution_function(f, lam));
    return prof;
}

double l1_norm(const FunctionSpec& f) { return lp_norm(f, 1.0); }

Complex integral(const FunctionSpec& f) {
    if (f.is_expmono()) {
        const auto& m = f.expmono();
        // int_0^inf t^(a-1) e^(-beta t) dt = Gamma(a) beta^(-a)
        return m.coef * std::exp(std::lgamma(m.alpha) - m.alpha * std::log(m.beta));
    }
    Complex acc{0.0, 0.0};
    for (const Cell& c : f.cells()) acc += c.v * (c.b - c.a);
    return acc;
}

} // namespace hylab
