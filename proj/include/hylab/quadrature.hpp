#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <vector>

namespace hylab {

using Complex = std::complex<double>;
constexpr double kInf = std::numeric_limits<double>::infinity();

/// How an integral should be evaluated.
///
/// ClosedFormWhenAvailable lets an operation use an exact antiderivative if
/// it has one and fall back to the adaptive rule otherwise. The adaptive
/// rule is Gauss-Kronrod 7-15 with recursive bisection; oscillatory
/// integrands are pre-split at period boundaries 2*pi/|Im z| before the
/// adaptive pass so accuracy stays uniform as the phase frequency grows.
struct QuadratureScheme {
    enum class Rule { ClosedFormWhenAvailable, Adaptive, GaussLaguerre };
    Rule rule = Rule::ClosedFormWhenAvailable;
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_depth = 28;
    int laguerre_nodes = 64;

    static QuadratureScheme adaptive(double rel = 1e-10) {
        QuadratureScheme q;
        q.rule = Rule::Adaptive;
        q.rel_tol = rel;
        return q;
    }
};

struct QuadResult {
    Complex value{0.0, 0.0};
    double error = 0.0; // achieved absolute error estimate
    long evaluations = 0;
};

using Integrand = std::function<Complex(double)>;
using RealIntegrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod 7-15 on a finite interval.
QuadResult integrate(const Integrand& f, double a, double b, const QuadratureScheme& q = {});

/// Finite interval, integrand carrying a phase of frequency `freq`
/// (period 2*pi/|freq|); the interval is chunked at period boundaries first.
QuadResult integrate_oscillatory(const Integrand& f, double a, double b, double freq,
                                 const QuadratureScheme& q = {});

/// Half-line [0,inf) for integrands decaying like exp(-decay*t), optionally
/// oscillating with frequency `freq`. Truncation point chosen from `decay`
/// so the dropped tail is below tolerance.
QuadResult integrate_halfline(const Integrand& f, double decay, double freq,
                              const QuadratureScheme& q = {});

/// Whole line, integrand decaying like exp(-decay*|v|) on both sides.
QuadResult integrate_line(const Integrand& f, double decay, double freq,
                          const QuadratureScheme& q = {});

double integrate_real(const RealIntegrand& f, double a, double b, const QuadratureScheme& q = {});

/// Gauss-Laguerre rule: int_0^inf g(t) e^{-t} dt ~ sum w_i g(x_i).
struct GaussLaguerre {
    std::vector<double> nodes;
    std::vector<double> weights;
    static const GaussLaguerre& cached(int n);
    Complex apply(const Integrand& g) const;
};

} // namespace hylab
