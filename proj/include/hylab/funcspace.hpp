#pragma once

#include "hylab/quadrature.hpp"

#include <complex>
#include <variant>
#include <vector>

namespace hylab {

/// f(t) = coef * t^(alpha-1) * exp(-beta t) on (0,inf).
/// Requires alpha > 0 and Re beta > 0; L^p membership near zero additionally
/// needs (alpha-1)p > -1, which is checked where it matters.
struct ExpMonomial {
    double alpha = 1.0;
    Complex beta{1.0, 0.0};
    Complex coef{1.0, 0.0};
};

/// Piecewise-constant, compactly supported: values[i] on [breaks[i], breaks[i+1]),
/// zero after the last breakpoint. breaks.size() == values.size() + 1.
struct SimpleFunction {
    std::vector<double> breaks;
    std::vector<Complex> values;
};

/// Grid samples with piecewise-constant interpolation: the value at grid[i]
/// is used on the cell [grid[i], grid[i+1]); zero beyond the grid.
struct SampledFunction {
    std::vector<double> grid;
    std::vector<Complex> values; // one per grid point; the last one carries no mass
};

struct Cell {
    double a, b;
    Complex v;
};

class FunctionSpec {
public:
    explicit FunctionSpec(ExpMonomial m);
    explicit FunctionSpec(SimpleFunction s);
    explicit FunctionSpec(SampledFunction s);

    static FunctionSpec indicator(double a, double b, Complex coef = {1.0, 0.0});
    static FunctionSpec exp_decay(Complex beta = {1.0, 0.0}, Complex coef = {1.0, 0.0}) {
        return FunctionSpec(ExpMonomial{1.0, beta, coef});
    }

    bool is_expmono() const { return std::holds_alternative<ExpMonomial>(v_); }
    bool is_simple() const { return std::holds_alternative<SimpleFunction>(v_); }
    bool is_sampled() const { return std::holds_alternative<SampledFunction>(v_); }
    const ExpMonomial& expmono() const { return std::get<ExpMonomial>(v_); }
    const SimpleFunction& simple() const { return std::get<SimpleFunction>(v_); }
    const SampledFunction& sampled() const { return std::get<SampledFunction>(v_); }

    Complex eval(double t) const;
    bool compactly_supported() const { return !is_expmono(); }
    double support_lo() const;
    double support_hi() const; // +inf for ExpMonomial

    /// Step-function cells (Simple and Sampled variants only).
    std::vector<Cell> cells() const;

    /// True if the support lies in [0,inf) (required by the Laplace operators).
    bool supported_on_halfline() const { return support_lo() >= 0.0; }

private:
    std::variant<ExpMonomial, SimpleFunction, SampledFunction> v_;
};

/// Conjugate pair 1/p + 1/p' = 1. p' is always derived, never stored.
struct ExponentPair {
    double p = 2.0;

    static ExponentPair of(double p);
    double conj() const {
        if (p == 1.0) return kInf;
        if (p == kInf) return 1.0;
        return p / (p - 1.0);
    }
    /// Hausdorff-Young range 1 <= p <= 2.
    bool hausdorff_young() const { return p <= 2.0; }
};

/// Sampled distribution profile: thresholds (decreasing) with D_f values.
struct DistributionProfile {
    std::vector<double> thresholds;
    std::vector<double> measures;
};

/// ||f||_p. Closed form for ExpMonomial and step functions; p = inf gives the
/// essential sup. Throws NonIntegrableError when (alpha-1)p <= -1.
double lp_norm(const FunctionSpec& f, double p, const QuadratureScheme& quad = {});

/// D_f(lambda) = |{t : |f(t)| > lambda}|. Returns +inf as the sentinel for an
/// infinite-measure super-level set (never throws for that case).
double distribution_function(const FunctionSpec& f, double lambda);

/// Decreasing rearrangement f*(t) = inf{ lambda >= 0 : D_f(lambda) <= t }.
double decreasing_rearrangement(const FunctionSpec& f, double t);

/// Lorentz quasinorm; r = inf gives the weak norm sup t^{1/p} f*(t).
double lorentz_quasinorm(const FunctionSpec& f, double p, double r);

DistributionProfile distribution_profile(const FunctionSpec& f,
                                         const std::vector<double>& thresholds);

/// L^1 norm of |f| (finite for every valid spec).
double l1_norm(const FunctionSpec& f);

/// Plain integral of f over its domain.
Complex integral(const FunctionSpec& f);

} // namespace hylab
