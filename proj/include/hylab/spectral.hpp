#pragma once

#include "hylab/funcspace.hpp"

#include <vector>

namespace hylab {

/// Ray angle with its derived quantities mu = |theta|/(pi/2), omega = e^{i theta}.
struct RayParams {
    double theta = 0.0;
    double mu() const { return std::abs(theta) / (M_PI / 2.0); }
    Complex omega() const { return std::polar(1.0, theta); }
};

/// lambda_tau(theta) = pi e^{2 theta tau} / cosh(pi tau): the multiplier of the
/// composition L_theta^* L_theta on the generalized eigenfunction x^{-1/2+i tau}.
double eigenvalue_lambda(double theta, double tau);

/// Same eigenvalue by direct quadrature of int_0^inf y^{-1/2+i tau}/(conj(w)+w y) dy.
/// The imaginary part must vanish; both are returned for the caller to assert.
Complex eigenvalue_by_integral(double theta, double tau, const QuadratureScheme& quad = {});

/// Best L2 -> L2 constant along the ray:
/// sqrt(pi) (1-mu)^((1-mu)/4) (1+mu)^((1+mu)/4) for |theta| < pi/2 and
/// sqrt(2 pi) at the boundary; equals sqrt(sup_tau lambda_tau(theta)).
double k1_norm(double theta);

struct EigenReport {
    double tau_star = 0.0;
    double lambda_max = 0.0;
};

/// Maximizer tau* = artanh(mu)/pi of lambda_tau(theta) and the maximum value.
EigenReport lambda_maximizer(double theta);

enum class GridKind { LogTrapezoid };

struct OperatorNormEstimate {
    int n = 0;
    double sigma_max = 0.0;
    double bound = 0.0; // K1(theta)^2
    int iterations = 0;
    bool converged = false;
    double lo = 0.0, hi = 0.0;
};

/// Largest singular value of the symmetrized discrete kernel
/// sqrt(w_i w_j) / (x_i conj(w) + x_j w) on n log-spaced nodes covering
/// [lo, hi], trapezoid weights in log space, power iteration on K*K with an
/// all-ones start vector.
OperatorNormEstimate discretized_s_theta_norm(double theta, int n,
                                              GridKind kind = GridKind::LogTrapezoid,
                                              double lo = 1e-4, double hi = 1e4);

/// Mellin coefficients f~(tau) = int f(x) (2pi)^{-1/2} x^{-1/2-i tau} dx for
/// compactly supported step functions (exact per-cell antiderivatives).
std::vector<Complex> mellin_transform(const FunctionSpec& f, const std::vector<double>& taus);

/// int |f~|^2 dtau, evaluated as an adaptive bulk integral over [-T, T] plus
/// the analytic oscillatory tail of the step-function transform.
double mellin_squared_norm(const FunctionSpec& f, double T = 600.0);

/// (S_theta f)(x) = int f(y) / (x conj(w) + y w) dy, exact for step functions.
Complex apply_s_theta(const FunctionSpec& f, double theta, double x);

/// Mellin coefficient of S_theta f at tau (numeric, log-line quadrature).
Complex mellin_of_s_theta(const FunctionSpec& f, double theta, double tau);

enum class K2Method { RieszThorin, Beckner, Hardy, Setterqvist, HardyTheta };

/// Named upper bounds for the L^p -> L^p' ray norm, 1 <= p <= 2.
/// Beckner applies only at theta = +-pi/2 (and is exact there); Hardy and
/// Setterqvist only at theta = 0; HardyTheta needs |theta| < pi/2.
double k2_bound(double theta, double p, K2Method method);

struct RatioReport {
    double p_star = 0.0;
    double ratio = 0.0;
};

struct ComparisonReport {
    RatioReport beckner;     // sup_p of the squared gap (2pi)^{1/p'} vs the exact constant
    RatioReport hardy;       // sup_p pi^{1/p'} / (2pi/p')^{1/p'} = e^{1/(2e)}
    RatioReport setterqvist; // sup_p pi^{1/p'} / Setterqvist bound
};

/// Numerically maximizes the three bound-comparison ratios over p in (1,2).
ComparisonReport comparison_ratios();

} // namespace hylab
