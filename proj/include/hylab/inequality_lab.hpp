#pragma once

#include "hylab/funcspace.hpp"
#include "hylab/laplace.hpp"
#include "hylab/measures.hpp"
#include "hylab/rng.hpp"

#include <string>
#include <vector>

namespace hylab {

// Closed-form constant ladder for the sector/curve Hausdorff-Young bounds.
// Every evaluator reproduces its quoted special value exactly.
namespace ladder {

/// Master sector bound (8 pi)^{1/p'} (sqrt(6k+k') + sqrt(6l+l'))^{2/p'}.
double k5(double p, double k, double kp, double l, double lp);
/// Monotone curves: (224 pi)^{1/p'}.
double k6(double p);
/// Convex curves: (16 * 224 pi)^{1/p'}.
double k7(double p);
/// Lipschitz graphs: (32 pi (1 + lambda^2))^{1/p'}.
double k8(double p, double lambda);
/// Rotated Lipschitz graphs: (36 * 32 pi (1 + lambda^2))^{1/p'}.
double k8_rot(double p, double lambda);
/// Boxed curves in the pi/4 sector with nu = 1: (1344 pi (1/c + 2))^{1/p'}.
double k9(double p, double c);
/// Maximal Paley-Wiener bound: (192 pi)^{1/p'}.
double k10(double p);
/// Restricted angular maximal bound: (18*8*24 (log2/log c + nu + 2))^{1/p'}.
double k11(double p, int nu, double c);

} // namespace ladder

struct VerificationRun {
    std::string theorem;
    std::uint64_t seed = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0; // rhs - lhs
    bool pass = false;
};

/// Random test-function corpus: step functions with at most max_steps cells,
/// breakpoints in (0, 10] (consecutive ratios bounded away from 1), values in
/// the closed unit disk.
FunctionSpec random_simple(Rng& rng, int max_steps = 8);

/// || L f ||_{L^{p'}(d mu_gamma)} <= K5(p; k,k',l,l') ||f||_p for a measure
/// carrying certificates at both sector boundary angles.
VerificationRun master_theorem_check(const FunctionSpec& f, const CompoundCurve& curve,
                                     const ProjectionCertificate& cert_alpha,
                                     const ProjectionCertificate& cert_beta, double p,
                                     std::uint64_t seed = 0);

/// Two-ray Cauchy representation of L f(z) for a step function f and a sector
/// alpha < arg z < beta; must agree with laplace_at.
Complex cauchy_sector_representation(const FunctionSpec& f, Complex z, double alpha, double beta,
                                     const QuadratureScheme& quad = {});

struct SlopeReport {
    double p = 0.0;
    std::vector<double> eps;
    std::vector<double> ratio; // ||v_a||_{p'} / ||u_a||_p at a = 1/p' + eps
    double slope = 0.0;        // fitted log-log slope
    double target = 0.0;       // 1/p - 1/p'
};

/// Blow-up of the norm ratio for p > 2 along u_a(t) = t^{a-1} e^{-t}: closed
/// forms for both norms, log-log regression of the ratio against eps.
SlopeReport p_gt_2_counterexample(double p, const std::vector<double>& eps_grid);

struct BloomReport {
    bool admissible = false;
    double sup_x_lw = 0.0;
    double argmax = 0.0;
    double edge_slope = 0.0; // log-log growth of x Lw(x) at the small-x edge
};

/// Weighted-transform admissibility: sup over the grid of x * L w(x) together
/// with a small-x growth diagnostic (bounded iff admissible).
BloomReport bloom_condition_check(const FunctionSpec& w, const std::vector<double>& x_grid);

struct CombTightnessReport {
    double alpha = 0.0, beta = 0.0, p = 0.0, delta = 0.0;
    std::vector<double> k;
    std::vector<double> weighted; // int |L f_k|^{p'} (1+t)^delta dt
    double fitted_exponent = 0.0;
    double norm_deviation = 0.0;   // max |  ||f_k||_p - 1 |
    double cond_c_worst = 0.0;     // worst ratio in the tooth comparability condition
    double cond_c_allowed = 0.0;   // 1 + c from the geometry
};

/// Sharpness family f_k(x) = (kp)^{1/p} e^{-kx} against the comb weight
/// w ~ x^{delta}, delta = 1 - (beta+1)/alpha.
CombTightnessReport comb_tightness(double alpha, double beta, double p,
                                   const std::vector<double>& k_values);

struct VertCombReport {
    double lhs = 0.0;       // truncated tooth sum plus analytic tail
    double rhs = 0.0;       // 2 pi int int |g|^2
    double tail = 0.0;      // analytic tail correction applied to lhs
    double residual = 0.0;  // |lhs - rhs| / rhs
    double hilbert_route_bound = 0.0; // 2 pi C(b) ||f||_2^2
    bool pass = false;
};

/// Tooth-sum identity for the integer vertical comb:
/// sum_n int_0^b |L f(x+in)|^2 dx = 2 pi int_0^b int_0^{2pi} |g(x,t)|^2 dt dx
/// with g(x,t) = sum_m f(t + 2 pi m) e^{-(t + 2 pi m) x}. The tooth sum is
/// truncated at |n| <= N and completed with a midpoint Euler-Maclaurin tail.
VertCombReport vertical_comb_identity(const FunctionSpec& f, double b, int N, double tol = 1e-4);

/// Top eigenvalues of the finite sections [1/(i+j+1)] (nondecreasing, < pi).
std::vector<double> hilbert_matrix_top_eigenvalues(const std::vector<int>& sizes);

/// Piecewise-constant staircase x = b(y).
struct Staircase {
    std::vector<double> y_breaks; // increasing, interior breakpoints
    std::vector<double> levels;   // size y_breaks.size() + 1, values > 0
    double level_at(double y) const;
};

/// (int |L f(b(y)+iy)|^{p'} dy)^{1/p'} <= K10(p) ||f||_p for a staircase b;
/// the y integral is truncated with an additive tail bound so the check stays
/// one-sided.
VerificationRun maximal_pw_check(const FunctionSpec& f, double p, const Staircase& b,
                                 std::uint64_t seed = 0);

/// sup_x int |L f(x+iy)|^2 dy <= 2 pi ||f||_2^2 probed at fixed x.
double paley_wiener_line_integral(const FunctionSpec& f, double x, double p = 2.0);

/// || L_gamma f ||_{p'} <= K11(p, nu, c) ||f||_p for a simple discontinuous
/// radial curve satisfying the run-growth condition.
VerificationRun restricted_angular_check(const FunctionSpec& f, const CompoundCurve& curve,
                                         double p, std::uint64_t seed = 0);

} // namespace hylab
