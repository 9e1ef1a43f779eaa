#pragma once

#include "hylab/errors.hpp"
#include "hylab/funcspace.hpp"
#include "hylab/measures.hpp"

#include <vector>

namespace hylab {

/// z = x + iy with y > 0 strictly.
struct UpperHalfPlanePoint {
    Complex z;
    explicit UpperHalfPlanePoint(Complex zz) : z(zz) {
        if (!(z.imag() > 0.0)) throw CurveError("point must satisfy Im z > 0");
    }
};

/// P(x,y) = (1/pi) y/(x^2+y^2); integrates to 1 in x for every y > 0.
double poisson_kernel(double x, double y);

/// Poisson extension (P u)(z) = int P(x-t, y) u(t) dt. Exact arctan
/// antiderivatives for step functions; quadrature otherwise.
Complex poisson(const FunctionSpec& u, Complex z, const QuadratureScheme& quad = {});

/// Truncated kernel P_h(x,y) = P(max(h,|x|), y).
Complex truncated_poisson(const FunctionSpec& u, Complex z, double h);

/// F(t) = int_t^inf rho_1(s) ds with rho_y(s) = (4/pi) y s^2/(y^2+s^2)^2:
/// the envelope weight with F(0) = 1 and F(t) = O(1/t).
double envelope_F(double t);

/// Principal-value convolution (1/pi) p.v. int u(t)/(x-t) dt; exact log
/// antiderivatives for step functions. Throws at breakpoints of u.
Complex hilbert_transform(const FunctionSpec& u, double x);

/// Principal value by symmetric excision around the singularity (oracle path).
Complex hilbert_transform_pv(const FunctionSpec& u, double x, double excision = 1e-7);

/// Cauchy integral (S u)(z) = int (i/pi) u(t)/((x-t)+iy) dt; for real u its
/// real part is the Poisson extension and its imaginary part the Poisson
/// extension of the Hilbert transform of u.
Complex cauchy_integral(const FunctionSpec& u, Complex z);

/// Hardy-Littlewood maximal function at x: centered (sup over radii) or
/// uncentered (sup over containing intervals). Exact for step functions via
/// candidate-endpoint enumeration.
double hl_maximal(const FunctionSpec& u, double x, bool centered);

struct WeakTypeReport {
    std::vector<double> lambdas;
    std::vector<double> measured; // mu{ |P u| > lambda }
    std::vector<double> bound;    // C ||u||_1 / lambda
    double max_ratio = 0.0;
    double constant = 0.0; // 3 k_x + k_y / pi
};

/// CSV emission (lambda, measured, bound, ratio).
void write_weak_type_csv(const WeakTypeReport& rep, std::ostream& out);

struct WeakTypeOptions {
    int samples_per_piece = 10000;
    int lambda_points = 24;
};

/// Weak-(1,1) check for the Poisson extension against an arclength measure
/// with a certificate at alpha = 0: samples |P u| along the curve, measures
/// super-level arclength with linear refinement at crossings, and compares
/// lambda * mu{|P u| > lambda} with (3 k_x + k_y/pi) ||u||_1.
WeakTypeReport weak_type_poisson(const FunctionSpec& u, const MeasureSpec& mu,
                                 const ProjectionCertificate& cert,
                                 const WeakTypeOptions& opt = {});

/// Same weak-(1,1) quantity for the integer-tooth comb {n + iy : 0 < y < b}:
/// sum_n |{y in (0,b) : |P u(n+iy)| > lambda}| <= 2 (1/pi + 3b) ||u||_1 / lambda.
WeakTypeReport weak_type_poisson_comb(const FunctionSpec& u, double b, int n_teeth,
                                      const WeakTypeOptions& opt = {});

struct PoissonCauchyBounds {
    double k3 = 0.0; // Poisson: 2 ((3 k_x + k_y/pi) p')^{1/p}
    double k4 = 0.0; // Cauchy:  k3 * (1 + tan(pi/2 max(1/p, 1/p')))
};

/// Closed-form norm bounds for the Poisson and Cauchy integrals against a
/// well-projected weight. K3 needs 1 < p <= inf, K4 needs 1 < p < inf.
PoissonCauchyBounds lp_poisson_cauchy_norms(double p, double kx, double ky);

/// tan(pi/2 max(1/p, 1/p')): the exact L^p norm of the Hilbert transform.
double pichorides_constant(double p);

/// Coarsened p = 2 Cauchy bound 4 sqrt(6 k_x + k_y).
double cauchy_bound_p2(double kx, double ky);

} // namespace hylab
