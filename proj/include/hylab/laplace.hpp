#pragma once

#include "hylab/errors.hpp"
#include "hylab/funcspace.hpp"
#include "hylab/measures.hpp"

#include <vector>

namespace hylab {

/// Point in the closed right half-plane. The boundary Re z = 0 is admitted
/// only where the transform extends by continuity (f in L1, or L1+L2).
struct HalfPlanePoint {
    Complex z;
    explicit HalfPlanePoint(Complex zz) : z(zz) {
        if (z.real() < 0.0) throw CurveError("evaluation point has Re z < 0");
    }
};

/// L f(z) = int_0^inf f(t) e^{-zt} dt.
///
/// Exact antiderivatives are used for the three function variants unless the
/// scheme requests the adaptive rule, which chunks the integrand at the
/// oscillation period 2*pi/|Im z| before refinement. Boundary points
/// (Re z = 0) under the adaptive rule are evaluated at Re z = 1e-8 with a
/// Richardson consistency check at 2e-8.
Complex laplace_at(const FunctionSpec& f, Complex z, const QuadratureScheme& quad = {});

struct RaySample {
    double rho = 0.0;
    Complex value{0.0, 0.0};
    double domination = 0.0; // L_0|f|(rho cos theta), always >= |value|
};

/// L_theta f(rho) = L f(rho e^{i theta}) along a grid, together with the
/// domination bound used for cross-checking.
std::vector<RaySample> laplace_ray(const FunctionSpec& f, double theta,
                                   const std::vector<double>& rho_grid,
                                   const QuadratureScheme& quad = {});

struct CurveSample {
    int piece = 0;
    double s = 0.0;       // arclength parameter on the piece
    Complex z{0.0, 0.0};  // curve point
    Complex value{0.0, 0.0};
    double weight = 0.0;  // arclength quadrature weight
};

/// Samples of L f along a compound curve with trapezoid arclength weights,
/// suitable for downstream L^p'(gamma) norms. Throws CurveError if the curve
/// leaves the closed right half-plane.
std::vector<CurveSample> laplace_curve(const FunctionSpec& f, const CompoundCurve& curve,
                                       int samples_per_piece, const QuadratureScheme& quad = {});

/// || L f ||_{L^q(gamma)} by per-segment adaptive quadrature (sharper than
/// the sampled trapezoid when the integrand is smooth along segments).
double laplace_curve_norm(const FunctionSpec& f, const CompoundCurve& curve, double q,
                          double rel_tol = 1e-8);

struct SupSearchResult {
    double value = 0.0;
    double argmax = 0.0;  // x (maximal transform) or theta (angular maximal)
    double resolution = 0.0;
};

/// L* f(y) = sup_{x>0} |L f(x+iy)|: log-spaced bracket on [1e-6, 1e6] followed
/// by golden-section refinement.
SupSearchResult maximal_laplace(const FunctionSpec& f, double y, int grid_points = 241);

/// Angular maximal transform sup over |theta| <= pi/2 of |L f(r e^{i theta})|
/// (endpoints included; diagnostic only).
SupSearchResult angular_maximal(const FunctionSpec& f, double r, int grid_points = 721);

/// Largest time scale of f that drives oscillation of L f along vertical
/// sweeps (support top for step functions, a decay multiple otherwise).
double oscillation_scale(const FunctionSpec& f);

} // namespace hylab
