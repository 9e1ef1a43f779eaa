#pragma once

#include "hylab/quadrature.hpp"
#include "hylab/rng.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hylab {

// ---------------------------------------------------------------------------
// geometry

/// Arclength-parametrized polyline. The parameter runs over [0, length()].
struct Polyline {
    std::vector<Complex> vertices;
    std::vector<double> cum; // cumulative arclength, cum[0] = 0

    static Polyline of(std::vector<Complex> vs);
    double length() const { return cum.back(); }
    Complex point_at(double s) const;
    /// Piece of this polyline between parameters s0 < s1, as segment endpoints.
    std::vector<std::pair<Complex, Complex>> segments_between(double s0, double s1) const;
};

enum class CurveClassKind { Generic, Monotone, Lipschitz, Convex, Radial, Comb, Boxed };

struct CurveClassInfo {
    CurveClassKind kind = CurveClassKind::Generic;
    double lambda = 0.0;          // Lipschitz constant
    double phi = 0.0;             // sector aperture for radial curves
    int nu = 1;                   // run-length parameter for radial/comb/boxed
    double c = 1.0;               // growth/spacing parameter
    bool horizontal = true;       // comb orientation (vertical teeth on the x axis)
    std::vector<double> box_a;    // boxed curves: box side abscissae (size pieces+1)
    std::vector<double> box_b;    // boxed curves: box heights (size pieces)
};

/// Finite family of rectifiable polylines carrying the sum of their
/// arclength measures.
struct CompoundCurve {
    std::vector<Polyline> pieces;
    CurveClassInfo cls;

    double total_length() const;
    /// Max over vertices of -Re z (0 when the curve stays in Re z >= 0).
    double halfplane_violation() const;
};

/// Parameter interval [s0,s1] on one piece.
struct SubArc {
    int piece = 0;
    double s0 = 0.0, s1 = 0.0;
};

struct Rect {
    double x0, y0, x1, y1;
    double area() const { return (x1 - x0) * (y1 - y0); }
};

/// Subsets we can measure: finite unions of sub-arcs or of rectangles.
using SubsetSpec = std::variant<std::vector<SubArc>, std::vector<Rect>>;

struct Interval {
    double a, b;
};

/// Total length of a union of intervals (overlaps merged).
double union_length(std::vector<Interval> xs);

struct ProjPair {
    double xi = 0.0, eta = 0.0;
};

/// Lebesgue measures of the projections of A onto the alpha-rotated axes
/// xi = x cos a + y sin a, eta = -x sin a + y cos a. Empty subsets give zeros.
ProjPair projection_lengths(const CompoundCurve& curve, const std::vector<SubArc>& arcs,
                            double alpha);
ProjPair projection_lengths(const std::vector<Rect>& rects, double alpha);

// ---------------------------------------------------------------------------
// measures

/// Exact rational, normalized, for Cantor-square masses.
struct Rational {
    long long num = 0, den = 1;
    static Rational of(long long n, long long d);
    Rational operator+(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<=(const Rational& o) const;
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Axis-parallel rectangle with corners at triadic rationals k/3^m.
struct TriadicRect {
    long long ix0, iy0, ix1, iy1; // corner numerators
    int m;                        // common denominator exponent: coordinates are k/3^m
};

/// mu_n(A) for the Cantor-square iterates: mu_0 is Lebesgue on the unit
/// square, and mu_{n+1} reweights the four corner push-forwards with
/// (1/3, 1/6, 1/3, 1/6) (diagonal squares heavy).
Rational cantor_measure(int level, const TriadicRect& rect);

/// Dense exact table of mu_n at grid resolution 3^-res (res >= n not required;
/// res must be >= 1). Queries are O(1) via prefix sums.
class CantorTable {
public:
    CantorTable(int level, int res);
    /// Mass of [ix0,ix1] x [iy0,iy1] / 3^res, exact.
    Rational mass(long ix0, long iy0, long ix1, long iy1) const;
    long long mass_num(long ix0, long iy0, long ix1, long iy1) const; // over common_den()
    long long common_den() const { return den_; }
    int res() const { return res_; }

private:
    int level_, res_;
    long n_ = 0;
    long long den_ = 1;
    std::vector<long long> prefix_; // (n+1)^2 inclusive prefix sums of cell numerators
};

class MeasureSpec {
public:
    struct Arclength {
        CompoundCurve curve;
    };
    struct LebesgueOnSet {
        std::vector<Rect> region; // pairwise disjoint
    };
    struct CantorSquare {
        int level;
    };

    explicit MeasureSpec(Arclength a) : v_(std::move(a)) {}
    explicit MeasureSpec(LebesgueOnSet l) : v_(std::move(l)) {}
    explicit MeasureSpec(CantorSquare c);

    bool is_arclength() const { return std::holds_alternative<Arclength>(v_); }
    bool is_lebesgue() const { return std::holds_alternative<LebesgueOnSet>(v_); }
    bool is_cantor() const { return std::holds_alternative<CantorSquare>(v_); }
    const CompoundCurve& curve() const { return std::get<Arclength>(v_).curve; }
    const std::vector<Rect>& region() const { return std::get<LebesgueOnSet>(v_).region; }
    int cantor_level() const { return std::get<CantorSquare>(v_).level; }

    /// mu(A) for the supported subset kinds.
    double mass(const SubsetSpec& A) const;

private:
    std::variant<Arclength, LebesgueOnSet, CantorSquare> v_;
};

// ---------------------------------------------------------------------------
// certificates

struct ProjectionCertificate {
    double alpha = 0.0;
    double k_xi = 0.0;
    double k_eta = 0.0;
    enum class Provenance { ClassFormula, Empirical } provenance = Provenance::ClassFormula;
    std::string class_name;  // for class formulas
    long budget = 0;         // for empirical searches
    double worst_ratio = 0.0;
    std::vector<SubArc> worst_witness;
    bool budget_exhausted = false;
};

struct WpCheckResult {
    bool holds = false;
    double ratio = 0.0;
    double mass = 0.0;
    double denom = 0.0;
};

/// ratio = mu(A) / (k_xi |A_xi| + k_eta |A_eta|); holds iff ratio <= 1+tol.
/// A zero denominator with positive mass is a certificate violation and throws.
WpCheckResult wp_check(const MeasureSpec& mu, const SubsetSpec& A,
                       const ProjectionCertificate& cert, double tol = 1e-9);

/// Closed-form certificate for the declared class of the curve. The class
/// preconditions are verified (monotone coordinates, Lipschitz bound,
/// convexity, radial run growth, comb/box aspect conditions), and for the
/// radial/comb/boxed classes the measured projection multiplicity is checked
/// against its analytic bound. `alpha` selects the rotated frame for the
/// comb/boxed classes (ignored by the axis-aligned classes).
ProjectionCertificate class_certificate(const CompoundCurve& curve, double alpha = 0.0);

/// Projection multiplicity bounds used in the class verification.
double radial_multiplicity_bound(double phi, int nu, double c);   // log sec(phi)/log c + nu + 2
double comb_multiplicity_bound(double alpha, int nu, double c);   // tan(alpha)/c + nu + 1
double boxed_multiplicity_bound(double alpha, int nu, double c);  // tan(alpha)/c + nu + 2

/// Class constants.
double lipschitz_k(double lambda);                  // sqrt(1+lambda^2)
double radial_k(double phi, int nu, double c);      // (log sec phi/log c + nu + 2) sec phi
double comb_k1(double alpha, int nu, double c);     // sec(a)/c + (nu+1) csc(a)
double comb_k2(double alpha, int nu, double c);     // csc(a)/c + (nu+1) sec(a)
double boxed_k1(double alpha, int nu, double c);    // 4(sec(a)/c + (nu+2) csc(a))
double boxed_k2(double alpha, int nu, double c);    // 4(csc(a)/c + (nu+2) sec(a))

struct SearchBudget {
    long candidates = 2000;
    int max_arcs = 6;
    int greedy_steps = 40;
};

/// Adversarial search for tight constants at a fixed angle: maximizes
/// mu(A)/(t|A_xi| + (1-t)|A_eta|) over generated sub-arc unions and returns
/// the tightest (k_xi, k_eta) found with the worst witness. Deterministic
/// for a fixed seed.
ProjectionCertificate empirical_certificate(const MeasureSpec& mu, double alpha,
                                            const SearchBudget& budget, std::uint64_t seed,
                                            double eta_weight = 0.0);

// ---------------------------------------------------------------------------
// the folded-line example x(t) = t - 2 sin t

struct FoldCurveReport {
    double j_lo = 0.0, j_hi = 0.0; // J_0 endpoints around zero
    double density_at(double x) const;
    bool certificate_holds = false; // (k_x,k_y) = (2,0) verified on sampled unions
    double worst_ratio = 0.0;
};

FoldCurveReport fold_curve_measure();

} // namespace hylab
