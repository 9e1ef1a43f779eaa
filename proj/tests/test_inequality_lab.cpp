#include <doctest.h>

#include "hylab/errors.hpp"
#include "hylab/inequality_lab.hpp"
#include "hylab/laplace.hpp"
#include "hylab/spectral.hpp"
#include "hylab/verify.hpp"

#include <cmath>

using namespace hylab;

TEST_CASE("ladder constants at their quoted values") {
    CHECK(ladder::k5(2, 1, 1, 1, 1) == doctest::Approx(std::sqrt(224.0 * M_PI)).epsilon(1e-14));
    CHECK(ladder::k5(1, 1, 1, 1, 1) == 1.0); // trivial endpoint
    CHECK(ladder::k6(2) == doctest::Approx(std::sqrt(224.0 * M_PI)).epsilon(1e-14));
    CHECK(ladder::k7(2) == doctest::Approx(std::sqrt(16.0 * 224.0 * M_PI)).epsilon(1e-14));
    CHECK(ladder::k8(2, 1.0) == doctest::Approx(std::sqrt(64.0 * M_PI)).epsilon(1e-14));
    CHECK(ladder::k8_rot(2, 1.0) ==
          doctest::Approx(std::sqrt(36.0 * 64.0 * M_PI)).epsilon(1e-14));
    CHECK(ladder::k9(2, 1.0) == doctest::Approx(std::sqrt(1344.0 * M_PI * 3.0)).epsilon(1e-14));
    CHECK(ladder::k10(2) == doctest::Approx(std::sqrt(192.0 * M_PI)).epsilon(1e-14));
    CHECK(ladder::k11(2, 1, 2.0) == doctest::Approx(std::sqrt(13824.0)).epsilon(1e-14));
    // the quoted K8 coarsens the master value (sqrt(1+lambda^2) -> 1+lambda^2)
    CHECK(ladder::k8(1.6, 2.5) >=
          ladder::k5(1.6, 0, lipschitz_k(2.5), 0, lipschitz_k(2.5)) * (1.0 - 1e-14));
}

TEST_CASE("master bound on a ray measure") {
    // arclength on the pi/4 ray segment: measured ratio far below sqrt(224 pi)
    CompoundCurve ray;
    ray.pieces.push_back(
        Polyline::of({std::polar(1e-3, M_PI / 4), std::polar(50.0, M_PI / 4)}));
    ray.cls.kind = CurveClassKind::Monotone;
    const FunctionSpec f = FunctionSpec::exp_decay();
    ProjectionCertificate lo, hi;
    lo.alpha = -M_PI / 2;
    lo.k_xi = lo.k_eta = 1.0;
    hi.alpha = M_PI / 2;
    hi.k_xi = hi.k_eta = 1.0;
    const VerificationRun run = master_theorem_check(f, ray, lo, hi, 2.0);
    CHECK(run.pass);
    CHECK(run.rhs == doctest::Approx(std::sqrt(224.0 * M_PI)));
    // the ray norm itself is bounded by K1(pi/4)
    CHECK(run.lhs <= k1_norm(M_PI / 4) * (1.0 + 1e-6));
    CHECK(run.lhs > 0.5); // sanity: a genuine measurement, not numerical dust
}

TEST_CASE("sector representation agrees with the transform") {
    const FunctionSpec f = FunctionSpec::indicator(0.0, 1.0);
    const Complex z = std::polar(1.0, M_PI / 8);
    const Complex rep = cauchy_sector_representation(f, z, -M_PI / 4, M_PI / 4);
    CHECK(std::abs(rep - laplace_at(f, z)) < 1e-6);
    CHECK_THROWS_AS(cauchy_sector_representation(f, std::polar(1.0, M_PI / 4), -M_PI / 4,
                                                 M_PI / 4),
                    SectorError); // boundary ray
}

TEST_CASE("p > 2 counterexample slopes and growth") {
    std::vector<double> eps;
    for (int i = 0; i < 9; ++i) eps.push_back(1e-4 * std::pow(100.0, i / 8.0));
    for (double p : {2.5, 3.0, 4.0, 8.0}) {
        const SlopeReport r = p_gt_2_counterexample(p, eps);
        CHECK(std::abs(r.slope - r.target) <= 0.05 * std::abs(r.target));
    }
    // boundary case p = 2: no blow-up
    const SlopeReport r2 = p_gt_2_counterexample(2.0, eps);
    CHECK(std::abs(r2.slope) < 0.02);
    // ratio growth between eps = 1e-2 and 1e-3 at p = 3 is about 10^{1/3}
    const SlopeReport r3 = p_gt_2_counterexample(3.0, {1e-3, 1e-2});
    CHECK(r3.ratio[0] / r3.ratio[1] ==
          doctest::Approx(std::pow(10.0, 1.0 / 3.0)).epsilon(0.02));
}

TEST_CASE("weight admissibility") {
    std::vector<double> grid;
    for (int i = 0; i <= 120; ++i) grid.push_back(std::pow(10.0, -5.0 + 8.0 * i / 120.0));
    const BloomReport flat = bloom_condition_check(FunctionSpec::indicator(0.0, 1e6), grid);
    CHECK(flat.admissible);
    CHECK(flat.sup_x_lw <= 1.0 + 1e-12);
    const BloomReport dec =
        bloom_condition_check(FunctionSpec(ExpMonomial{1.0, {1e-3, 0.0}, {1.0, 0.0}}), grid);
    CHECK(dec.admissible);
}

TEST_CASE("comb tightness family") {
    const std::vector<double> ks{10.0, 100.0, 1000.0, 10000.0};
    const CombTightnessReport r = comb_tightness(2.0, 0.5, 2.0, ks);
    CHECK(r.delta == doctest::Approx(0.25));
    CHECK(r.norm_deviation < 1e-12); // ||f_k||_p = 1 exactly
    CHECK(std::abs(r.fitted_exponent - 0.25) <= 0.03);
    CHECK(r.cond_c_worst <= r.cond_c_allowed * (1.0 + 1e-9));
    // delta <= 0: bounded weighted integrals
    const CombTightnessReport b = comb_tightness(2.0, 1.0, 2.0, ks);
    CHECK(std::abs(b.fitted_exponent) <= 0.03);
}

TEST_CASE("vertical comb identity for the exponential") {
    const FunctionSpec f = FunctionSpec::exp_decay();
    const VertCombReport rep = vertical_comb_identity(f, 1.0, 50);
    CHECK(rep.residual <= 1e-4);
    CHECK(rep.pass);
    CHECK(rep.rhs <= rep.hilbert_route_bound);
    CHECK_THROWS_AS(vertical_comb_identity(f, 1.0, 0), TruncationError);
    // oracle: the folded sum has the geometric closed form
    // g(x,t) = e^{-t(1+x)} / (1 - e^{-2 pi (1+x)}), so the double integral side
    // can be recomputed independently
    QuadratureScheme q = QuadratureScheme::adaptive(1e-10);
    const double direct =
        2.0 * M_PI *
        integrate_real(
            [&](double x) {
                const double geo = 1.0 - std::exp(-2.0 * M_PI * (1.0 + x));
                // int_0^{2pi} e^{-2t(1+x)} dt = (1 - e^{-4pi(1+x)})/(2(1+x))
                return (1.0 - std::exp(-4.0 * M_PI * (1.0 + x))) /
                       (2.0 * (1.0 + x) * geo * geo);
            },
            0.0, 1.0, q);
    CHECK(rep.rhs == doctest::Approx(direct).epsilon(1e-7));
}

TEST_CASE("Hilbert matrix finite sections") {
    const auto eigs = hilbert_matrix_top_eigenvalues({2, 4, 8, 16});
    CHECK(eigs[0] == doctest::Approx(2.0 / 3.0 + std::sqrt(13.0) / 6.0).epsilon(1e-12));
    for (std::size_t i = 1; i < eigs.size(); ++i) CHECK(eigs[i] >= eigs[i - 1]);
    for (double e : eigs) CHECK(e < M_PI);
}

TEST_CASE("maximal Paley-Wiener check: constant level") {
    const FunctionSpec f = FunctionSpec::exp_decay();
    Staircase b;
    b.levels = {1.0};
    const VerificationRun run = maximal_pw_check(f, 2.0, b);
    // LHS^2 = int dy/(4 + y^2) = pi/2 (plus the conservative tail)
    CHECK(run.lhs == doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(2e-2));
    CHECK(run.rhs == doctest::Approx(std::sqrt(192.0 * M_PI) / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(run.pass);
    // sup_x of the vertical line integral at p = 2 stays under 2 pi ||f||_2^2
    for (double x : {0.01, 0.1, 1.0}) {
        const double I = paley_wiener_line_integral(f, x);
        CHECK(I <= 2.0 * M_PI * 0.5 * (1.0 + 1e-2));
    }
}

TEST_CASE("restricted angular bound on a radial curve") {
    Rng rng(404u);
    const FunctionSpec f = FunctionSpec::exp_decay();
    CompoundCurve curve = random_radial_curve(rng, 1.45, 1, 2.0);
    const VerificationRun run = restricted_angular_check(f, curve, 2.0);
    CHECK(run.pass);
    CHECK(run.rhs == doctest::Approx(ladder::k11(2.0, 1, 2.0)));
    CHECK(run.lhs < run.rhs * 0.2); // the bound is generous by design
}

TEST_CASE("staircase levels") {
    Staircase b;
    b.y_breaks = {0.0, 2.0};
    b.levels = {3.0, 1.0, 2.0};
    CHECK(b.level_at(-1.0) == 3.0);
    CHECK(b.level_at(1.0) == 1.0);
    CHECK(b.level_at(5.0) == 2.0);
}
