#include <doctest.h>

#include "hylab/errors.hpp"
#include "hylab/inequality_lab.hpp"
#include "hylab/integral_ops.hpp"

#include <cmath>
#include <sstream>

using namespace hylab;

namespace {
const FunctionSpec chi11 = FunctionSpec::indicator(-1.0, 1.0);
}

TEST_CASE("Poisson extension") {
    // (1/pi)(atan 1 - atan(-1)) = 1/2 at z = i
    CHECK(poisson(chi11, {0.0, 1.0}).real() == doctest::Approx(0.5).epsilon(1e-14));
    // wide plateau approximates the kernel normalization
    const FunctionSpec wide = FunctionSpec::indicator(-2e4, 2e4);
    CHECK(poisson(wide, {0.3, 2.0}).real() == doctest::Approx(1.0).epsilon(1e-4));
    // far-field bound ||u||_1/(pi y)
    const double far = std::abs(poisson(chi11, {0.0, 1e6}));
    CHECK(far <= 2.0 / (M_PI * 1e6) * (1.0 + 1e-9));
    CHECK_THROWS_AS(poisson(chi11, {0.0, -1.0}), CurveError);
    // quadrature oracle
    const Complex q = poisson(chi11, {0.4, 0.7}, QuadratureScheme::adaptive(1e-10));
    CHECK(std::abs(q - poisson(chi11, {0.4, 0.7})) < 1e-9);
}

TEST_CASE("truncated kernel and its envelope") {
    CHECK(envelope_F(0.0) == 1.0);
    CHECK(envelope_F(1.0) == doctest::Approx(0.5 + 1.0 / M_PI).epsilon(1e-14));
    for (double t = 1.0; t <= 100.0; t *= 1.7)
        CHECK(t * envelope_F(t) <= 4.0 / M_PI + 0.1);
    // quadrature oracle for F: integral of the weight rho_1
    QuadratureScheme q = QuadratureScheme::adaptive(1e-11);
    const double direct = integrate_real(
        [](double s) { return 4.0 / M_PI * s * s / std::pow(1.0 + s * s, 2.0); }, 1.0, 2e5, q);
    CHECK(envelope_F(1.0) == doctest::Approx(direct + 4.0 / (M_PI * 2e5)).epsilon(1e-4));

    // u * P_h below F(h/y) U(x) throughout the window
    const double h = 0.5, y = 0.8, x0 = 0.3;
    const Complex vh = truncated_poisson(chi11, {x0, y}, h);
    for (int k = 1; k < 10; ++k) {
        const double x = x0 - h + 2.0 * h * k / 10.0;
        CHECK(std::abs(vh) <= envelope_F(h / y) * hl_maximal(chi11, x, false) * (1.0 + 1e-12));
    }
    // truncation agrees with the plain kernel when h is tiny
    CHECK(std::abs(truncated_poisson(chi11, {0.2, 1.0}, 1e-9) - poisson(chi11, {0.2, 1.0})) <
          1e-7);
}

TEST_CASE("Hilbert transform of an indicator") {
    CHECK(hilbert_transform(chi11, 0.0).real() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(hilbert_transform(chi11, 2.0).real() ==
          doctest::Approx(std::log(3.0) / M_PI).epsilon(1e-14));
    CHECK(hilbert_transform(chi11, 0.5).real() ==
          doctest::Approx(std::log(3.0) / M_PI).epsilon(1e-14));
    CHECK_THROWS_AS(hilbert_transform(chi11, 1.0), SingularityError);
    // principal-value oracle by symmetric excision
    CHECK(hilbert_transform_pv(chi11, 0.5).real() ==
          doctest::Approx(std::log(3.0) / M_PI).epsilon(1e-7));
    CHECK(hilbert_transform_pv(chi11, 2.0).real() ==
          doctest::Approx(std::log(3.0) / M_PI).epsilon(1e-9));
}

TEST_CASE("Cauchy integral and its decomposition") {
    // real part is the Poisson extension
    const Complex s = cauchy_integral(chi11, {0.0, 1.0});
    CHECK(s.real() == doctest::Approx(0.5).epsilon(1e-13));
    // shrinking bump: S u(i) -> mass / pi for u concentrated at 0
    for (double w : {0.1, 0.01, 0.001}) {
        const FunctionSpec bump = FunctionSpec::indicator(-w / 2, w / 2, {1.0 / w, 0.0});
        CHECK(std::abs(cauchy_integral(bump, {0.0, 1.0}) - Complex(1.0 / M_PI, 0.0)) <
              0.5 * w);
    }
}

TEST_CASE("maximal function: exact candidate enumeration") {
    CHECK(hl_maximal(chi11, 0.0, true) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(hl_maximal(chi11, 2.0, true) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(hl_maximal(chi11, 2.0, false) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    // dense grid oracle for the centered variant
    double best = 0.0;
    for (int i = 1; i <= 40000; ++i) {
        const double a = 6.0 * i / 40000.0;
        const double lo = std::max(-1.0, 2.0 - a), hi = std::min(1.0, 2.0 + a);
        if (hi > lo) best = std::max(best, (hi - lo) / (2.0 * a));
    }
    CHECK(hl_maximal(chi11, 2.0, true) >= best - 1e-9);
    // uncentered dominates centered
    for (double x : {-1.5, 0.2, 0.9, 3.0})
        CHECK(hl_maximal(chi11, x, false) >= hl_maximal(chi11, x, true) - 1e-14);
}

TEST_CASE("weak-type report for the Poisson extension on a curve") {
    CompoundCurve seg;
    seg.pieces.push_back(Polyline::of({{-5.0, 1.0}, {5.0, 1.0}}));
    ProjectionCertificate cert;
    cert.k_xi = 1.0;
    cert.k_eta = 0.0;
    WeakTypeOptions opt;
    opt.samples_per_piece = 3000;
    const auto rep = weak_type_poisson(chi11, MeasureSpec(MeasureSpec::Arclength{seg}), cert, opt);
    CHECK(rep.constant == doctest::Approx(3.0));
    CHECK(rep.max_ratio <= 1.0);
    CHECK(rep.max_ratio > 0.0);
    // zero function: all super-level measures vanish
    const FunctionSpec zero = FunctionSpec::indicator(0.0, 1.0, {0.0, 0.0});
    const auto zrep = weak_type_poisson(zero, MeasureSpec(MeasureSpec::Arclength{seg}), cert, opt);
    CHECK(zrep.max_ratio == 0.0);
}

TEST_CASE("weak-type CSV emission") {
    WeakTypeReport rep;
    rep.lambdas = {0.5, 1.0};
    rep.measured = {2.0, 0.5};
    rep.bound = {4.0, 2.0};
    std::ostringstream out;
    write_weak_type_csv(rep, out);
    CHECK(out.str() == "lambda,measured,bound,ratio\n0.5,2,4,0.5\n1,0.5,2,0.25\n");
}

TEST_CASE("weak-type bound on the integer comb") {
    WeakTypeOptions opt;
    opt.samples_per_piece = 800;
    const auto rep = weak_type_poisson_comb(FunctionSpec::indicator(-0.7, 1.3), 1.0, 12, opt);
    CHECK(rep.constant == doctest::Approx(2.0 * (1.0 / M_PI + 3.0)));
    CHECK(rep.max_ratio <= 1.0);
}

TEST_CASE("closed-form Poisson/Cauchy bounds") {
    const auto b = lp_poisson_cauchy_norms(2.0, 1.0, 0.0);
    CHECK(b.k3 == doctest::Approx(2.0 * std::sqrt(6.0)).epsilon(1e-14));
    CHECK(pichorides_constant(2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(b.k4 == doctest::Approx(2.0 * b.k3).epsilon(1e-14));
    CHECK(cauchy_bound_p2(1.0, 1.0) == doctest::Approx(4.0 * std::sqrt(7.0)).epsilon(1e-14));
    // the general p = 2 value sits under the coarsened constant
    const auto g = lp_poisson_cauchy_norms(2.0, 1.0, 1.0);
    CHECK(g.k4 <= cauchy_bound_p2(1.0, 1.0) * (1.0 + 1e-12));
    CHECK_THROWS_AS(lp_poisson_cauchy_norms(1.0, 1.0, 0.0), ExponentRangeError);
}
