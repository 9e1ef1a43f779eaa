#include <doctest.h>

#include "hylab/errors.hpp"
#include "hylab/inequality_lab.hpp"
#include "hylab/laplace.hpp"
#include "hylab/rng.hpp"

#include <cmath>

using namespace hylab;

TEST_CASE("laplace_at: closed forms and quadrature oracle") {
    const FunctionSpec chi01 = FunctionSpec::indicator(0.0, 1.0);
    // (1 - e^{-z})/z at z = 1
    CHECK(std::abs(laplace_at(chi01, {1.0, 0.0}) - Complex(1.0 - std::exp(-1.0), 0.0)) < 1e-14);
    CHECK(std::abs(laplace_at(chi01, {1.0, 0.0}, QuadratureScheme::adaptive(1e-11)) -
                   Complex(1.0 - std::exp(-1.0), 0.0)) < 1e-10);
    // boundary point z = i: |L chi(i)| = |1 - e^{-i}| = 2 sin(1/2)
    CHECK(std::abs(std::abs(laplace_at(chi01, {0.0, 1.0})) - 2.0 * std::sin(0.5)) < 1e-13);
    CHECK(std::abs(std::abs(laplace_at(chi01, {0.0, 1.0}, QuadratureScheme::adaptive(1e-10))) -
                   2.0 * std::sin(0.5)) < 1e-4); // eps-shifted boundary evaluation
    // power family along the real axis: Gamma(a)(x+1)^{-a}
    for (double a : {0.5, 1.0, 2.3})
        for (double x : {0.5, 1.0, 2.0}) {
            const FunctionSpec u{ExpMonomial{a, {1.0, 0.0}, {1.0, 0.0}}};
            CHECK(std::abs(laplace_at(u, {x, 0.0}).real() -
                           std::tgamma(a) * std::pow(x + 1.0, -a)) < 1e-12);
        }
    // Gauss-Laguerre option on the real axis
    const FunctionSpec u{ExpMonomial{2.0, {1.0, 0.0}, {1.0, 0.0}}};
    QuadratureScheme gl;
    gl.rule = QuadratureScheme::Rule::GaussLaguerre;
    CHECK(std::abs(laplace_at(u, {1.5, 0.0}, gl).real() - std::tgamma(2.0) * std::pow(2.5, -2.0)) <
          1e-10);
    CHECK_THROWS_AS(laplace_at(chi01, {-0.1, 0.0}), CurveError);
    // the boundary extends by continuity from L^1 cap L^2 only
    const FunctionSpec notl2{ExpMonomial{0.4, {1.0, 0.0}, {1.0, 0.0}}};
    CHECK_THROWS_AS(laplace_at(notl2, {0.0, 1.0}), DivergentIntegralError);
    CHECK(std::isfinite(std::abs(laplace_at(notl2, {0.01, 1.0}))));
}

TEST_CASE("laplace_at rejects support left of the origin") {
    const FunctionSpec u = FunctionSpec::indicator(-1.0, 1.0);
    CHECK_THROWS_AS(laplace_at(u, {1.0, 0.0}), UnsupportedFunctionError);
}

TEST_CASE("laplace_ray: values and domination") {
    const FunctionSpec f = FunctionSpec::exp_decay();
    const auto r0 = laplace_ray(f, 0.0, {1.0});
    CHECK(std::abs(r0[0].value - Complex(0.5, 0.0)) < 1e-14);
    const auto r4 = laplace_ray(f, M_PI / 4, {1.0});
    CHECK(std::abs(std::abs(r4[0].value) - 1.0 / std::sqrt(2.0 + std::sqrt(2.0))) < 1e-13);
    // |L_theta f(rho)| <= L_0|f|(rho cos theta), and the sup-kernel bound
    Rng rng(505u);
    for (int i = 0; i < 20; ++i) {
        const FunctionSpec g = random_simple(rng, 6);
        const double theta = rng.uniform(-1.5, 1.5);
        const double rho = std::pow(10.0, rng.uniform(-1.5, 1.5));
        const auto s = laplace_ray(g, theta, {rho});
        CHECK(std::abs(s[0].value) <= s[0].domination * (1.0 + 1e-11));
        const double minf = lp_norm(g, kInf);
        CHECK(std::abs(s[0].value) <= minf / (rho * std::cos(theta)) + 1e-12);
    }
}

TEST_CASE("boundary ray is the Fourier case") {
    const FunctionSpec chi01 = FunctionSpec::indicator(0.0, 1.0);
    const auto s = laplace_ray(chi01, M_PI / 2, {1.0});
    CHECK(std::abs(std::abs(s[0].value) - 2.0 * std::sin(0.5)) < 1e-13);
    CHECK(std::abs(s[0].value) <= s[0].domination * (1.0 + 1e-11)); // here L_0|f|(0+) = ||f||_1
}

TEST_CASE("sampled staircases approximate their generator") {
    SampledFunction s;
    const int n = 2000;
    for (int i = 0; i <= n; ++i) {
        const double t = 12.0 * i / n;
        s.grid.push_back(t);
        s.values.push_back({std::exp(-t), 0.0});
    }
    const FunctionSpec f{std::move(s)};
    // left-sample staircase overshoots e^{-t}; first-order agreement in the cell width
    const Complex v = laplace_at(f, {1.0, 0.5});
    CHECK(std::abs(v - 1.0 / Complex(2.0, 0.5)) < 2e-3);
    CHECK(lp_norm(f, 2.0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(2e-3));
}

TEST_CASE("laplace_curve: ray reduction, vertical segment, compound additivity") {
    const FunctionSpec f = FunctionSpec::exp_decay();
    CompoundCurve ray;
    ray.pieces.push_back(Polyline::of({{1.0, 0.0}, {2.0, 0.0}}));
    const auto samples = laplace_curve(f, ray, 5);
    for (const CurveSample& s : samples)
        CHECK(std::abs(s.value - 1.0 / (1.0 + s.z)) < 1e-13);
    // weights integrate the constant 1 to the arclength
    double total = 0.0;
    for (const CurveSample& s : samples) total += s.weight;
    CHECK(total == doctest::Approx(1.0));

    const FunctionSpec chi01 = FunctionSpec::indicator(0.0, 1.0);
    CompoundCurve vert;
    vert.pieces.push_back(Polyline::of({{1.0, 0.0}, {1.0, 1.0}}));
    for (const CurveSample& s : laplace_curve(chi01, vert, 4)) {
        const Complex z = s.z;
        CHECK(std::abs(s.value - (1.0 - std::exp(-z)) / z) < 1e-13);
    }

    CompoundCurve both;
    both.pieces = {ray.pieces[0], vert.pieces[0]};
    const auto all = laplace_curve(f, both, 4);
    CHECK(all.size() == 8);
    CHECK(all[0].piece == 0);
    CHECK(all[4].piece == 1);

    CompoundCurve bad;
    bad.pieces.push_back(Polyline::of({{-0.5, 0.0}, {1.0, 1.0}}));
    CHECK_THROWS_AS(laplace_curve(f, bad, 4), CurveError);
}

TEST_CASE("maximal transform along horizontal lines") {
    const FunctionSpec f = FunctionSpec::exp_decay();
    const auto m0 = maximal_laplace(f, 0.0);
    CHECK(m0.value == doctest::Approx(1.0).epsilon(1e-5)); // sup of 1/(x+1) as x -> 0+
    const auto m2 = maximal_laplace(f, 2.0);
    CHECK(m2.value == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-5));
    const FunctionSpec chi01 = FunctionSpec::indicator(0.0, 1.0);
    CHECK(maximal_laplace(chi01, 0.0).value == doctest::Approx(1.0).epsilon(1e-5));
    // sup property against random probes
    Rng rng(99u);
    for (int k = 0; k < 30; ++k) {
        const double x = std::pow(10.0, rng.uniform(-6.0, 6.0));
        CHECK(std::abs(laplace_at(f, {x, 2.0})) <= m2.value * (1.0 + 1e-9));
    }
}

TEST_CASE("angular maximal transform") {
    const FunctionSpec f = FunctionSpec::exp_decay();
    // sup_theta 1/|e^{i theta} + 1| on r = 1 is attained at the boundary rays
    const auto a = angular_maximal(f, 1.0);
    CHECK(a.value == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-6));
    CHECK(std::abs(std::abs(a.argmax) - M_PI / 2) < 1e-2);
    // theta = 0 is always in the feasible set
    const FunctionSpec chi01 = FunctionSpec::indicator(0.0, 1.0);
    const double lower = (1.0 - std::exp(-0.5)) / 0.5;
    CHECK(angular_maximal(chi01, 0.5).value >= lower * (1.0 - 1e-9));
}
