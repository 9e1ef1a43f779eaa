#include <doctest.h>

#include "hylab/errors.hpp"
#include "hylab/quadrature.hpp"

#include <cmath>

using namespace hylab;

TEST_CASE("adaptive rule on smooth and endpoint-singular integrands") {
    auto r = integrate([](double x) { return Complex(x * x * x, 0.0); }, 0.0, 1.0);
    CHECK(std::abs(r.value.real() - 0.25) < 1e-13);
    // integrable singularity x^{-1/2} at zero (deep bisection towards 0)
    QuadratureScheme q = QuadratureScheme::adaptive(1e-7);
    q.max_depth = 60;
    r = integrate([](double x) { return x > 0.0 ? Complex(1.0 / std::sqrt(x), 0.0) : Complex{}; },
                  0.0, 1.0, q);
    CHECK(std::abs(r.value.real() - 2.0) < 1e-6);
}

TEST_CASE("oscillatory chunking keeps accuracy for large frequencies") {
    const double w = 387.0;
    auto r = integrate_oscillatory([w](double x) { return Complex(std::cos(w * x), 0.0); }, 0.0,
                                   3.0, w);
    CHECK(std::abs(r.value.real() - std::sin(3.0 * w) / w) < 1e-12);
}

TEST_CASE("half-line integral of a decaying oscillation") {
    // int_0^inf e^{-t} e^{-5it} dt = 1/(1+5i)
    auto r = integrate_halfline([](double t) { return std::exp(Complex(-t, -5.0 * t)); }, 1.0,
                                5.0);
    const Complex expected = 1.0 / Complex(1.0, 5.0);
    CHECK(std::abs(r.value - expected) < 1e-12);
    CHECK_THROWS_AS(integrate_halfline([](double) { return Complex(1.0, 0.0); }, 0.0, 0.0),
                    DivergentIntegralError);
}

TEST_CASE("Gauss-Laguerre nodes integrate polynomials against e^{-t}") {
    const auto& gl = GaussLaguerre::cached(24);
    const Complex v = gl.apply([](double t) { return Complex(t * t * t * t, 0.0); });
    CHECK(std::abs(v.real() - 24.0) < 1e-9);
    const Complex m7 = gl.apply([](double t) { return Complex(std::pow(t, 7), 0.0); });
    CHECK(std::abs(m7.real() - 5040.0) < 1e-7 * 5040.0);
}

TEST_CASE("achieved error estimate is reported") {
    auto r = integrate([](double x) { return Complex(std::exp(x), 0.0); }, 0.0, 1.0);
    CHECK(r.error >= 0.0);
    CHECK(r.error < 1e-9);
    CHECK(std::abs(r.value.real() - (M_E - 1.0)) < 1e-13);
}
