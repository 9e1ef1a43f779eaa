#include <doctest.h>

#include "hylab/errors.hpp"
#include "hylab/funcspace.hpp"
#include "hylab/inequality_lab.hpp"
#include "hylab/rng.hpp"

#include <cmath>

using namespace hylab;

namespace {
const FunctionSpec three_on_02 = FunctionSpec::indicator(0.0, 2.0, {3.0, 0.0});
const FunctionSpec exp_decay = FunctionSpec::exp_decay();
} // namespace

TEST_CASE("Lp norms: closed forms") {
    // ||e^{-t}||_2 = 2^{-1/2}
    CHECK(lp_norm(exp_decay, 2.0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    // ||e^{-t}||_p = p^{-1/p} (alpha = 1 case of the power-family norm)
    for (double p : {1.0, 1.5, 2.0, 3.0, 8.0})
        CHECK(lp_norm(exp_decay, p) == doctest::Approx(std::pow(p, -1.0 / p)).epsilon(1e-13));
    // power family: ||t^{a-1}e^{-t}||_p = p^{1/p'-a} Gamma(p(a-1)+1)^{1/p}
    const double a = 1.7, p = 2.5, pc = p / (p - 1.0);
    const FunctionSpec u{ExpMonomial{a, {1.0, 0.0}, {1.0, 0.0}}};
    const double expected =
        std::pow(p, 1.0 / pc - a) * std::pow(std::tgamma(p * (a - 1.0) + 1.0), 1.0 / p);
    CHECK(lp_norm(u, p) == doctest::Approx(expected).epsilon(1e-13));
    // step function: ||3 chi_[0,2]||_4 = 3 * 2^{1/4}
    CHECK(lp_norm(three_on_02, 4.0) ==
          doctest::Approx(3.0 * std::pow(2.0, 0.25)).epsilon(1e-14));
    // quadrature oracle agrees with the closed form
    CHECK(lp_norm(u, p, QuadratureScheme::adaptive(1e-11)) ==
          doctest::Approx(expected).epsilon(1e-9));
    // esssup
    CHECK(lp_norm(three_on_02, kInf) == 3.0);
}

TEST_CASE("Lp norm preconditions") {
    const FunctionSpec sing{ExpMonomial{0.4, {1.0, 0.0}, {1.0, 0.0}}};
    CHECK_THROWS_AS(lp_norm(sing, 2.0), NonIntegrableError); // (a-1)p = -1.2 <= -1
    CHECK(lp_norm(sing, 1.0) > 0.0);                         // still in L^1
    CHECK(lp_norm(sing, kInf) == kInf);                      // unbounded near zero
}

TEST_CASE("distribution function") {
    CHECK(distribution_function(three_on_02, 1.0) == 2.0);
    CHECK(distribution_function(three_on_02, 3.0) == 0.0); // strict inequality
    CHECK(distribution_function(exp_decay, std::exp(-1.0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(distribution_function(exp_decay, 0.0) == kInf); // sentinel, not an exception
    // rising-then-falling profile: |f| = t e^{-t} peaks at 1/e
    const FunctionSpec bump{ExpMonomial{2.0, {1.0, 0.0}, {1.0, 0.0}}};
    CHECK(distribution_function(bump, 1.0) == 0.0);
    const double d = distribution_function(bump, 0.5 * std::exp(-0.5));
    // f(t) = 0.5 e^{-0.5} at t = 0.5 and at the conjugate point t2 > 1
    CHECK(d > 0.0);
    CHECK(std::abs(bump.eval(1.0).real() * std::exp(0.0) - std::exp(-1.0)) < 1e-12);
}

TEST_CASE("decreasing rearrangement") {
    CHECK(decreasing_rearrangement(three_on_02, 1.0) == 3.0);
    CHECK(decreasing_rearrangement(three_on_02, 2.5) == 0.0);
    CHECK(decreasing_rearrangement(exp_decay, 1.0) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-10)); // f* = f for decreasing f
    // tie breaking by grid order changes nothing measurable
    SimpleFunction s;
    s.breaks = {0.0, 1.0, 2.0, 3.0};
    s.values = {{2.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}};
    const FunctionSpec f{s};
    CHECK(decreasing_rearrangement(f, 0.5) == 2.0);
    CHECK(decreasing_rearrangement(f, 1.5) == 2.0);
    CHECK(decreasing_rearrangement(f, 2.5) == 1.0);
}

TEST_CASE("Lorentz quasinorms of a step function") {
    // L^{p,p} = L^p
    CHECK(lorentz_quasinorm(three_on_02, 2.0, 2.0) ==
          doctest::Approx(3.0 * std::sqrt(2.0)).epsilon(1e-13));
    // p=2, r=1: 3 int_0^2 t^{-1/2} dt = 6 sqrt(2)
    CHECK(lorentz_quasinorm(three_on_02, 2.0, 1.0) ==
          doctest::Approx(6.0 * std::sqrt(2.0)).epsilon(1e-13));
    // weak norm: sup t^{1/2} * 3 over t < 2
    CHECK(lorentz_quasinorm(three_on_02, 2.0, kInf) ==
          doctest::Approx(3.0 * std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("exponent pairs") {
    CHECK(ExponentPair::of(1.0).conj() == kInf);
    CHECK(ExponentPair::of(kInf).conj() == 1.0);
    for (double p : {1.001, 1.333, 2.0, 4.0, 50.0}) {
        const ExponentPair ep = ExponentPair::of(p);
        CHECK(std::abs(1.0 / ep.p + 1.0 / ep.conj() - 1.0) < 4e-16);
        CHECK(ep.hausdorff_young() == (p <= 2.0));
    }
    CHECK_THROWS_AS(ExponentPair::of(0.5), ExponentRangeError);
}

TEST_CASE("random step functions: norms and rearrangements are consistent") {
    Rng rng(2202u);
    for (int i = 0; i < 40; ++i) {
        const FunctionSpec f = random_simple(rng);
        const double p = rng.uniform(1.0, 5.0);
        const double lp = lp_norm(f, p);
        CHECK(lorentz_quasinorm(f, p, p) == doctest::Approx(lp).epsilon(1e-11));
        CHECK(lorentz_quasinorm(f, p, kInf) <= lp * (1.0 + 1e-12)); // Chebyshev
        // D_f nonincreasing in lambda
        double prev = kInf;
        for (double lam = 0.0; lam <= 1.0; lam += 0.07) {
            const double d = distribution_function(f, lam);
            CHECK(d <= prev + 1e-12);
            prev = d;
        }
    }
}

TEST_CASE("distribution profile is sorted decreasing") {
    const DistributionProfile prof = distribution_profile(three_on_02, {0.5, 2.5, 1.5});
    REQUIRE(prof.thresholds.size() == 3);
    CHECK(prof.thresholds[0] == 2.5);
    CHECK(prof.measures[0] == 2.0);
    CHECK(prof.measures[2] == 2.0);
    for (std::size_t i = 1; i < prof.measures.size(); ++i)
        CHECK(prof.measures[i] >= prof.measures[i - 1]);
}

TEST_CASE("validation rejects malformed specs") {
    CHECK_THROWS_AS(FunctionSpec(ExpMonomial{-1.0, {1.0, 0.0}, {1.0, 0.0}}), ParseError);
    CHECK_THROWS_AS(FunctionSpec(ExpMonomial{1.0, {-1.0, 0.0}, {1.0, 0.0}}), ParseError);
    CHECK_THROWS_AS(FunctionSpec(SimpleFunction{{0.0, 0.0}, {{1.0, 0.0}}}), ParseError);
    CHECK_THROWS_AS(FunctionSpec(SimpleFunction{{0.0, 1.0}, {}}), ParseError);
    CHECK_THROWS_AS(FunctionSpec(SampledFunction{{1.0}, {{1.0, 0.0}}}), ParseError);
}
