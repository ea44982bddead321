#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "fracdiff/errors.hpp"
#include "fracdiff/oracle.hpp"

using namespace fracdiff;

namespace {

SignalSpec sig(const char* d) { return SignalSpec(AnalyticFunction::parse(d)); }
HistorySpec hist(const char* d, double a = 1.0) { return HistorySpec(AnalyticFunction::parse(d), a); }

// Lanczos, g = 7, nine coefficients
double lanczos_gamma(double x)
{
    static const double c[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5)
        return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos_gamma(1.0 - x));
    x -= 1.0;
    double a = c[0];
    const double t = x + 7.5;
    for (int i = 1; i < 9; ++i)
        a += c[i] / (x + i);
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

// I^alpha of (tau)^2 on [-1, t]: with u = tau + 1 the integrand is u^2 - 2u + 1
double squared_history_integral(double alpha, double t)
{
    const double u = t + 1.0;
    return 2.0 * std::pow(u, 2.0 + alpha) / std::tgamma(3.0 + alpha) -
           2.0 * std::pow(u, 1.0 + alpha) / std::tgamma(2.0 + alpha) + std::pow(u, alpha) / std::tgamma(1.0 + alpha);
}

} // namespace

TEST_CASE("gamma values against an independent Lanczos implementation")
{
    for (double x = -2.75; x < 8.0; x += 0.125) {
        if (std::fabs(x - std::round(x)) < 1e-12 && x <= 0.0)
            continue;
        CHECK(std::tgamma(x) == doctest::Approx(lanczos_gamma(x)).epsilon(1e-12));
        CHECK(reciprocal_gamma(x) == doctest::Approx(1.0 / lanczos_gamma(x)).epsilon(1e-12));
    }
    CHECK(std::tgamma(2.5) == doctest::Approx(1.329340388179137).epsilon(1e-14));
    for (double pole : {0.0, -1.0, -2.0, -7.0})
        CHECK(reciprocal_gamma(pole) == 0.0);
}

TEST_CASE("power law reference")
{
    CHECK(power_law_reference(1.0, 0.5, 1.0, PowerLawDirection::Integral) == doctest::Approx(0.752252).epsilon(1e-6));
    CHECK(power_law_reference(2.0, 0.5, 1.0, PowerLawDirection::Derivative) == doctest::Approx(1.504505).epsilon(1e-6));
    CHECK(power_law_reference(0.0, 0.5, 1.0, PowerLawDirection::Derivative) == doctest::Approx(0.564190).epsilon(1e-6));
    CHECK(power_law_reference(1.0, 2.5, 3.0, PowerLawDirection::Derivative) == doctest::Approx(
        1.0 / lanczos_gamma(-0.5) * std::pow(3.0, -1.5)).epsilon(1e-12));
    // derivative of order 2 of t^1 vanishes exactly through the pole of Gamma(0)
    CHECK(power_law_reference(1.0, 2.0, 3.0, PowerLawDirection::Derivative) == 0.0);
    CHECK_THROWS_AS(power_law_reference(-1.5, 0.5, 1.0, PowerLawDirection::Integral), ParameterError);
    CHECK_THROWS_AS(power_law_reference(1.0, 0.5, 0.0, PowerLawDirection::Integral), ParameterError);
}

TEST_CASE("extended signal pieces")
{
    const ExtendedSignal v(hist("poly:1,1", 2.0), sig("const:5"));
    CHECK(static_cast<double>(v.value(-3.0L)) == 0.0);
    CHECK(static_cast<double>(v.value(-0.5L)) == doctest::Approx(0.5));
    CHECK(static_cast<double>(v.value(-0.5L, 1)) == doctest::Approx(1.0));
    CHECK(static_cast<double>(v.value(0.5L)) == doctest::Approx(5.0));
}

TEST_CASE("direct integral examples")
{
    const ExtendedSignal zero(HistorySpec::zero(), sig("zero"));
    CHECK(rl_integral_direct(zero, 0.5, 1.0) == 0.0);
    const ExtendedSignal ramp(HistorySpec::zero(), sig("poly:0,1"));
    CHECK(rl_integral_direct(ramp, 0.5, 1.0) == doctest::Approx(0.752252).epsilon(1e-4));
    const ExtendedSignal ones(hist("const:1"), sig("const:1"));
    CHECK(rl_integral_direct(ones, 0.5, 1.0) == doctest::Approx(std::sqrt(2.0) / std::tgamma(1.5)).epsilon(1e-4));
    const ExtendedSignal sq(hist("poly:0,0,1"), sig("poly:0,0,1"));
    for (double t : {0.3, 1.0, 4.0})
        CHECK(rl_integral_direct(sq, 0.4, t) == doctest::Approx(squared_history_integral(0.4, t)).epsilon(1e-6));
    CHECK_THROWS_AS(rl_integral_direct(ones, 0.5, 0.0), ParameterError);
    CHECK_THROWS_AS(rl_integral_direct(ones, 1.5, 1.0), ParameterError);
}

TEST_CASE("direct derivative examples")
{
    const ExtendedSignal sq(HistorySpec::zero(), sig("poly:0,0,1"));
    CHECK(rl_derivative_direct(sq, 0.5, 1.0) == doctest::Approx(1.504505).epsilon(1e-3));
    CHECK(caputo_derivative_direct(sq, 0.5, 1.0) == doctest::Approx(1.504505).epsilon(1e-3));
    const ExtendedSignal zero(HistorySpec::zero(), sig("zero"));
    CHECK(rl_derivative_direct(zero, 0.5, 1.0) == 0.0);
    const ExtendedSignal c(HistorySpec::zero(), sig("const:4"));
    CHECK(caputo_derivative_direct(c, 0.5, 1.0) == 0.0);
    const ExtendedSignal ones(hist("const:1"), sig("const:1"));
    const double expected = 0.5 * std::pow(2.0, -0.5) / std::tgamma(1.5);
    CHECK(rl_derivative_direct(ones, 0.5, 1.0) == doctest::Approx(expected).epsilon(1e-3));
    CHECK(caputo_derivative_direct(ones, 0.5, 1.0) == doctest::Approx(expected).epsilon(1e-3));
    CHECK_THROWS_AS(rl_derivative_direct(ones, 0.5, 0.01), ParameterError);
    CHECK_THROWS_AS(rl_derivative_direct(ones, 2.0, 1.0), ParameterError);
}

TEST_CASE("higher-order direct derivatives")
{
    // zero history, f = t^3 so that f, f', f'' vanish at 0 and RL = Caputo
    const ExtendedSignal cube(HistorySpec::zero(), sig("poly:0,0,0,1"));
    for (double alpha : {1.3, 2.5}) {
        const double ref = power_law_reference(3.0, alpha, 2.0, PowerLawDirection::Derivative);
        CHECK(rl_derivative_direct(cube, alpha, 2.0) == doctest::Approx(ref).epsilon(1e-3));
        CHECK(caputo_derivative_direct(cube, alpha, 2.0) == doctest::Approx(ref).epsilon(1e-3));
    }
    // matched ramp history: RL and Caputo agree including the jump at -a
    const ExtendedSignal ramp(hist("poly:1,1"), sig("poly:1,1"));
    CHECK(rl_derivative_direct(ramp, 1.5, 1.5) == doctest::Approx(caputo_derivative_direct(ramp, 1.5, 1.5)).epsilon(1e-3));
}

TEST_CASE("product integration converges at least at first order")
{
    const ExtendedSignal sq(hist("poly:0,0,1"), sig("poly:0,0,1"));
    const double ref = squared_history_integral(0.5, 1.0);
    double prev = -1.0;
    for (int m : {1024, 2048, 4096, 8192}) {
        OracleOptions opt;
        opt.panels = m;
        const double err = std::fabs(rl_integral_direct(sq, 0.5, 1.0, opt) - ref);
        if (prev > 0.0)
            CHECK(err <= 0.5 * prev * 1.05);
        prev = err;
    }
}
