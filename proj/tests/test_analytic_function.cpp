#include "doctest.h"

#include <climits>
#include <cmath>
#include <numbers>

#include "fracdiff/analytic_function.hpp"
#include "fracdiff/errors.hpp"

using namespace fracdiff;

namespace {

// trapezoid with many panels; only used on smooth integrands
double trapezoid(auto&& g, double lo, double hi, int panels = 200000)
{
    const double h = (hi - lo) / panels;
    double s = 0.5 * (g(lo) + g(hi));
    for (int i = 1; i < panels; ++i)
        s += g(lo + i * h);
    return s * h;
}

} // namespace

TEST_CASE("polynomial values and derivatives")
{
    const auto p = AnalyticFunction::polynomial({1.0, 2.0, 0.0, 3.0}); // 1 + 2x + 3x^3
    CHECK(p(2.0) == doctest::Approx(29.0));
    CHECK(p(2.0, 1) == doctest::Approx(2.0 + 9.0 * 4.0));
    CHECK(p(2.0, 2) == doctest::Approx(36.0));
    CHECK(p(2.0, 3) == doctest::Approx(18.0));
    CHECK(p(2.0, 4) == 0.0);
    CHECK(p.max_derivative_order() == INT_MAX);
    const auto d = p.derivatives(-1.0L, 3, 1);
    REQUIRE(d.size() == 3);
    CHECK(static_cast<double>(d[0]) == doctest::Approx(11.0));
    CHECK(static_cast<double>(d[1]) == doctest::Approx(-18.0));
    CHECK(static_cast<double>(d[2]) == doctest::Approx(18.0));
}

TEST_CASE("exponential and sinusoid derivatives")
{
    const auto e = AnalyticFunction::exponential(2.0, -0.5);
    CHECK(e(1.0, 3) == doctest::Approx(2.0 * -0.125 * std::exp(-0.5)));
    const auto s = AnalyticFunction::sinusoid(1.5, 2.0, 0.3);
    for (int k = 0; k < 6; ++k) {
        const double expected = 1.5 * std::pow(2.0, k) * std::sin(2.0 * 0.7 + 0.3 + k * std::numbers::pi / 2);
        CHECK(s(0.7, k) == doctest::Approx(expected).epsilon(1e-13));
    }
}

TEST_CASE("parse mini-language")
{
    CHECK(AnalyticFunction::parse("zero").is_zero());
    CHECK(AnalyticFunction::parse("const:2.5")(7.0) == doctest::Approx(2.5));
    CHECK(AnalyticFunction::parse("poly:1,1")(-0.25) == doctest::Approx(0.75));
    CHECK(AnalyticFunction::parse("exp:2,-1")(1.0) == doctest::Approx(2.0 / std::exp(1.0)));
    CHECK(AnalyticFunction::parse("sin:1,3")(0.2) == doctest::Approx(std::sin(0.6)));
    const auto sum = AnalyticFunction::parse("const:1; sin:2,1,0.5");
    CHECK(sum(0.3) == doctest::Approx(1.0 + 2.0 * std::sin(0.8)));
    for (const char* bad : {"", "poly:", "exp:1", "sin:1", "const:x", "const:1,2", "cosh:1", "zero:1"})
        CHECK_THROWS_AS(AnalyticFunction::parse(bad), ParameterError);
}

TEST_CASE("arithmetic is linear")
{
    const auto f = AnalyticFunction::polynomial({0.0, 1.0});
    const auto g = AnalyticFunction::exponential(1.0, 0.3);
    const auto h = f + 3.0 * g;
    for (double x : {-1.0, 0.0, 2.0})
        for (int k = 0; k < 3; ++k)
            CHECK(h(x, k) == doctest::Approx(f(x, k) + 3.0 * g(x, k)));
}

TEST_CASE("Laplace transforms of closed forms")
{
    const double s = 2.0;
    CHECK(static_cast<double>(AnalyticFunction::polynomial({1.0, 1.0, 0.0, 1.0}).laplace(s)) ==
          doctest::Approx(1 / s + 1 / (s * s) + 6 / std::pow(s, 4)));
    CHECK(static_cast<double>(AnalyticFunction::exponential(3.0, 0.5).laplace(s)) == doctest::Approx(3.0 / 1.5));
    const auto sn = AnalyticFunction::sinusoid(1.0, 3.0, 0.4);
    const double ref = trapezoid([&](double t) { return std::exp(-s * t) * sn(t); }, 0.0, 30.0);
    CHECK(static_cast<double>(sn.laplace(s)) == doctest::Approx(ref).epsilon(1e-8));
    CHECK_THROWS_AS(AnalyticFunction::exponential(1.0, 3.0).laplace(2.0), ParameterError);
    const auto c = AnalyticFunction::custom([](double x, int) { return x; }, 2);
    CHECK_THROWS_AS(c.laplace(1.0), CapabilityError);
}

TEST_CASE("exponential moment integral against quadrature")
{
    const double a = 1.3;
    const auto f = AnalyticFunction::parse("poly:1,-2,0.5; exp:0.7,1.1; sin:0.4,2,0.1");
    for (double omega : {0.0, 1e-3, 0.8, 7.0, 300.0}) {
        for (int k = 0; k < 3; ++k) {
            const double ref = trapezoid([&](double tau) { return std::exp(omega * tau) * f(tau, k); }, -a, 0.0);
            CHECK(static_cast<double>(f.exp_moment_integral(omega, a, k)) == doctest::Approx(ref).epsilon(1e-8));
        }
    }
}

TEST_CASE("custom terms use the Simpson-Filon fallback")
{
    const auto exact = AnalyticFunction::exponential(1.0, 0.5);
    const auto custom = AnalyticFunction::custom(
        [](double x, int k) { return std::pow(0.5, k) * std::exp(0.5 * x); }, 4, "e^(x/2)");
    CHECK_FALSE(custom.has_closed_form());
    CHECK(custom.max_derivative_order() == 4);
    for (double omega : {0.0, 2.0, 1e4}) {
        const auto c = custom.exp_moment_integral(omega, 1.0, 1, 1024);
        const auto e = exact.exp_moment_integral(omega, 1.0, 1);
        CHECK(static_cast<double>(c) == doctest::Approx(static_cast<double>(e)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(custom.value(0.0, 5), CapabilityError);
    CHECK_THROWS_AS(AnalyticFunction::custom(nullptr, 1), ParameterError);
}

TEST_CASE("describe and zero handling")
{
    CHECK(AnalyticFunction::zero().is_zero());
    CHECK(AnalyticFunction::zero()(3.0, 2) == 0.0);
    CHECK_FALSE(AnalyticFunction::parse("poly:0,1").describe().empty());
    CHECK_THROWS_AS(AnalyticFunction::constant(1.0).value(0.0, -1), ParameterError);
}
