#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "fracdiff/derivatives.hpp"
#include "fracdiff/errors.hpp"
#include "fracdiff/oracle.hpp"

using namespace fracdiff;

namespace {

SignalSpec sig(const char* d) { return SignalSpec(AnalyticFunction::parse(d)); }
HistorySpec hist(const char* d, double a = 1.0) { return HistorySpec(AnalyticFunction::parse(d), a); }

double rel_gap(double x, double ref) { return std::fabs(x - ref) / std::fabs(ref); }

} // namespace

TEST_CASE("state derivative recurrence")
{
    const std::vector<Real> f{5.0L, 7.0L};
    CHECK(z_state_time_derivative(0, 3.0L, 2.0L, {}) == 3.0L);
    CHECK(z_state_time_derivative(1, 3.0L, 2.0L, f) == -1.0L);
    CHECK(z_state_time_derivative(2, 3.0L, 2.0L, f) == 9.0L);
    CHECK_THROWS_AS(z_state_time_derivative(3, 3.0L, 2.0L, f), CapabilityError);
}

TEST_CASE("recurrence consistency on random inputs")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> lw(-3.0, 3.0);
    for (int trial = 0; trial < 500; ++trial) {
        const Real omega = std::pow(10.0L, lw(rng));
        const Real z = u(rng);
        std::vector<Real> f(6);
        for (auto& v : f)
            v = u(rng);
        for (int k = 0; k < 5; ++k) {
            const Real lhs = z_state_time_derivative(k + 1, z, omega, f);
            const Real rhs = -omega * z_state_time_derivative(k, z, omega, f) + f[k];
            const Real scale = std::max(1.0L, std::fabs(lhs));
            CHECK(static_cast<double>(std::fabs(lhs - rhs) / scale) <= 1e-12);
        }
    }
}

TEST_CASE("integer ceiling and integer orders")
{
    CHECK(integer_ceiling(0.5) == 1);
    CHECK(integer_ceiling(1.5) == 2);
    CHECK(integer_ceiling(2.999) == 3);
    CHECK_THROWS_AS(integer_ceiling(1.0), ParameterError);
    CHECK_THROWS_AS(integer_ceiling(0.0), ParameterError);
    CHECK_THROWS_AS(integer_ceiling(-0.5), ParameterError);
    CHECK(std::string(to_string(Method::Caputo)) == "Caputo");
}

TEST_CASE("RL derivative of t^2")
{
    const auto r = rl_derivative(sig("poly:0,0,1"), HistorySpec::zero(), 0.5, 5.0, 1e-3, make_grid());
    CHECK(r.n == 1);
    CHECK(r.method == Method::RiemannLiouville);
    CHECK(r.continuity_warnings.empty());
    for (std::size_t i = 99; i < r.series.size(); ++i) {
        const double ref = power_law_reference(2.0, 0.5, r.series.t[i], PowerLawDirection::Derivative);
        CHECK(rel_gap(r.series.values[i], ref) <= 1e-3);
    }
    CHECK(r.series.values[999] == doctest::Approx(1.504505).epsilon(1e-4));
}

TEST_CASE("Caputo derivative basics")
{
    const auto grid = make_grid();
    const auto c = caputo_derivative(sig("poly:0,0,1"), HistorySpec::zero(), 0.5, 2.0, 1e-3, grid);
    CHECK(c.method == Method::Caputo);
    for (std::size_t i = 99; i < c.series.size(); i += 50) {
        const double ref = power_law_reference(2.0, 0.5, c.series.t[i], PowerLawDirection::Derivative);
        CHECK(rel_gap(c.series.values[i], ref) <= 1e-3);
    }
    const auto k = caputo_derivative(sig("const:3"), HistorySpec::zero(), 0.5, 1.0, 1e-2, grid);
    for (double v : k.series.values)
        CHECK(v == 0.0);
    const auto z = rl_derivative(sig("zero"), HistorySpec::zero(), 1.5, 1.0, 1e-2, grid);
    for (double v : z.series.values)
        CHECK(v == 0.0);
}

TEST_CASE("constant history: RL against the oracle and Caputo against RL")
{
    const auto grid = make_grid();
    const auto h = hist("const:1");
    const auto s = sig("const:1");
    const auto rl = rl_derivative(s, h, 0.5, 5.0, 1e-3, grid);
    const ExtendedSignal ext(h, s);
    for (std::size_t i = 99; i < rl.series.size(); i += 100) {
        const double ref = rl_derivative_direct(ext, 0.5, rl.series.t[i]);
        CHECK(rel_gap(rl.series.values[i], ref) <= 1e-3);
    }
    CHECK(rl.series.values[999] == doctest::Approx(0.398942).epsilon(1e-4));
    const auto rep = equivalence_gap(s, h, 0.5, 5.0, 1e-3, grid);
    CHECK(rep.max_gap <= 1e-3);
    CHECK(rep.warnings.empty());
}

TEST_CASE("equivalence across the matched corpus")
{
    const auto grid = make_grid();
    struct Case {
        const char* history;
        const char* signal;
    };
    // every pair satisfies f^(k)(0+) = f_in^(k)(0-) for the orders used
    const std::vector<Case> corpus{
        {"zero", "poly:0,0,0,1"},
        {"const:1", "const:1"},
        {"poly:1,1", "poly:1,1,0,1"},
        {"exp:1,0.5", "exp:1,0.5"},
        {"sin:1,2,0.4", "sin:1,2,0.4"},
    };
    for (const auto& c : corpus) {
        for (double alpha : {0.3, 0.5, 0.7, 1.3, 1.5, 1.9, 2.5}) {
            const auto rep = equivalence_gap(sig(c.signal), hist(c.history), alpha, 5.0, 1e-3, grid);
            INFO(std::string(c.history) << " / " << c.signal << " alpha " << alpha);
            CHECK(rep.max_gap <= 1e-3);
            CHECK(rep.warnings.empty());
        }
    }
}

TEST_CASE("continuity mismatch is reported")
{
    const auto rep = equivalence_gap(sig("zero"), hist("const:1"), 0.5, 1.0, 1e-2, make_grid());
    CHECK_FALSE(rep.warnings.empty());
    CHECK_FALSE(rep.rl.continuity_warnings.empty());
}

TEST_CASE("classical reduction at higher orders")
{
    const auto grid = make_grid();
    for (double alpha : {1.3, 2.5}) {
        const auto rl = rl_derivative(sig("poly:0,0,0,1"), HistorySpec::zero(), alpha, 5.0, 1e-3, grid);
        const auto c = caputo_derivative(sig("poly:0,0,0,1"), HistorySpec::zero(), alpha, 5.0, 1e-3, grid);
        for (std::size_t i = 99; i < rl.series.size(); i += 100) {
            const double ref = power_law_reference(3.0, alpha, rl.series.t[i], PowerLawDirection::Derivative);
            CHECK(rel_gap(rl.series.values[i], ref) <= 1e-3);
            CHECK(rel_gap(c.series.values[i], ref) <= 1e-3);
        }
    }
}

TEST_CASE("finite-difference input mode")
{
    DerivativeOptions opt;
    opt.finite_difference_input = true;
    const auto grid = make_grid();
    const auto exact = caputo_derivative(sig("sin:1,1"), HistorySpec::zero(), 0.5, 2.0, 1e-3, grid);
    const auto fd = caputo_derivative(sig("sin:1,1"), HistorySpec::zero(), 0.5, 2.0, 1e-3, grid, opt);
    for (std::size_t i = 99; i < fd.series.size(); i += 100)
        CHECK(std::fabs(fd.series.values[i] - exact.series.values[i]) <= 1e-4);
}

TEST_CASE("capability and parameter errors")
{
    const auto grid = make_grid();
    const auto lin = SignalSpec(AnalyticFunction::custom([](double x, int k) { return k == 0 ? x : (k == 1 ? 1.0 : 0.0); }, 1));
    CHECK_THROWS_AS(caputo_derivative(lin, HistorySpec::zero(), 1.5, 1.0, 0.1, grid), CapabilityError);
    CHECK_THROWS_AS(rl_derivative(lin, HistorySpec::zero(), 2.5, 1.0, 0.1, grid), CapabilityError);
    CHECK_THROWS_AS(rl_derivative(sig("zero"), HistorySpec::zero(), 1.0, 1.0, 0.1, grid), ParameterError);
    CHECK_THROWS_AS(caputo_derivative(sig("zero"), HistorySpec::zero(), 2.0, 1.0, 0.1, grid), ParameterError);
}
