#include "fracdiff/derivatives.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "fracdiff/errors.hpp"
#include "hermite_core.hpp"

namespace fracdiff {

const char* to_string(Method m)
{
    return m == Method::RiemannLiouville ? "RL" : "Caputo";
}

int integer_ceiling(double alpha)
{
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw ParameterError("derivative order must be positive");
    if (alpha == std::floor(alpha))
        throw ParameterError("integer derivative orders are not supported");
    return static_cast<int>(std::floor(alpha)) + 1;
}

Real z_state_time_derivative(int k, Real z_value, Real omega, std::span<const Real> f_derivs)
{
    if (k < 0)
        throw ParameterError("negative time-derivative order");
    if (f_derivs.size() < static_cast<std::size_t>(k))
        throw CapabilityError("recurrence needs f, ..., f^(k-1)");
    Real y = z_value;
    for (int j = 0; j < k; ++j)
        y = -omega * y + f_derivs[static_cast<std::size_t>(j)];
    return y;
}

namespace {

// Second-order central difference of order n, applied as n nested first differences.
Real central_difference(const AnalyticFunction& f, Real t, int n, Real h)
{
    if (n == 0)
        return f.value(t, 0);
    return (central_difference(f, t + h, n - 1, h) - central_difference(f, t - h, n - 1, h)) /
           (2.0L * h);
}

std::vector<Real> signal_derivs_at_zero(const SignalSpec& signal, int n)
{
    const int max_order = signal.derivative_order_available();
    return signal.derivatives_at(0.0L, max_order >= n ? n : max_order + 1);
}

} // namespace

DerivativeResult rl_derivative(const SignalSpec& signal, const HistorySpec& history, double alpha,
                               double t_end, double dt, GridPtr grid,
                               const DerivativeOptions& options)
{
    const int n = integer_ceiling(alpha);
    const double beta = n - alpha;
    const int avail = signal.derivative_order_available();
    if (avail < n - 1)
        throw CapabilityError("RL derivative needs signal derivatives up to order n-1");
    int m = options.hermite_order < 0 ? n : options.hermite_order;
    m = std::min(m, avail);
    const int count = std::max(m + 1, n);
    if (count - 1 > avail)
        throw CapabilityError("signal derivatives insufficient for the requested Hermite order");

    DerivativeResult result;
    result.alpha = alpha;
    result.n = n;
    result.method = Method::RiemannLiouville;
    const auto f0 = signal_derivs_at_zero(signal, n);
    result.continuity_warnings = continuity_warnings(history, n, f0);

    const std::size_t steps = step_count(t_end, dt);
    if (m > 8)
        throw ParameterError("Hermite order must lie in [0, 8]");
    const auto nodes = grid->nodes();
    // The recurrence multiplies z by omega^n (up to 1e18 on the default grid)
    // and cancels down to O(1), so the state is carried in quad precision.
    const detail::HermiteCore<detail::Wide> stepper(nodes, dt, m);
    const auto init = z_init_rl(history, grid);
    std::vector<detail::Wide> z(init.z.begin(), init.z.end());
    const auto weights = grid->mu_weights(beta);

    auto left = signal.derivatives_at(0.0L, count);
    for (std::size_t k = 1; k <= steps; ++k) {
        const double t = static_cast<double>(k) * dt;
        auto right = signal.derivatives_at(t, count);
        stepper.advance(z, left, right);
        Real sum = 0.0L;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const auto d = detail::state_derivative<detail::Wide>(n, z[i], nodes[i], right);
            sum += weights[i] * static_cast<Real>(d);
        }
        if (!std::isfinite(static_cast<double>(sum)))
            throw NumericError("RL derivative became non-finite");
        result.series.push(t, static_cast<double>(sum));
        left = std::move(right);
    }
    return result;
}

DerivativeResult caputo_derivative(const SignalSpec& signal, const HistorySpec& history,
                                   double alpha, double t_end, double dt, GridPtr grid,
                                   const DerivativeOptions& options)
{
    const int n = integer_ceiling(alpha);
    const double beta = n - alpha;
    const int avail = signal.derivative_order_available();

    DerivativeResult result;
    result.alpha = alpha;
    result.n = n;
    result.method = Method::Caputo;

    int m = 0;
    if (!options.finite_difference_input) {
        if (avail < n)
            throw CapabilityError("Caputo derivative needs signal derivatives up to order n");
        m = options.hermite_order < 0 ? n : options.hermite_order;
        m = std::min(m, avail - n);
    }
    const auto f0 = signal_derivs_at_zero(signal, n);
    result.continuity_warnings = continuity_warnings(history, n, f0);

    const std::size_t steps = step_count(t_end, dt);
    DiffusiveState state = z_init_caputo(history, n, grid);
    const ExponentialStepper stepper(grid, dt, m);
    const auto weights = grid->mu_weights(beta);

    auto input = [&](double t) {
        if (options.finite_difference_input)
            return std::vector<Real>{central_difference(signal.function(), t, n, dt)};
        return signal.derivatives_at(t, m + 1, n);
    };

    auto left = input(0.0);
    for (std::size_t k = 1; k <= steps; ++k) {
        const double t = static_cast<double>(k) * dt;
        auto right = input(t);
        stepper.advance(state, left, right);
        state.t = t;
        Real sum = 0.0L;
        for (std::size_t i = 0; i < weights.size(); ++i)
            sum += weights[i] * state.z[i];
        result.series.push(t, static_cast<double>(sum));
        left = std::move(right);
    }
    return result;
}

EquivalenceReport equivalence_gap(const SignalSpec& signal, const HistorySpec& history,
                                  double alpha, double t_end, double dt, GridPtr grid,
                                  double t_min, const DerivativeOptions& options)
{
    if (t_min < 0.0)
        t_min = 10.0 * dt;
    auto rl_future = std::async(std::launch::async, [&] {
        return rl_derivative(signal, history, alpha, t_end, dt, grid, options);
    });
    EquivalenceReport report;
    report.caputo = caputo_derivative(signal, history, alpha, t_end, dt, grid, options);
    report.rl = rl_future.get();
    report.warnings = report.rl.continuity_warnings;

    const auto& a = report.rl.series;
    const auto& b = report.caputo.series;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.t[i] < t_min * (1.0 - 1e-12))
            continue;
        double gap = std::fabs(a.values[i] - b.values[i]) / std::max(1.0, std::fabs(a.values[i]));
        if (!std::isfinite(gap))
            gap = std::numeric_limits<double>::infinity();
        if (gap > report.max_gap) {
            report.max_gap = gap;
            report.t_at_max = a.t[i];
        }
    }
    return report;
}

} // namespace fracdiff
