#include "fracdiff/integrator.hpp"

#include <cmath>

#include "fracdiff/errors.hpp"
#include "hermite_core.hpp"

namespace fracdiff {

Real SignalSpec::value_at(Real t, int k) const
{
    if (t < 0.0L)
        throw ParameterError("signal queried at negative time");
    return f_.value(t, k);
}

std::vector<Real> SignalSpec::derivatives_at(Real t, int count, int first) const
{
    if (first + count - 1 > derivative_order_available())
        throw CapabilityError("signal does not provide derivatives up to order " +
                              std::to_string(first + count - 1));
    if (t < 0.0L)
        throw ParameterError("signal queried at negative time");
    return f_.derivatives(t, count, first);
}

void TimeSeries::push(double time, double value)
{
    t.push_back(time);
    values.push_back(value);
}


ExponentialStepper::ExponentialStepper(GridPtr grid, double dt, int hermite_order)
    : grid_(std::move(grid)), dt_(dt), order_(hermite_order)
{
    if (!grid_)
        throw ParameterError("null frequency grid");
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw ParameterError("time step must be positive");
    if (hermite_order < 0 || hermite_order > 8)
        throw ParameterError("Hermite order must lie in [0, 8]");

    core_ = std::make_shared<const detail::HermiteCore<Real>>(grid_->nodes(), dt, order_);
}

void ExponentialStepper::advance(DiffusiveState& state, std::span<const Real> left,
                                 std::span<const Real> right) const
{
    const int n = order_ + 1;
    if (left.size() < static_cast<std::size_t>(n) || right.size() < static_cast<std::size_t>(n))
        throw ParameterError("stepper needs derivatives up to the Hermite order at both ends");
    if (state.grid != grid_ && (state.grid == nullptr || state.grid->count() != grid_->count()))
        throw ParameterError("state and stepper use different grids");
    for (int k = 0; k < n; ++k)
        if (!std::isfinite(static_cast<double>(left[k])) ||
            !std::isfinite(static_cast<double>(right[k])))
            throw NumericError("non-finite input to stepper");

    core_->advance(state.z, left, right);
    for (const Real v : state.z)
        if (!std::isfinite(static_cast<double>(v)))
            throw NumericError("mode state became non-finite");
    state.t += dt_;
}

DiffusiveState step(DiffusiveState state, double f_left, double f_right, double dt)
{
    const ExponentialStepper stepper(state.grid, dt, 0);
    const Real l[1] = {f_left};
    const Real r[1] = {f_right};
    stepper.advance(state, l, r);
    return state;
}

double output(const DiffusiveState& state, double alpha_frac)
{
    if (!state.grid)
        throw ParameterError("state has no grid");
    return static_cast<double>(state.grid->mu_quadrature(alpha_frac, state.z));
}

std::size_t step_count(double t_end, double dt)
{
    if (!(dt > 0.0) || !(t_end > 0.0))
        throw ParameterError("t_end and dt must be positive");
    if (dt > t_end * (1.0 + 1e-12))
        throw ParameterError("dt must not exceed t_end");
    return static_cast<std::size_t>(std::floor(t_end / dt + 1e-9));
}

TimeSeries simulate_integral(const SignalSpec& signal, const HistorySpec& history, double alpha,
                             double t_end, double dt, GridPtr grid)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ParameterError("integral order must lie in (0, 1)");
    const std::size_t steps = step_count(t_end, dt);
    DiffusiveState state = z_init_rl(history, grid);
    const ExponentialStepper stepper(grid, dt, 0);
    const auto weights = grid->mu_weights(alpha);

    TimeSeries out;
    out.t.reserve(steps);
    out.values.reserve(steps);
    Real f_left = signal.value_at(0.0L);
    for (std::size_t k = 1; k <= steps; ++k) {
        const double t = static_cast<double>(k) * dt;
        const Real f_right = signal.value_at(t);
        stepper.advance(state, std::span<const Real>(&f_left, 1), std::span<const Real>(&f_right, 1));
        state.t = t;
        Real sum = 0.0L;
        for (std::size_t i = 0; i < weights.size(); ++i)
            sum += weights[i] * state.z[i];
        out.push(t, static_cast<double>(sum));
        f_left = f_right;
    }
    return out;
}

} // namespace fracdiff
