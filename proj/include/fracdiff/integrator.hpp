#pragma once

#include <memory>
#include <span>
#include <vector>

#include "fracdiff/history.hpp"
#include "fracdiff/signal.hpp"

namespace fracdiff {

namespace detail {
template <class T> class HermiteCore;
}

struct TimeSeries {
    std::vector<double> t;
    std::vector<double> values;

    std::size_t size() const { return t.size(); }
    void push(double time, double value);
};

/// Exact per-mode propagation of dz/dt = -omega z + u(t) over a fixed step dt,
/// with u replaced on each step by its two-point Hermite interpolant of order
/// m (values and the first m derivatives at both ends, degree 2m+1). Order 0
/// is linear interpolation. Every mode is advanced with its exact solution, so
/// there is no stability restriction for stiff omega.
class ExponentialStepper {
public:
    ExponentialStepper(GridPtr grid, double dt, int hermite_order = 0);

    double dt() const { return dt_; }
    int hermite_order() const { return order_; }

    /// left/right hold u, u', ..., u^(m) at t and t + dt.
    void advance(DiffusiveState& state, std::span<const Real> left,
                 std::span<const Real> right) const;

private:
    GridPtr grid_;
    double dt_;
    int order_;
    std::shared_ptr<const detail::HermiteCore<Real>> core_;
};

/// One linear-interpolation step: z <- e^{-omega dt} z + phi1 f_left + phi2 f_right.
DiffusiveState step(DiffusiveState state, double f_left, double f_right, double dt);

/// int_0^inf mu_alpha(omega) z(omega, t) domega on the state's grid.
double output(const DiffusiveState& state, double alpha_frac);

/// Initialized fractional integral of order alpha in (0, 1) at t = dt, 2dt, ..., t_end.
TimeSeries simulate_integral(const SignalSpec& signal, const HistorySpec& history, double alpha,
                             double t_end, double dt, GridPtr grid);

/// Number of whole steps of size dt that fit in t_end; throws if dt > t_end.
std::size_t step_count(double t_end, double dt);

} // namespace fracdiff
