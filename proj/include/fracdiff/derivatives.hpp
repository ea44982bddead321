#pragma once

#include <span>
#include <string>
#include <vector>

#include "fracdiff/integrator.hpp"

namespace fracdiff {

enum class Method { RiemannLiouville, Caputo };

const char* to_string(Method m);

struct DerivativeResult {
    TimeSeries series;
    double alpha = 0.0;
    int n = 0;
    Method method = Method::RiemannLiouville;
    std::vector<std::string> continuity_warnings;
};

struct DerivativeOptions {
    /// Hermite order of the input interpolant; negative selects n (capped by
    /// the derivatives the signal provides).
    int hermite_order = -1;
    /// Caputo only: feed the integrator a second-order central finite
    /// difference of f instead of the closed-form f^(n). The difference is
    /// taken on the analytic extension of the signal and is O(dt^2).
    bool finite_difference_input = false;
};

/// Smallest integer strictly above alpha; rejects integer and non-positive orders.
int integer_ceiling(double alpha);

/// d^k z / dt^k = (-omega)^k z + sum_{j<k} (-omega)^(k-1-j) f^(j)(t), obtained
/// by iterating dz/dt = -omega z + f. f_derivs holds f, f', ..., f^(k-1) at t.
Real z_state_time_derivative(int k, Real z_value, Real omega, std::span<const Real> f_derivs);

/// Initialized Riemann-Liouville derivative d^n/dt^n I^(n-alpha) at t = dt, ..., t_end.
/// The n-th time derivative is moved inside the frequency integral and
/// evaluated per mode with z_state_time_derivative.
DerivativeResult rl_derivative(const SignalSpec& signal, const HistorySpec& history, double alpha,
                               double t_end, double dt, GridPtr grid,
                               const DerivativeOptions& options = {});

/// Initialized Caputo derivative I^(n-alpha) f^(n): modes driven by f^(n),
/// started from z_init_caputo.
DerivativeResult caputo_derivative(const SignalSpec& signal, const HistorySpec& history,
                                   double alpha, double t_end, double dt, GridPtr grid,
                                   const DerivativeOptions& options = {});

struct EquivalenceReport {
    double max_gap = 0.0;   ///< max |RL - C| / max(1, |RL|) over t >= t_min
    double t_at_max = 0.0;
    DerivativeResult rl;
    DerivativeResult caputo;
    std::vector<std::string> warnings;
};

/// Runs both derivatives (concurrently) and measures their gap on [t_min, t_end].
/// A negative t_min selects 10 dt.
EquivalenceReport equivalence_gap(const SignalSpec& signal, const HistorySpec& history,
                                  double alpha, double t_end, double dt, GridPtr grid,
                                  double t_min = -1.0, const DerivativeOptions& options = {});

} // namespace fracdiff
