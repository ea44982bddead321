#pragma once

#include "fracdiff/history.hpp"
#include "fracdiff/signal.hpp"

namespace fracdiff {

/// Composite signal v: 0 before -a, the history on [-a, 0], the signal after 0.
class ExtendedSignal {
public:
    ExtendedSignal(HistorySpec history, SignalSpec signal)
        : history_(std::move(history)), signal_(std::move(signal))
    {
    }

    const HistorySpec& history() const { return history_; }
    const SignalSpec& signal() const { return signal_; }

    /// k-th classical derivative of v at tau (no distributional terms).
    Real value(Real tau, int k = 0) const;

private:
    HistorySpec history_;
    SignalSpec signal_;
};

struct OracleOptions {
    /// Product-integration panels over [-a, t]; split between the history
    /// and signal parts in proportion to their lengths so tau = 0 is a mesh node.
    int panels = 4096;
    /// Stencil spacing of the outer finite difference.
    double fd_step = 1e-2;
};

/// 1/Gamma(alpha) int_{-a}^t (t - tau)^(alpha-1) v(tau) dtau, alpha in (0, 1), by
/// first-order product integration (v piecewise linear, kernel moments exact).
double rl_integral_direct(const ExtendedSignal& ext, double alpha, double t,
                          const OracleOptions& options = {});

/// d^n/dt^n of rl_integral_direct at order n - alpha, by a fourth-order central
/// difference (n <= 4). The whole stencil must lie in t > 0.
double rl_derivative_direct(const ExtendedSignal& ext, double alpha, double t,
                            const OracleOptions& options = {});

/// Order n - alpha integral of the n-th derivative of v, including the delta
/// terms produced by the jump of v at -a.
double caputo_derivative_direct(const ExtendedSignal& ext, double alpha, double t,
                                const OracleOptions& options = {});

enum class PowerLawDirection { Derivative, Integral };

/// Fractional derivative or integral of t^p (p > -1):
///   Gamma(p+1)/Gamma(p+1-alpha) t^(p-alpha)  or  Gamma(p+1)/Gamma(p+1+alpha) t^(p+alpha).
/// Returns exactly 0 where 1/Gamma vanishes.
double power_law_reference(double p, double alpha, double t, PowerLawDirection direction);

/// 1/Gamma(x), exactly 0 at the poles x = 0, -1, -2, ...
double reciprocal_gamma(double x);

} // namespace fracdiff
