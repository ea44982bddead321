#pragma once

#include <span>
#include <vector>

#include "fracdiff/derivatives.hpp"

namespace fracdiff {

/// One Laplace-domain evaluation at real s > 0.
///
/// total = forcing_term + init_correction + delta_term, summed in that order.
/// For the RL route delta_term is -int mu Delta_1 (zero when n = 1); for the
/// Caputo route it collects the f^(j)(0) terms of the derivative rule.
struct TransformEval {
    double s = 0.0;
    double total = 0.0;
    double forcing_term = 0.0;
    double init_correction = 0.0;
    double delta_term = 0.0;
    Method method = Method::RiemannLiouville;
};

/// Where the Caputo route takes z_C(omega, 0) from.
enum class CaputoInitPath {
    Direct,    ///< z_init_caputo (moment of f_in^(n) plus jump terms)
    Expansion  ///< integration-by-parts expansion of z_RL(omega, 0)
};

/// s^alpha F(s) + int mu_{n-alpha} (-omega)^n z_RL(omega,0)/(s+omega) - int mu_{n-alpha} Delta_1,
/// with s^alpha realized as s^n times the Stieltjes quadrature of mu_{n-alpha}.
TransformEval rl_transform(const SignalSpec& signal, const HistorySpec& history, double alpha,
                           double s, GridPtr grid);

/// The RL transform assembled term by term from the derivative rule,
/// s^n int mu Z_RL - sum_k s^(n-1-k) int mu d^k z_RL/dt^k(omega, 0).
TransformEval rl_transform_state_route(const SignalSpec& signal, const HistorySpec& history,
                                       double alpha, double s, GridPtr grid);

/// int mu_{n-alpha}(omega) Z_C(omega, s) domega with
/// Z_C = (z_C(omega,0) + s^n F(s) - sum_{j<n} s^(n-1-j) f^(j)(0)) / (s + omega).
TransformEval caputo_transform(const SignalSpec& signal, const HistorySpec& history, double alpha,
                               double s, GridPtr grid,
                               CaputoInitPath path = CaputoInitPath::Direct);

/// sum_{j=0}^{n-2} [sum_{k=0}^{n-2-j} s^(n-2-j-k) (-omega)^k] f^(j)(0), n >= 2.
Real delta1(Real s, Real omega, int n, std::span<const Real> f_derivs_at_0);

/// sum_{j=0}^{n-2} [(s^(n-1-j) - (-omega)^(n-1-j)) / (s + omega)] f^(j)(0), n >= 2;
/// the j = n-2 bracket is exactly 1.
Real delta2(Real s, Real omega, int n, std::span<const Real> f_derivs_at_0);

/// delta1 with every term replaced by its magnitude; a scale for comparing the two forms.
Real delta_magnitude(Real s, Real omega, int n, std::span<const Real> f_derivs_at_0);

struct TransformGap {
    double s = 0.0;
    double rl_total = 0.0;
    double caputo_total = 0.0;
    double gap = 0.0; ///< |rl - caputo| / max(1, |rl|)
};

std::vector<TransformGap> transform_equality_report(const SignalSpec& signal,
                                                    const HistorySpec& history, double alpha,
                                                    std::span<const double> s_samples,
                                                    GridPtr grid);

/// Default sample ladder for s.
inline const std::vector<double> kDefaultLaplaceSamples{0.1, 0.5, 1.0, 2.0, 5.0, 10.0};

} // namespace fracdiff
