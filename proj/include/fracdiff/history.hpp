#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fracdiff/analytic_function.hpp"
#include "fracdiff/freq_grid.hpp"

namespace fracdiff {

using GridPtr = std::shared_ptr<const FrequencyGrid>;

GridPtr make_grid(double omega_min = FrequencyGrid::kDefaultOmegaMin,
                  double omega_max = FrequencyGrid::kDefaultOmegaMax,
                  std::size_t count = FrequencyGrid::kDefaultCount);

/// Behaviour of the signal on the initialization period [-a, 0].
/// Outside that interval the composite signal is zero (before -a) or the
/// post-initial signal (after 0), so queries outside it are rejected.
class HistorySpec {
public:
    HistorySpec(AnalyticFunction f_in, double a);
    static HistorySpec zero(double a = 1.0) { return HistorySpec(AnalyticFunction::zero(), a); }

    double a() const { return a_; }
    const AnalyticFunction& function() const { return f_; }
    int derivative_order_available() const { return f_.max_derivative_order(); }
    bool is_zero() const { return f_.is_zero(); }

    /// k-th derivative at tau in [-a, 0].
    Real value_at(Real tau, int k = 0) const;

private:
    AnalyticFunction f_;
    double a_;
};

enum class InitKind { RiemannLiouville, Caputo, Zero };

/// Mode states z(omega_i, t) on a frequency grid.
struct DiffusiveState {
    GridPtr grid;
    std::vector<Real> z;
    double t = 0.0;
    InitKind kind = InitKind::Zero;
};

DiffusiveState zero_state(GridPtr grid);

/// z(omega, 0) = int_{-a}^0 e^{omega tau} f_in(tau) dtau.
///
/// The kernel e^{omega tau} = e^{-omega (0 - tau)} is the free decay of each
/// mode from tau up to the initial instant.
DiffusiveState z_init_rl(const HistorySpec& history, GridPtr grid);

/// Initial state of the Caputo construction at integer order n:
///   int_{-a}^0 e^{omega tau} f_in^(n)(tau) dtau
///     + sum_{k<n} f_in^(k)(-a) (-omega)^(n-1-k) e^{-omega a}
/// The second sum is the contribution of the jump of the composite signal at
/// tau = -a (it is zero before -a), i.e. of the delta terms in its n-th
/// distributional derivative.
DiffusiveState z_init_caputo(const HistorySpec& history, int n, GridPtr grid);

/// The same state obtained by repeated integration by parts from the RL state:
///   sum_{k<n} (-omega)^k f^(n-1-k)(0) + (-omega)^n z_RL(omega, 0)
/// f_derivs_at_0 holds f(0+), f'(0+), ..., f^(n-1)(0+).
DiffusiveState z_init_caputo_from_rl(const DiffusiveState& rl_state, int n,
                                     std::span<const Real> f_derivs_at_0);

struct InitRelationReport {
    double max_abs_residual = 0.0;
    /// residual divided by max(1, |z_C|, sum of magnitudes of the expansion terms)
    double max_scaled_residual = 0.0;
    double max_continuity_mismatch = 0.0;
    bool continuity_warning = false;
    std::vector<std::string> warnings;
};

/// Tolerance on |f^(k)(0+) - f_in^(k)(0-)| before a continuity warning is raised.
inline constexpr double kContinuityTolerance = 1e-9;

/// Compares z_init_caputo against z_init_caputo_from_rl node by node.
InitRelationReport verify_init_relation(const HistorySpec& history, int n, GridPtr grid,
                                        std::span<const Real> f_derivs_at_0);

/// Continuity mismatches f^(k)(0+) vs f_in^(k)(0-), k < n; empty when matched.
std::vector<std::string> continuity_warnings(const HistorySpec& history, int n,
                                             std::span<const Real> f_derivs_at_0,
                                             double* max_mismatch = nullptr);

struct PsiValue {
    double time = 0.0;      ///< direct kernel quadrature
    double diffusive = 0.0; ///< free decay of the distributed initial state
};

/// Initialization function of the order-alpha integral, alpha in (0, 1), t > 0:
///   psi(t) = 1/Gamma(alpha) int_{-a}^0 (t - tau)^(alpha-1) f_in(tau) dtau
/// evaluated both directly and as int mu_alpha(omega) e^{-omega t} z_RL(omega, 0) domega.
PsiValue psi(const HistorySpec& history, double alpha, double t, GridPtr grid);

/// Only the direct kernel quadrature.
double psi_time(const HistorySpec& history, double alpha, double t);

} // namespace fracdiff
