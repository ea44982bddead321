#include "fracdiff/history.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fracdiff/errors.hpp"

namespace fracdiff {

GridPtr make_grid(double omega_min, double omega_max, std::size_t count)
{
    return std::make_shared<const FrequencyGrid>(omega_min, omega_max, count);
}

HistorySpec::HistorySpec(AnalyticFunction f_in, double a) : f_(std::move(f_in)), a_(a)
{
    if (!(a > 0.0) || !std::isfinite(a))
        throw ParameterError("history length a must be positive");
}

Real HistorySpec::value_at(Real tau, int k) const
{
    const Real slack = 1e-12L * a_;
    if (tau < -a_ - slack || tau > slack)
        throw ParameterError("history queried outside [-a, 0]");
    return f_.value(std::clamp<Real>(tau, -a_, 0.0L), k);
}

DiffusiveState zero_state(GridPtr grid)
{
    if (!grid)
        throw ParameterError("null frequency grid");
    DiffusiveState s;
    s.z.assign(grid->count(), 0.0L);
    s.grid = std::move(grid);
    return s;
}

DiffusiveState z_init_rl(const HistorySpec& history, GridPtr grid)
{
    DiffusiveState s = zero_state(std::move(grid));
    s.kind = InitKind::RiemannLiouville;
    if (history.is_zero())
        return s;
    const auto nodes = s.grid->nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i)
        s.z[i] = history.function().exp_moment_integral(nodes[i], history.a(), 0);
    return s;
}

DiffusiveState z_init_caputo(const HistorySpec& history, int n, GridPtr grid)
{
    if (n < 1)
        throw ParameterError("z_init_caputo: n must be positive");
    if (n > history.derivative_order_available())
        throw CapabilityError("history does not provide derivatives of order " +
                              std::to_string(n));
    DiffusiveState s = zero_state(std::move(grid));
    s.kind = InitKind::Caputo;
    if (history.is_zero())
        return s;
    const Real a = history.a();
    std::vector<Real> jumps(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        jumps[static_cast<std::size_t>(k)] = history.value_at(-a, k);

    const auto nodes = s.grid->nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Real w = nodes[i];
        Real jump = 0.0L;
        // sum_k f_in^(k)(-a) (-w)^(n-1-k), Horner in (-w)
        for (int k = 0; k < n; ++k)
            jump = jump * (-w) + jumps[static_cast<std::size_t>(k)];
        s.z[i] = history.function().exp_moment_integral(w, a, n) + jump * std::exp(-w * a);
    }
    return s;
}

DiffusiveState z_init_caputo_from_rl(const DiffusiveState& rl_state, int n,
                                     std::span<const Real> f_derivs_at_0)
{
    if (n < 1)
        throw ParameterError("z_init_caputo_from_rl: n must be positive");
    if (f_derivs_at_0.size() < static_cast<std::size_t>(n))
        throw CapabilityError("need f(0), ..., f^(n-1)(0)");
    DiffusiveState s = zero_state(rl_state.grid);
    s.kind = InitKind::Caputo;
    const auto nodes = s.grid->nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Real m = -static_cast<Real>(nodes[i]);
        // ((z m + f(0)) m + f'(0)) m + ... = m^n z + sum_k m^k f^(n-1-k)(0)
        Real acc = rl_state.z[i];
        for (int j = 0; j < n; ++j)
            acc = acc * m + f_derivs_at_0[static_cast<std::size_t>(j)];
        s.z[i] = acc;
    }
    return s;
}

std::vector<std::string> continuity_warnings(const HistorySpec& history, int n,
                                             std::span<const Real> f_derivs_at_0,
                                             double* max_mismatch)
{
    std::vector<std::string> out;
    double worst = 0.0;
    const int count = std::min<int>(n, static_cast<int>(f_derivs_at_0.size()));
    for (int k = 0; k < count; ++k) {
        const Real left = history.value_at(0.0L, k);
        const Real right = f_derivs_at_0[static_cast<std::size_t>(k)];
        const double diff = static_cast<double>(std::fabs(left - right));
        worst = std::max(worst, diff);
        if (diff > kContinuityTolerance) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "continuity mismatch in derivative " << k << ": f_in(0-) = "
                << static_cast<double>(left) << ", f(0+) = " << static_cast<double>(right);
            out.push_back(msg.str());
        }
    }
    if (max_mismatch)
        *max_mismatch = worst;
    return out;
}

InitRelationReport verify_init_relation(const HistorySpec& history, int n, GridPtr grid,
                                        std::span<const Real> f_derivs_at_0)
{
    InitRelationReport report;
    report.warnings =
        continuity_warnings(history, n, f_derivs_at_0, &report.max_continuity_mismatch);
    report.continuity_warning = !report.warnings.empty();

    const auto rl = z_init_rl(history, grid);
    const auto direct = z_init_caputo(history, n, grid);
    const auto expanded = z_init_caputo_from_rl(rl, n, f_derivs_at_0);

    const auto nodes = grid->nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Real w = nodes[i];
        Real scale = std::max<Real>(1.0L, std::fabs(direct.z[i]));
        Real term_mag = std::fabs(rl.z[i]);
        for (int j = 0; j < n; ++j)
            term_mag = term_mag * w + std::fabs(f_derivs_at_0[static_cast<std::size_t>(j)]);
        scale = std::max(scale, term_mag);
        const Real r = std::fabs(direct.z[i] - expanded.z[i]);
        report.max_abs_residual = std::max(report.max_abs_residual, static_cast<double>(r));
        report.max_scaled_residual =
            std::max(report.max_scaled_residual, static_cast<double>(r / scale));
    }
    return report;
}

double psi_time(const HistorySpec& history, double alpha, double t)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ParameterError("psi: order must lie in (0, 1)");
    if (!(t > 0.0))
        throw ParameterError("psi: t must be positive");
    if (history.is_zero())
        return 0.0;
    // With v = (t - tau)^alpha the weakly varying kernel becomes constant:
    // (t - tau)^(alpha-1) dtau = dv / alpha.
    const double a = history.a();
    const double lo = std::pow(t, alpha);
    const double hi = std::pow(t + a, alpha);
    auto integrand = [&](double v) {
        const double tau = std::clamp(t - std::pow(v, 1.0 / alpha), -a, 0.0);
        return static_cast<double>(history.value_at(tau, 0));
    };
    double err = 0.0;
    const double integral =
        boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, lo, hi, 12,
                                                                       1e-11, &err);
    return integral / std::tgamma(alpha + 1.0);
}

PsiValue psi(const HistorySpec& history, double alpha, double t, GridPtr grid)
{
    PsiValue out;
    out.time = psi_time(history, alpha, t);
    if (history.is_zero())
        return out;
    const auto z0 = z_init_rl(history, grid);
    const auto nodes = grid->nodes();
    std::vector<Real> decayed(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        decayed[i] = std::exp(-static_cast<Real>(nodes[i]) * t) * z0.z[i];
    out.diffusive = static_cast<double>(grid->mu_quadrature(alpha, decayed));
    return out;
}

} // namespace fracdiff
