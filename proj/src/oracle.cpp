#include "fracdiff/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "fracdiff/errors.hpp"

namespace fracdiff {

Real ExtendedSignal::value(Real tau, int k) const
{
    if (tau < -history_.a())
        return 0.0L;
    if (tau <= 0.0L)
        return history_.value_at(tau, k);
    return signal_.value_at(tau, k);
}

double reciprocal_gamma(double x)
{
    if (x <= 0.0 && x == std::floor(x))
        return 0.0;
    return 1.0 / std::tgamma(x);
}

namespace {

// int_lo^hi (t - tau)^(order-1) g(tau) dtau with g linear on each of `panels` panels.
Real product_integral(const std::function<Real(Real)>& g, Real lo, Real hi, Real t, Real order,
                      int panels)
{
    const Real h = (hi - lo) / panels;
    Real sum = 0.0L;
    Real g_left = g(lo);
    for (int k = 0; k < panels; ++k) {
        const Real tau_l = lo + k * h;
        const Real tau_r = (k + 1 == panels) ? hi : lo + (k + 1) * h;
        const Real g_right = g(tau_r);
        const Real u_l = t - tau_l;
        const Real u_r = std::max<Real>(t - tau_r, 0.0L);
        const Real m0 = (std::pow(u_l, order) - std::pow(u_r, order)) / order;
        const Real m1 = (std::pow(u_l, order + 1) - std::pow(u_r, order + 1)) / (order + 1);
        // int u^(order-1) (u_l - u) du over the panel, divided by the panel width
        const Real slope_weight = (u_l * m0 - m1) / (tau_r - tau_l);
        sum += g_left * (m0 - slope_weight) + g_right * slope_weight;
        g_left = g_right;
    }
    return sum;
}

std::pair<int, int> split_panels(int panels, Real a, Real t)
{
    if (panels < 2)
        throw ParameterError("oracle needs at least 2 panels");
    int hist = static_cast<int>(std::lround(panels * a / (a + t)));
    hist = std::clamp(hist, 1, panels - 1);
    return {hist, panels - hist};
}

// Integral of order `order` in (0, 1) of the piecewise function given by
// history_part on [-a, 0] and signal_part on (0, t].
Real fractional_integral(const ExtendedSignal& ext, int derivative, Real order, Real t,
                         int panels)
{
    const Real a = ext.history().a();
    const auto [n_hist, n_sig] = split_panels(panels, a, t);
    Real sum = 0.0L;
    if (!ext.history().is_zero()) {
        sum += product_integral(
            [&](Real tau) { return ext.history().value_at(tau, derivative); }, -a, 0.0L, t,
            order, n_hist);
    }
    if (!ext.signal().is_zero()) {
        sum += product_integral(
            [&](Real tau) { return ext.signal().value_at(tau, derivative); }, 0.0L, t, t, order,
            n_sig);
    }
    return sum * reciprocal_gamma(static_cast<double>(order));
}

struct Stencil {
    int half_width;
    std::array<double, 7> coeffs; // offsets -3..3
    double denom;
};

Stencil central_stencil(int n)
{
    switch (n) {
    case 1: return {2, {0, 1, -8, 0, 8, -1, 0}, 12.0};
    case 2: return {2, {0, -1, 16, -30, 16, -1, 0}, 12.0};
    case 3: return {3, {1, -8, 13, 0, -13, 8, -1}, 8.0};
    case 4: return {3, {-1, 12, -39, 56, -39, 12, -1}, 6.0};
    default: throw ParameterError("oracle derivative supports integer ceilings n <= 4");
    }
}

int oracle_ceiling(double alpha)
{
    if (!(alpha > 0.0) || alpha == std::floor(alpha))
        throw ParameterError("oracle order must be positive and non-integer");
    return static_cast<int>(std::floor(alpha)) + 1;
}

} // namespace

double rl_integral_direct(const ExtendedSignal& ext, double alpha, double t,
                          const OracleOptions& options)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ParameterError("rl_integral_direct: order must lie in (0, 1)");
    if (!(t > 0.0))
        throw ParameterError("rl_integral_direct: t must be positive");
    return static_cast<double>(fractional_integral(ext, 0, alpha, t, options.panels));
}

double rl_derivative_direct(const ExtendedSignal& ext, double alpha, double t,
                            const OracleOptions& options)
{
    const int n = oracle_ceiling(alpha);
    const double beta = n - alpha;
    const Stencil st = central_stencil(n);
    const double h = options.fd_step;
    if (!(h > 0.0))
        throw ParameterError("finite-difference step must be positive");
    if (!(t - st.half_width * h > 0.0))
        throw ParameterError("t too close to 0 for the finite-difference stencil");
    Real acc = 0.0L;
    for (int off = -3; off <= 3; ++off) {
        const double c = st.coeffs[static_cast<std::size_t>(off + 3)];
        if (c == 0.0)
            continue;
        acc += c * fractional_integral(ext, 0, beta, t + off * h, options.panels);
    }
    return static_cast<double>(acc / (st.denom * std::pow(h, n)));
}

double caputo_derivative_direct(const ExtendedSignal& ext, double alpha, double t,
                                const OracleOptions& options)
{
    const int n = oracle_ceiling(alpha);
    const double beta = n - alpha;
    if (!(t > 0.0))
        throw ParameterError("caputo_derivative_direct: t must be positive");
    Real result = fractional_integral(ext, n, beta, t, options.panels);
    const auto& hist = ext.history();
    if (!hist.is_zero()) {
        const Real a = hist.a();
        // f_in^(k)(-a) delta^(n-1-k)(tau + a) integrates to
        // f_in^(k)(-a) (t + a)^(beta-1-m) / Gamma(beta - m), m = n-1-k
        for (int k = 0; k < n; ++k) {
            const int m = n - 1 - k;
            result += hist.value_at(-a, k) * std::pow(t + a, beta - 1.0L - m) *
                      reciprocal_gamma(beta - m);
        }
    }
    return static_cast<double>(result);
}

double power_law_reference(double p, double alpha, double t, PowerLawDirection direction)
{
    if (!(p > -1.0))
        throw ParameterError("power_law_reference: p must exceed -1");
    if (!(t > 0.0))
        throw ParameterError("power_law_reference: t must be positive");
    if (direction == PowerLawDirection::Derivative)
        return std::tgamma(p + 1.0) * reciprocal_gamma(p + 1.0 - alpha) * std::pow(t, p - alpha);
    return std::tgamma(p + 1.0) * reciprocal_gamma(p + 1.0 + alpha) * std::pow(t, p + alpha);
}

} // namespace fracdiff
