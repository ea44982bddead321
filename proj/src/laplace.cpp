#include "fracdiff/laplace.hpp"

#include <algorithm>
#include <cmath>

#include "fracdiff/errors.hpp"

namespace fracdiff {

namespace {

struct Setup {
    int n;
    double beta;
    std::vector<Real> weights;
    Real stieltjes;   // sum W_i / (s + omega_i), approximates s^(alpha - n)
    Real s_pow_n;
    Real laplace_f;
};

Setup prepare(const SignalSpec& signal, double alpha, double s, const FrequencyGrid& grid)
{
    if (!(s > 0.0))
        throw ParameterError("Laplace variable s must be positive");
    if (!signal.has_laplace())
        throw CapabilityError("signal has no closed-form Laplace transform");
    Setup st;
    st.n = integer_ceiling(alpha);
    st.beta = st.n - alpha;
    st.weights = grid.mu_weights(st.beta);
    const auto nodes = grid.nodes();
    st.stieltjes = 0.0L;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        st.stieltjes += st.weights[i] / (static_cast<Real>(s) + nodes[i]);
    st.s_pow_n = std::pow(static_cast<Real>(s), st.n);
    st.laplace_f = signal.laplace_at(s);
    return st;
}

std::vector<Real> derivs_at_zero(const SignalSpec& signal, int count)
{
    if (count <= 0)
        return {};
    return signal.derivatives_at(0.0L, count);
}

TransformEval finish(double s, Method method, Real forcing, Real init, Real delta)
{
    TransformEval e;
    e.s = s;
    e.method = method;
    e.forcing_term = static_cast<double>(forcing);
    e.init_correction = static_cast<double>(init);
    e.delta_term = static_cast<double>(delta);
    e.total = static_cast<double>(forcing + init + delta);
    return e;
}

} // namespace

Real delta1(Real s, Real omega, int n, std::span<const Real> f)
{
    if (n < 2)
        throw ParameterError("delta1 is defined for n >= 2");
    if (f.size() < static_cast<std::size_t>(n - 1))
        throw CapabilityError("delta1 needs f(0), ..., f^(n-2)(0)");
    Real sum = 0.0L;
    for (int j = 0; j <= n - 2; ++j) {
        // s^(m) + s^(m-1)(-w) + ... + (-w)^m with m = n-2-j, Horner in s
        const int m = n - 2 - j;
        Real bracket = 0.0L, wpow = 1.0L;
        for (int k = 0; k <= m; ++k) {
            bracket += std::pow(s, m - k) * wpow;
            wpow *= -omega;
        }
        sum += bracket * f[static_cast<std::size_t>(j)];
    }
    return sum;
}

Real delta2(Real s, Real omega, int n, std::span<const Real> f)
{
    if (n < 2)
        throw ParameterError("delta2 is defined for n >= 2");
    if (f.size() < static_cast<std::size_t>(n - 1))
        throw CapabilityError("delta2 needs f(0), ..., f^(n-2)(0)");
    Real sum = 0.0L;
    for (int j = 0; j <= n - 2; ++j) {
        const int m = n - 1 - j;
        const Real bracket =
            (m == 1) ? 1.0L : (std::pow(s, m) - std::pow(-omega, m)) / (s + omega);
        sum += bracket * f[static_cast<std::size_t>(j)];
    }
    return sum;
}

Real delta_magnitude(Real s, Real omega, int n, std::span<const Real> f)
{
    if (n < 2)
        return 0.0L;
    Real sum = 0.0L;
    for (int j = 0; j <= n - 2; ++j) {
        const int m = n - 2 - j;
        Real bracket = 0.0L;
        for (int k = 0; k <= m; ++k)
            bracket += std::pow(std::fabs(s), m - k) * std::pow(std::fabs(omega), k);
        sum += bracket * std::fabs(f[static_cast<std::size_t>(j)]);
    }
    return sum;
}

TransformEval rl_transform(const SignalSpec& signal, const HistorySpec& history, double alpha,
                           double s, GridPtr grid)
{
    const Setup st = prepare(signal, alpha, s, *grid);
    const auto z0 = z_init_rl(history, grid);
    const auto f0 = derivs_at_zero(signal, st.n - 1);
    const auto nodes = grid->nodes();
    const Real sl = s;

    Real init = 0.0L, delta = 0.0L;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Real w = nodes[i];
        init += st.weights[i] * std::pow(-w, st.n) * z0.z[i] / (sl + w);
        if (st.n >= 2)
            delta -= st.weights[i] * delta1(sl, w, st.n, f0);
    }
    const Real forcing = st.s_pow_n * st.stieltjes * st.laplace_f;
    return finish(s, Method::RiemannLiouville, forcing, init, delta);
}

TransformEval rl_transform_state_route(const SignalSpec& signal, const HistorySpec& history,
                                       double alpha, double s, GridPtr grid)
{
    const Setup st = prepare(signal, alpha, s, *grid);
    const auto z0 = z_init_rl(history, grid);
    const auto f0 = derivs_at_zero(signal, st.n - 1);
    const auto nodes = grid->nodes();
    const Real sl = s;

    Real init = 0.0L;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Real w = nodes[i];
        Real node = st.s_pow_n * z0.z[i] / (sl + w);
        for (int k = 0; k < st.n; ++k)
            node -= std::pow(sl, st.n - 1 - k) * z_state_time_derivative(k, z0.z[i], w, f0);
        init += st.weights[i] * node;
    }
    const Real forcing = st.s_pow_n * st.stieltjes * st.laplace_f;
    return finish(s, Method::RiemannLiouville, forcing, init, 0.0L);
}

TransformEval caputo_transform(const SignalSpec& signal, const HistorySpec& history, double alpha,
                               double s, GridPtr grid, CaputoInitPath path)
{
    const Setup st = prepare(signal, alpha, s, *grid);
    if (signal.derivative_order_available() < st.n - 1)
        throw CapabilityError("Caputo transform needs f(0), ..., f^(n-1)(0)");
    const auto f0 = derivs_at_zero(signal, st.n);
    const DiffusiveState zc = path == CaputoInitPath::Direct
                                  ? z_init_caputo(history, st.n, grid)
                                  : z_init_caputo_from_rl(z_init_rl(history, grid), st.n, f0);
    const auto nodes = grid->nodes();
    const Real sl = s;

    // sum_{j<n} s^(n-1-j) f^(j)(0)
    Real initial_values = 0.0L;
    for (int j = 0; j < st.n; ++j)
        initial_values = initial_values * sl + f0[static_cast<std::size_t>(j)];

    Real init = 0.0L, delta = 0.0L;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Real w = nodes[i];
        init += st.weights[i] * zc.z[i] / (sl + w);
        delta -= st.weights[i] * initial_values / (sl + w);
    }
    const Real forcing = st.s_pow_n * st.stieltjes * st.laplace_f;
    return finish(s, Method::Caputo, forcing, init, delta);
}

std::vector<TransformGap> transform_equality_report(const SignalSpec& signal,
                                                    const HistorySpec& history, double alpha,
                                                    std::span<const double> s_samples,
                                                    GridPtr grid)
{
    std::vector<TransformGap> out;
    out.reserve(s_samples.size());
    for (double s : s_samples) {
        const auto rl = rl_transform(signal, history, alpha, s, grid);
        const auto c = caputo_transform(signal, history, alpha, s, grid);
        TransformGap g;
        g.s = s;
        g.rl_total = rl.total;
        g.caputo_total = c.total;
        g.gap = std::fabs(rl.total - c.total) / std::max(1.0, std::fabs(rl.total));
        out.push_back(g);
    }
    return out;
}

} // namespace fracdiff
