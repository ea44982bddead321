#include "fracdiff/freq_grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fracdiff/errors.hpp"

namespace fracdiff {

namespace {

void check_fraction(double alpha, const char* what)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw ParameterError(std::string(what) + ": order must lie in (0, 1), got " +
                             std::to_string(alpha));
}

Real sin_pi_over_pi(double alpha)
{
    return std::sin(std::numbers::pi_v<Real> * alpha) / std::numbers::pi_v<Real>;
}

} // namespace

FrequencyGrid::FrequencyGrid(double omega_min, double omega_max, std::size_t count)
    : omega_min_(omega_min), omega_max_(omega_max)
{
    if (!(omega_min > 0.0) || !(omega_max > omega_min) || !std::isfinite(omega_max))
        throw ParameterError("frequency grid needs 0 < omega_min < omega_max");
    if (count < 2)
        throw ParameterError("frequency grid needs at least 2 nodes");

    const double span = std::log(omega_max / omega_min);
    log_step_ = span / static_cast<double>(count - 1);
    nodes_.resize(count);
    weights_.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double frac = static_cast<double>(i) / static_cast<double>(count - 1);
        nodes_[i] = omega_min * std::pow(omega_max / omega_min, frac);
        weights_[i] = log_step_ * nodes_[i];
    }
    nodes_.front() = omega_min;
    nodes_.back() = omega_max;
    weights_.front() = 0.5 * log_step_ * omega_min;
    weights_.back() = 0.5 * log_step_ * omega_max;
}

FrequencyGrid FrequencyGrid::make_default()
{
    return FrequencyGrid(kDefaultOmegaMin, kDefaultOmegaMax, kDefaultCount);
}

Real FrequencyGrid::quadrature(std::span<const Real> values) const
{
    if (values.size() != nodes_.size())
        throw ParameterError("quadrature: value count does not match grid");
    Real sum = 0.0L;
    for (std::size_t i = 0; i < values.size(); ++i)
        sum += weights_[i] * values[i];
    return sum;
}

double FrequencyGrid::quadrature(std::span<const double> values) const
{
    std::vector<Real> v(values.begin(), values.end());
    return static_cast<double>(quadrature(std::span<const Real>(v)));
}

std::vector<Real> FrequencyGrid::mu_weights(double beta) const
{
    check_fraction(beta, "mu_weights");
    std::vector<Real> w(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        w[i] = weights_[i] * mu_ld(beta, nodes_[i]);
    const Real c = sin_pi_over_pi(beta);
    // int_0^{omega_min} mu_beta domega
    w.front() += c * std::pow(static_cast<Real>(omega_min_), 1.0L - beta) / (1.0L - beta);
    // int_{omega_max}^inf mu_beta(omega) omega_max/omega domega
    w.back() += c * std::pow(static_cast<Real>(omega_max_), 1.0L - beta) / beta;
    return w;
}

Real FrequencyGrid::mu_quadrature(double beta, std::span<const Real> values) const
{
    if (values.size() != nodes_.size())
        throw ParameterError("mu_quadrature: value count does not match grid");
    const auto w = mu_weights(beta);
    Real sum = 0.0L;
    for (std::size_t i = 0; i < values.size(); ++i)
        sum += w[i] * values[i];
    return sum;
}

FrequencyGrid build_grid(double omega_min, double omega_max, std::size_t count)
{
    return FrequencyGrid(omega_min, omega_max, count);
}

double mu(double alpha, double omega)
{
    return static_cast<double>(mu_ld(alpha, omega));
}

Real mu_ld(double alpha, Real omega)
{
    check_fraction(alpha, "mu");
    if (!(omega > 0.0L))
        throw ParameterError("mu: omega must be positive");
    return sin_pi_over_pi(alpha) * std::pow(omega, -static_cast<Real>(alpha));
}

Real mu_integral_ld(double alpha, Real s, const FrequencyGrid& grid)
{
    if (!(s > 0.0L))
        throw ParameterError("mu_integral: s must be positive");
    std::vector<Real> g(grid.count());
    for (std::size_t i = 0; i < g.size(); ++i)
        g[i] = 1.0L / (s + grid.nodes()[i]);
    return grid.mu_quadrature(alpha, g);
}

double mu_integral(double alpha, double s, const FrequencyGrid& grid)
{
    return static_cast<double>(mu_integral_ld(alpha, s, grid));
}

} // namespace fracdiff
