#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracdiff/kernel_moments.hpp"

namespace fracdiff {

/// Geometric discretization of the elementary-frequency axis (0, inf).
///
/// Nodes are omega_i = omega_min (omega_max/omega_min)^(i/(count-1)). Plain
/// quadrature is the trapezoidal rule in u = ln(omega) with the Jacobian e^u
/// folded into the weights. The mu-weighted rule additionally closes both
/// truncated tails analytically: below omega_min the integrand factor is taken
/// constant, above omega_max it is taken to decay like 1/omega (the behaviour
/// of every mode state and of the Stieltjes kernel 1/(s+omega)). The closures
/// only modify the two end weights, so the rule stays a fixed linear
/// functional of the node values.
class FrequencyGrid {
public:
    static constexpr double kDefaultOmegaMin = 1e-6;
    static constexpr double kDefaultOmegaMax = 1e6;
    static constexpr std::size_t kDefaultCount = 200;

    FrequencyGrid(double omega_min, double omega_max, std::size_t count);

    /// [1e-6, 1e6] with 200 nodes.
    static FrequencyGrid make_default();

    std::span<const double> nodes() const { return nodes_; }
    /// Trapezoidal weights for int g(omega) domega over [omega_min, omega_max].
    std::span<const double> log_weights() const { return weights_; }
    double omega_min() const { return omega_min_; }
    double omega_max() const { return omega_max_; }
    std::size_t count() const { return nodes_.size(); }
    double log_step() const { return log_step_; }

    /// sum_i w_i g_i, ascending omega.
    Real quadrature(std::span<const Real> values) const;
    double quadrature(std::span<const double> values) const;

    /// Weights W_i such that sum_i W_i g(omega_i) ~ int_0^inf mu_beta(omega) g(omega) domega,
    /// including the analytic tail closures. beta in (0, 1).
    std::vector<Real> mu_weights(double beta) const;

    /// sum_i W_i g_i with the mu_beta weights, ascending omega.
    Real mu_quadrature(double beta, std::span<const Real> values) const;

private:
    double omega_min_;
    double omega_max_;
    double log_step_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

FrequencyGrid build_grid(double omega_min, double omega_max, std::size_t count);

/// sin(alpha pi)/pi * omega^(-alpha), alpha in (0, 1).
double mu(double alpha, double omega);
Real mu_ld(double alpha, Real omega);

/// Quadrature of int_0^inf mu_alpha(omega)/(s+omega) domega; tends to s^(-alpha).
double mu_integral(double alpha, double s, const FrequencyGrid& grid);
Real mu_integral_ld(double alpha, Real s, const FrequencyGrid& grid);

} // namespace fracdiff
