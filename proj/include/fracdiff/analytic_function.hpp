#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fracdiff/kernel_moments.hpp"

namespace fracdiff {

/// A real function of one variable given as a sum of terms whose derivatives
/// of every order are known in closed form. Used both for histories on
/// [-a, 0] and for signals on t > 0.
///
/// Term kinds:
///   polynomial   sum_j c_j x^j
///   exponential  c e^{lambda x}
///   sinusoid     A sin(k x) + B cos(k x)
///   custom       user callback (x, order) -> value with a bounded order;
///                no closed-form moments or Laplace transform
class AnalyticFunction {
public:
    struct Polynomial {
        std::vector<double> coeffs;
    };
    struct Exponential {
        double scale;
        double rate;
    };
    struct Sinusoid {
        double sin_coeff;
        double cos_coeff;
        double freq;
    };
    struct Custom {
        std::function<double(double, int)> eval;
        int max_order;
        std::string label;
    };
    using Term = std::variant<Polynomial, Exponential, Sinusoid, Custom>;

    AnalyticFunction() = default;
    explicit AnalyticFunction(Term term);

    static AnalyticFunction zero() { return {}; }
    static AnalyticFunction constant(double c);
    static AnalyticFunction polynomial(std::vector<double> coeffs);
    static AnalyticFunction exponential(double scale, double rate);
    /// amplitude * sin(freq * x + phase)
    static AnalyticFunction sinusoid(double amplitude, double freq, double phase = 0.0);
    static AnalyticFunction custom(std::function<double(double, int)> eval, int max_order,
                                   std::string label = "custom");

    /// Parses the descriptor mini-language: "zero", "const:c", "poly:c0,c1,...",
    /// "exp:c,lambda", "sin:A,k[,phi]"; several terms may be joined with ';'.
    static AnalyticFunction parse(std::string_view text);

    /// k-th derivative at x.
    Real value(Real x, int k = 0) const;
    double operator()(double x, int k = 0) const { return static_cast<double>(value(x, k)); }

    /// Derivatives f(x), f'(x), ..., f^(count-1)(x).
    std::vector<Real> derivatives(Real x, int count, int first = 0) const;

    /// Highest derivative order available (INT_MAX for closed-form terms).
    int max_derivative_order() const;
    bool is_zero() const;
    bool has_closed_form() const;

    /// Closed-form Laplace transform; CapabilityError for custom terms,
    /// ParameterError when s is not above the growth rate.
    Real laplace(Real s) const;
    double growth_rate() const;

    /// int_{-a}^{0} e^{omega tau} f^(k)(tau) dtau. Closed form per term; custom
    /// terms use composite Simpson-Filon (quadratic interpolant integrated
    /// exactly against the exponential) on `panels` panels.
    Real exp_moment_integral(Real omega, Real a, int k, int panels = 512) const;

    const std::vector<Term>& terms() const { return terms_; }
    std::string describe() const;

    AnalyticFunction& operator+=(const AnalyticFunction& other);
    AnalyticFunction& operator*=(double factor);

private:
    std::vector<Term> terms_;
};

AnalyticFunction operator+(AnalyticFunction lhs, const AnalyticFunction& rhs);
AnalyticFunction operator*(double factor, AnalyticFunction f);

} // namespace fracdiff
