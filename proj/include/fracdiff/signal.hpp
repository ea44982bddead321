#pragma once

#include "fracdiff/analytic_function.hpp"

namespace fracdiff {

/// The signal of primary interest for t > 0. Values at t = 0 are the right
/// limits f^(k)(0+).
class SignalSpec {
public:
    explicit SignalSpec(AnalyticFunction f) : f_(std::move(f)) {}

    const AnalyticFunction& function() const { return f_; }
    int derivative_order_available() const { return f_.max_derivative_order(); }
    bool has_laplace() const { return f_.has_closed_form(); }
    bool is_zero() const { return f_.is_zero(); }

    Real value_at(Real t, int k = 0) const;
    /// f^(first)(t), ..., f^(first+count-1)(t)
    std::vector<Real> derivatives_at(Real t, int count, int first = 0) const;
    Real laplace_at(Real s) const { return f_.laplace(s); }

private:
    AnalyticFunction f_;
};

} // namespace fracdiff
