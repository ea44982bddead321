#pragma once

#include <complex>
#include <vector>

namespace fracdiff {

/// Extended precision used for mode states and the sums that combine them.
/// The time-derivative recurrence multiplies states by powers of omega up to
/// omega_max^n, so double rounding is not enough for n >= 3.
using Real = long double;

/// Exponential moment g_j(x) = int_0^1 exp(-x*theta) theta^j dtheta.
///
/// Valid for x >= 0 and any j >= 0; j = 0 also accepts negative x.
/// For moderate x the positive series of the lower incomplete gamma function
/// is summed (no cancellation); for large x the upward recurrence
/// g_j = (j g_{j-1} - e^{-x}) / x is used, which is stable once x > j.
Real exp_moment(int j, Real x);

/// g_0 for complex argument, (1 - e^{-x}) / x with the x -> 0 limit.
std::complex<Real> exp_moment0(std::complex<Real> x);

/// All moments g_0..g_jmax at the same argument.
std::vector<Real> exp_moments(int jmax, Real x);

} // namespace fracdiff
