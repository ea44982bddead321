#include "fracdiff/kernel_moments.hpp"

#include <cmath>
#include <limits>

#include "fracdiff/errors.hpp"

namespace fracdiff {

namespace {

constexpr Real kSeriesLimit = 40.0L;

// e^{-x} sum_k x^k / ((j+1)(j+2)...(j+1+k)); all terms positive.
Real incomplete_gamma_series(int j, Real x)
{
    Real term = 1.0L / static_cast<Real>(j + 1);
    Real sum = term;
    for (int k = 1; k < 1000; ++k) {
        term *= x / static_cast<Real>(j + 1 + k);
        sum += term;
        if (term < sum * std::numeric_limits<Real>::epsilon())
            break;
    }
    return std::exp(-x) * sum;
}

Real g0(Real x)
{
    if (x == 0.0L)
        return 1.0L;
    return -std::expm1(-x) / x;
}

} // namespace

Real exp_moment(int j, Real x)
{
    if (j < 0)
        throw ParameterError("exp_moment: negative moment index");
    if (j == 0)
        return g0(x);
    if (x < 0.0L)
        throw ParameterError("exp_moment: negative argument for j > 0");
    if (x <= kSeriesLimit || x <= 2.0L * j)
        return incomplete_gamma_series(j, x);
    Real g = g0(x);
    const Real ex = std::exp(-x);
    for (int i = 1; i <= j; ++i)
        g = (static_cast<Real>(i) * g - ex) / x;
    return g;
}

std::vector<Real> exp_moments(int jmax, Real x)
{
    std::vector<Real> out(static_cast<std::size_t>(jmax + 1));
    if (x > kSeriesLimit && x > 2.0L * jmax) {
        const Real ex = std::exp(-x);
        out[0] = g0(x);
        for (int i = 1; i <= jmax; ++i)
            out[i] = (static_cast<Real>(i) * out[i - 1] - ex) / x;
        return out;
    }
    for (int i = 0; i <= jmax; ++i)
        out[i] = exp_moment(i, x);
    return out;
}

std::complex<Real> exp_moment0(std::complex<Real> x)
{
    if (std::abs(x) < 1e-4L) {
        // 1 - x/2 + x^2/6 - x^3/24 + x^4/120
        std::complex<Real> s = 1.0L / 120.0L;
        s = 1.0L / 24.0L - x * s;
        s = 1.0L / 6.0L - x * s;
        s = 0.5L - x * s;
        return 1.0L - x * s;
    }
    return (1.0L - std::exp(-x)) / x;
}

} // namespace fracdiff
