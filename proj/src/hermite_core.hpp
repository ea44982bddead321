#pragma once

// Scalar-generic pieces of the exponential stepper. Instantiated with long
// double for ordinary stepping and with __float128 where a state is later
// multiplied by large powers of omega.

#include <cmath>
#include <limits>
#include <quadmath.h>
#include <span>
#include <vector>

#include "fracdiff/errors.hpp"
#include "fracdiff/kernel_moments.hpp"

namespace fracdiff::detail {

using Wide = __float128;

inline long double exp_of(long double x) { return std::exp(x); }
inline long double expm1_of(long double x) { return std::expm1(x); }
inline long double abs_of(long double x) { return std::fabs(x); }
inline Wide exp_of(Wide x) { return expq(x); }
inline Wide expm1_of(Wide x) { return expm1q(x); }
inline Wide abs_of(Wide x) { return fabsq(x); }

template <class T> constexpr T epsilon_of()
{
    if constexpr (std::is_same_v<T, Wide>)
        return FLT128_EPSILON;
    else
        return std::numeric_limits<T>::epsilon();
}

// g_j(x) = int_0^1 e^{-x u} u^j du for j = 0..jmax, x >= 0.
template <class T> std::vector<T> exp_moments_t(int jmax, T x)
{
    std::vector<T> out(static_cast<std::size_t>(jmax + 1));
    const T g0 = (x == T(0)) ? T(1) : -expm1_of(-x) / x;
    if (x > T(40) && x > T(2 * jmax)) {
        const T ex = exp_of(-x);
        out[0] = g0;
        for (int i = 1; i <= jmax; ++i)
            out[i] = (T(i) * out[i - 1] - ex) / x;
        return out;
    }
    out[0] = g0;
    const T ex = exp_of(-x);
    for (int j = 1; j <= jmax; ++j) {
        // e^{-x} sum_k x^k / ((j+1)...(j+1+k)), positive terms
        T term = T(1) / T(j + 1);
        T sum = term;
        for (int k = 1; k < 2000; ++k) {
            term *= x / T(j + 1 + k);
            sum += term;
            if (term < sum * epsilon_of<T>())
                break;
        }
        out[j] = ex * sum;
    }
    return out;
}

// j!/(j-k)! * (-1)^(j-k), the k-th derivative of x^j at x = -1.
template <class T> T monomial_derivative_at_minus_one(int j, int k)
{
    if (j < k)
        return T(0);
    T f = 1;
    for (int i = 0; i < k; ++i)
        f *= T(j - i);
    return ((j - k) % 2) ? -f : f;
}

template <class T> std::vector<T> invert(std::vector<T> a, int n)
{
    std::vector<T> inv(static_cast<std::size_t>(n * n), T(0));
    for (int i = 0; i < n; ++i)
        inv[static_cast<std::size_t>(i * n + i)] = 1;
    auto at = [n](std::vector<T>& m, int r, int c) -> T& {
        return m[static_cast<std::size_t>(r * n + c)];
    };
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (abs_of(at(a, r, col)) > abs_of(at(a, pivot, col)))
                pivot = r;
        if (at(a, pivot, col) == T(0))
            throw NumericError("singular Hermite system");
        for (int c = 0; c < n; ++c) {
            std::swap(at(a, col, c), at(a, pivot, c));
            std::swap(at(inv, col, c), at(inv, pivot, c));
        }
        const T p = at(a, col, col);
        for (int c = 0; c < n; ++c) {
            at(a, col, c) /= p;
            at(inv, col, c) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const T f = at(a, r, col);
            if (f == T(0))
                continue;
            for (int c = 0; c < n; ++c) {
                at(a, r, c) -= f * at(a, col, c);
                at(inv, r, c) -= f * at(inv, col, c);
            }
        }
    }
    return inv;
}

template <class T> class HermiteCore {
public:
    HermiteCore(std::span<const double> nodes, double dt, int m) : dt_(dt), m_(m)
    {
        const int terms = 2 * m + 2;
        decay_.resize(nodes.size());
        kernel_.resize(nodes.size() * static_cast<std::size_t>(terms));
        const T h = dt;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const T x = T(nodes[i]) * h;
            decay_[i] = exp_of(-x);
            // int_{-h}^0 e^{omega s} (s/h)^j ds = h (-1)^j g_j(omega h)
            const auto g = exp_moments_t<T>(terms - 1, x);
            for (int j = 0; j < terms; ++j)
                kernel_[i * terms + static_cast<std::size_t>(j)] = h * ((j % 2) ? -g[j] : g[j]);
        }
        // p(x) = sum c_j x^j on x = s/h in [-1, 0]; c_0..c_m come from the right
        // end, c_{m+1..2m+1} from the derivatives at x = -1.
        const int n = m + 1;
        std::vector<T> a(static_cast<std::size_t>(n * n));
        coupling_.resize(static_cast<std::size_t>(n * n));
        for (int k = 0; k < n; ++k) {
            for (int i = 0; i < n; ++i) {
                a[static_cast<std::size_t>(k * n + i)] = monomial_derivative_at_minus_one<T>(m + 1 + i, k);
                coupling_[static_cast<std::size_t>(k * n + i)] = monomial_derivative_at_minus_one<T>(i, k);
            }
        }
        solve_ = invert<T>(std::move(a), n);
    }

    int order() const { return m_; }

    void advance(std::span<T> z, std::span<const Real> left, std::span<const Real> right) const
    {
        const int n = m_ + 1;
        const int terms = 2 * n;
        std::vector<T> c(static_cast<std::size_t>(terms));
        std::vector<T> rhs(static_cast<std::size_t>(n));
        T hpow = 1, fact = 1;
        for (int k = 0; k < n; ++k) {
            if (k > 0) {
                hpow *= T(dt_);
                fact *= T(k);
            }
            c[static_cast<std::size_t>(k)] = hpow * T(right[k]) / fact;
            rhs[static_cast<std::size_t>(k)] = hpow * T(left[k]);
        }
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                rhs[static_cast<std::size_t>(k)] -=
                    coupling_[static_cast<std::size_t>(k * n + i)] * c[static_cast<std::size_t>(i)];
        for (int i = 0; i < n; ++i) {
            T v = 0;
            for (int k = 0; k < n; ++k)
                v += solve_[static_cast<std::size_t>(i * n + k)] * rhs[static_cast<std::size_t>(k)];
            c[static_cast<std::size_t>(n + i)] = v;
        }
        for (std::size_t i = 0; i < z.size(); ++i) {
            const T* kern = &kernel_[i * static_cast<std::size_t>(terms)];
            T forced = 0;
            for (int j = 0; j < terms; ++j)
                forced += c[static_cast<std::size_t>(j)] * kern[j];
            z[i] = decay_[i] * z[i] + forced;
        }
    }

private:
    double dt_;
    int m_;
    std::vector<T> decay_;
    std::vector<T> kernel_;   // node-major, 2m+2 entries per node
    std::vector<T> solve_;    // (m+1)^2 inverse of the left-end Hermite conditions
    std::vector<T> coupling_; // (m+1)^2 contribution of the right-end coefficients
};

// (-omega)^k z + sum_{j<k} (-omega)^{k-1-j} f^(j), by k applications of y <- -omega y + f^(j).
template <class T> T state_derivative(int k, T z, T omega, std::span<const Real> f_derivs)
{
    T y = z;
    for (int j = 0; j < k; ++j)
        y = -omega * y + T(f_derivs[static_cast<std::size_t>(j)]);
    return y;
}

} // namespace fracdiff::detail
