#include "fracdiff/analytic_function.hpp"

#include <climits>
#include <cmath>
#include <complex>
#include <sstream>

#include "fracdiff/errors.hpp"

namespace fracdiff {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Coefficients of the k-th derivative of sum_j c_j x^j.
std::vector<Real> differentiate(const std::vector<double>& c, int k)
{
    std::vector<Real> d;
    for (std::size_t j = static_cast<std::size_t>(k); j < c.size(); ++j) {
        Real f = c[j];
        for (int m = 0; m < k; ++m)
            f *= static_cast<Real>(j - static_cast<std::size_t>(m));
        d.push_back(f);
    }
    return d;
}

Real int_pow(Real x, int k)
{
    Real r = 1.0L;
    for (int i = 0; i < k; ++i)
        r *= x;
    return r;
}

// (A, B) of the k-th derivative of A sin(f x) + B cos(f x).
std::pair<Real, Real> rotate(const AnalyticFunction::Sinusoid& s, int k)
{
    Real a = s.sin_coeff, b = s.cos_coeff;
    for (int i = 0; i < k; ++i) {
        const Real na = -b * s.freq;
        const Real nb = a * s.freq;
        a = na;
        b = nb;
    }
    return {a, b};
}

Real simpson_filon(const AnalyticFunction::Custom& c, Real omega, Real a, int k, int panels)
{
    if (panels < 2)
        panels = 2;
    if (panels % 2)
        ++panels;
    const int pairs = panels / 2;
    const Real width = a / pairs;      // 2H
    const Real step = width / 2.0L;    // H
    const auto g = exp_moments(2, omega * width);
    // int_{-2H}^0 e^{omega s} s^j ds = (-1)^j (2H)^{j+1} g_j(2H omega)
    const Real m0 = width * g[0];
    const Real m1 = -width * width * g[1];
    const Real m2 = width * width * width * g[2];
    Real sum = 0.0L;
    for (int p = 0; p < pairs; ++p) {
        const Real x2 = -a + (p + 1) * width;
        const Real x1 = x2 - step;
        const Real x0 = x2 - width;
        const Real f0 = c.eval(static_cast<double>(x0), k);
        const Real f1 = c.eval(static_cast<double>(x1), k);
        const Real f2 = c.eval(static_cast<double>(x2), k);
        const Real c1 = (3.0L * f2 - 4.0L * f1 + f0) / (2.0L * step);
        const Real c2 = (f2 - 2.0L * f1 + f0) / (2.0L * step * step);
        sum += std::exp(omega * x2) * (f2 * m0 + c1 * m1 + c2 * m2);
    }
    return sum;
}

double parse_number(const std::string& s, std::string_view context)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ParameterError("cannot parse number '" + s + "' in '" + std::string(context) + "'");
    }
    if (used != s.size() || !std::isfinite(v))
        throw ParameterError("cannot parse number '" + s + "' in '" + std::string(context) + "'");
    return v;
}

std::vector<double> parse_list(std::string_view args, std::string_view context)
{
    std::vector<double> out;
    std::string item;
    std::istringstream in{std::string(args)};
    while (std::getline(in, item, ','))
        out.push_back(parse_number(item, context));
    return out;
}

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace

AnalyticFunction::AnalyticFunction(Term term) { terms_.push_back(std::move(term)); }

AnalyticFunction AnalyticFunction::constant(double c) { return polynomial({c}); }

AnalyticFunction AnalyticFunction::polynomial(std::vector<double> coeffs)
{
    return AnalyticFunction(Polynomial{std::move(coeffs)});
}

AnalyticFunction AnalyticFunction::exponential(double scale, double rate)
{
    return AnalyticFunction(Exponential{scale, rate});
}

AnalyticFunction AnalyticFunction::sinusoid(double amplitude, double freq, double phase)
{
    return AnalyticFunction(
        Sinusoid{amplitude * std::cos(phase), amplitude * std::sin(phase), freq});
}

AnalyticFunction AnalyticFunction::custom(std::function<double(double, int)> eval, int max_order,
                                          std::string label)
{
    if (!eval || max_order < 0)
        throw ParameterError("custom function needs a callback and max_order >= 0");
    return AnalyticFunction(Custom{std::move(eval), max_order, std::move(label)});
}

AnalyticFunction AnalyticFunction::parse(std::string_view text)
{
    AnalyticFunction result;
    std::string part;
    std::istringstream in{std::string(text)};
    bool any = false;
    while (std::getline(in, part, ';')) {
        const std::string item = trim(part);
        if (item.empty())
            continue;
        any = true;
        const auto colon = item.find(':');
        const std::string name = item.substr(0, colon);
        const std::string args = colon == std::string::npos ? "" : item.substr(colon + 1);
        if (name == "zero") {
            if (!args.empty())
                throw ParameterError("'zero' takes no arguments");
            continue;
        }
        const auto v = parse_list(args, text);
        if (name == "const") {
            if (v.size() != 1)
                throw ParameterError("const:c expects one value");
            result += constant(v[0]);
        } else if (name == "poly") {
            if (v.empty())
                throw ParameterError("poly:c0,c1,... expects at least one coefficient");
            result += polynomial(v);
        } else if (name == "exp") {
            if (v.size() != 2)
                throw ParameterError("exp:c,lambda expects two values");
            result += exponential(v[0], v[1]);
        } else if (name == "sin") {
            if (v.size() != 2 && v.size() != 3)
                throw ParameterError("sin:A,k[,phi] expects two or three values");
            result += sinusoid(v[0], v[1], v.size() == 3 ? v[2] : 0.0);
        } else {
            throw ParameterError("unknown function kind '" + name + "'");
        }
    }
    if (!any)
        throw ParameterError("empty function descriptor");
    return result;
}

Real AnalyticFunction::value(Real x, int k) const
{
    if (k < 0)
        throw ParameterError("negative derivative order");
    Real sum = 0.0L;
    for (const auto& term : terms_) {
        sum += std::visit(
            overloaded{
                [&](const Polynomial& p) {
                    const auto d = differentiate(p.coeffs, k);
                    Real r = 0.0L;
                    for (auto it = d.rbegin(); it != d.rend(); ++it)
                        r = r * x + *it;
                    return r;
                },
                [&](const Exponential& e) {
                    return e.scale * int_pow(e.rate, k) * std::exp(static_cast<Real>(e.rate) * x);
                },
                [&](const Sinusoid& s) {
                    const auto [a, b] = rotate(s, k);
                    const Real arg = static_cast<Real>(s.freq) * x;
                    return a * std::sin(arg) + b * std::cos(arg);
                },
                [&](const Custom& c) -> Real {
                    if (k > c.max_order)
                        throw CapabilityError("custom function '" + c.label +
                                              "' has no derivative of order " + std::to_string(k));
                    return c.eval(static_cast<double>(x), k);
                },
            },
            term);
    }
    return sum;
}

std::vector<Real> AnalyticFunction::derivatives(Real x, int count, int first) const
{
    std::vector<Real> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = value(x, first + i);
    return out;
}

int AnalyticFunction::max_derivative_order() const
{
    int m = INT_MAX;
    for (const auto& term : terms_)
        if (const auto* c = std::get_if<Custom>(&term))
            m = std::min(m, c->max_order);
    return m;
}

bool AnalyticFunction::is_zero() const
{
    for (const auto& term : terms_) {
        const bool zero = std::visit(
            overloaded{
                [](const Polynomial& p) {
                    for (double c : p.coeffs)
                        if (c != 0.0)
                            return false;
                    return true;
                },
                [](const Exponential& e) { return e.scale == 0.0; },
                [](const Sinusoid& s) { return s.sin_coeff == 0.0 && s.cos_coeff == 0.0; },
                [](const Custom&) { return false; },
            },
            term);
        if (!zero)
            return false;
    }
    return true;
}

bool AnalyticFunction::has_closed_form() const
{
    for (const auto& term : terms_)
        if (std::holds_alternative<Custom>(term))
            return false;
    return true;
}

double AnalyticFunction::growth_rate() const
{
    double g = 0.0;
    for (const auto& term : terms_)
        if (const auto* e = std::get_if<Exponential>(&term))
            if (e->scale != 0.0)
                g = std::max(g, e->rate);
    return g;
}

Real AnalyticFunction::laplace(Real s) const
{
    if (!has_closed_form())
        throw CapabilityError("no closed-form Laplace transform for " + describe());
    if (!(s > growth_rate()))
        throw ParameterError("Laplace variable must exceed the growth rate of " + describe());
    Real sum = 0.0L;
    for (const auto& term : terms_) {
        sum += std::visit(
            overloaded{
                [&](const Polynomial& p) {
                    Real r = 0.0L, fact = 1.0L, spow = s;
                    for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
                        if (j > 0) {
                            fact *= static_cast<Real>(j);
                            spow *= s;
                        }
                        r += p.coeffs[j] * fact / spow;
                    }
                    return r;
                },
                [&](const Exponential& e) { return e.scale / (s - e.rate); },
                [&](const Sinusoid& q) {
                    const Real k = q.freq;
                    return (q.sin_coeff * k + q.cos_coeff * s) / (s * s + k * k);
                },
                [&](const Custom&) -> Real { return 0.0L; },
            },
            term);
    }
    return sum;
}

Real AnalyticFunction::exp_moment_integral(Real omega, Real a, int k, int panels) const
{
    if (!(a > 0.0L))
        throw ParameterError("moment interval length must be positive");
    Real sum = 0.0L;
    for (const auto& term : terms_) {
        sum += std::visit(
            overloaded{
                [&](const Polynomial& p) {
                    const auto d = differentiate(p.coeffs, k);
                    if (d.empty())
                        return 0.0L;
                    // int_{-a}^0 e^{omega tau} tau^j dtau = (-1)^j a^{j+1} g_j(omega a)
                    const auto g = exp_moments(static_cast<int>(d.size()) - 1, omega * a);
                    Real r = 0.0L, apow = a;
                    for (std::size_t j = 0; j < d.size(); ++j) {
                        const Real sign = (j % 2) ? -1.0L : 1.0L;
                        r += d[j] * sign * apow * g[j];
                        apow *= a;
                    }
                    return r;
                },
                [&](const Exponential& e) {
                    return e.scale * int_pow(e.rate, k) * a * exp_moment(0, (omega + e.rate) * a);
                },
                [&](const Sinusoid& q) {
                    const auto [sa, cb] = rotate(q, k);
                    const std::complex<Real> x(omega * a, static_cast<Real>(q.freq) * a);
                    const std::complex<Real> m = a * exp_moment0(x);
                    // e^{i k tau}: real part pairs with cos, imaginary with sin
                    return sa * m.imag() + cb * m.real();
                },
                [&](const Custom& c) -> Real {
                    if (k > c.max_order)
                        throw CapabilityError("custom function '" + c.label +
                                              "' has no derivative of order " + std::to_string(k));
                    return simpson_filon(c, omega, a, k, panels);
                },
            },
            term);
    }
    return sum;
}

std::string AnalyticFunction::describe() const
{
    if (terms_.empty())
        return "zero";
    std::ostringstream out;
    out.precision(17);
    bool first = true;
    for (const auto& term : terms_) {
        if (!first)
            out << ';';
        first = false;
        std::visit(overloaded{
                       [&](const Polynomial& p) {
                           out << "poly:";
                           for (std::size_t j = 0; j < p.coeffs.size(); ++j)
                               out << (j ? "," : "") << p.coeffs[j];
                       },
                       [&](const Exponential& e) { out << "exp:" << e.scale << ',' << e.rate; },
                       [&](const Sinusoid& s) {
                           out << "sincos:" << s.sin_coeff << ',' << s.cos_coeff << ',' << s.freq;
                       },
                       [&](const Custom& c) { out << c.label; },
                   },
                   term);
    }
    return out.str();
}

AnalyticFunction& AnalyticFunction::operator+=(const AnalyticFunction& other)
{
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
}

AnalyticFunction& AnalyticFunction::operator*=(double factor)
{
    for (auto& term : terms_) {
        std::visit(overloaded{
                       [&](Polynomial& p) {
                           for (double& c : p.coeffs)
                               c *= factor;
                       },
                       [&](Exponential& e) { e.scale *= factor; },
                       [&](Sinusoid& s) {
                           s.sin_coeff *= factor;
                           s.cos_coeff *= factor;
                       },
                       [&](Custom& c) {
                           c.eval = [inner = std::move(c.eval), factor](double x, int k) {
                               return factor * inner(x, k);
                           };
                       },
                   },
                   term);
    }
    return *this;
}

AnalyticFunction operator+(AnalyticFunction lhs, const AnalyticFunction& rhs)
{
    lhs += rhs;
    return lhs;
}

AnalyticFunction operator*(double factor, AnalyticFunction f)
{
    f *= factor;
    return f;
}

} // namespace fracdiff
