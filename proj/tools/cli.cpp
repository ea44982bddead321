#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "fracdiff/derivatives.hpp"
#include "fracdiff/errors.hpp"
#include "fracdiff/laplace.hpp"

namespace fracdiff::cli {

namespace {

struct RunConfig {
    std::string command;
    std::vector<double> alpha;
    std::string history = "zero";
    std::string signal = "zero";
    double a = 1.0;
    double t_end = 5.0;
    double dt = 1e-3;
    double t_min = -1.0;
    double omega_min = FrequencyGrid::kDefaultOmegaMin;
    double omega_max = FrequencyGrid::kDefaultOmegaMax;
    std::size_t nodes = FrequencyGrid::kDefaultCount;
    std::vector<double> s;
    std::vector<double> t;
    std::optional<double> tol;
    std::string method = "rl";
    std::string out;
};

class Csv {
public:
    explicit Csv(std::ostream& os) : os_(os) {}
    void header(std::initializer_list<const char*> cols)
    {
        bool first = true;
        for (const char* c : cols) {
            os_ << (first ? "" : ",") << c;
            first = false;
        }
        os_ << '\n';
    }
    void row(std::initializer_list<double> vals)
    {
        bool first = true;
        for (double v : vals) {
            os_ << (first ? "" : ",") << format_number(v);
            first = false;
        }
        os_ << '\n';
    }

private:
    std::ostream& os_;
};

double single_alpha(const RunConfig& cfg)
{
    if (cfg.alpha.size() != 1)
        throw ParameterError("--alpha must be given exactly once for '" + cfg.command + "'");
    return cfg.alpha.front();
}

HistorySpec make_history(const RunConfig& cfg)
{
    return HistorySpec(AnalyticFunction::parse(cfg.history), cfg.a);
}

SignalSpec make_signal(const RunConfig& cfg) { return SignalSpec(AnalyticFunction::parse(cfg.signal)); }

GridPtr grid_of(const RunConfig& cfg) { return make_grid(cfg.omega_min, cfg.omega_max, cfg.nodes); }

void validate(const RunConfig& cfg)
{
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw ParameterError(std::string(name) + " must be positive");
    };
    positive(cfg.a, "--a");
    positive(cfg.t_end, "--t-end");
    positive(cfg.dt, "--dt");
    positive(cfg.omega_min, "--omega-min");
    positive(cfg.omega_max, "--omega-max");
    if (!(cfg.omega_max > cfg.omega_min))
        throw ParameterError("--omega-max must exceed --omega-min");
    if (cfg.nodes < 2)
        throw ParameterError("--nodes must be at least 2");
    if (cfg.dt > cfg.t_end)
        throw ParameterError("--dt must not exceed --t-end");
    for (double s : cfg.s)
        positive(s, "--s");
    for (double t : cfg.t)
        positive(t, "--t");
    if (cfg.tol)
        positive(*cfg.tol, "--tol");
}

int cmd_grid_check(const RunConfig& cfg, Csv& csv)
{
    std::vector<double> alphas = cfg.alpha;
    if (alphas.empty())
        alphas = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    const auto& ss = cfg.s.empty() ? kDefaultLaplaceSamples : cfg.s;
    const double tol = cfg.tol.value_or(5e-3);
    const auto grid = grid_of(cfg);
    bool pass = true;
    csv.header({"alpha", "s", "computed", "expected", "rel_err"});
    for (double alpha : alphas) {
        for (double s : ss) {
            const double computed = mu_integral(alpha, s, *grid);
            const double expected = std::pow(s, -alpha);
            const double rel = std::fabs(computed - expected) / expected;
            pass = pass && rel <= tol;
            csv.row({alpha, s, computed, expected, rel});
        }
    }
    return pass ? kPass : kToleranceFail;
}

int cmd_integrate(const RunConfig& cfg, Csv& csv)
{
    const auto series = simulate_integral(make_signal(cfg), make_history(cfg), single_alpha(cfg),
                                          cfg.t_end, cfg.dt, grid_of(cfg));
    csv.header({"t", "value"});
    for (std::size_t i = 0; i < series.size(); ++i)
        csv.row({series.t[i], series.values[i]});
    return kPass;
}

int cmd_derive(const RunConfig& cfg, Csv& csv, std::ostream& err)
{
    DerivativeResult r;
    if (cfg.method == "rl")
        r = rl_derivative(make_signal(cfg), make_history(cfg), single_alpha(cfg), cfg.t_end,
                          cfg.dt, grid_of(cfg));
    else if (cfg.method == "caputo")
        r = caputo_derivative(make_signal(cfg), make_history(cfg), single_alpha(cfg), cfg.t_end,
                              cfg.dt, grid_of(cfg));
    else
        throw ParameterError("--method must be 'rl' or 'caputo'");
    for (const auto& w : r.continuity_warnings)
        err << "warning: " << w << '\n';
    csv.header({"t", "value"});
    for (std::size_t i = 0; i < r.series.size(); ++i)
        csv.row({r.series.t[i], r.series.values[i]});
    return kPass;
}

int cmd_equivalence(const RunConfig& cfg, Csv& csv, std::ostream& err)
{
    const double tol = cfg.tol.value_or(1e-3);
    const auto rep = equivalence_gap(make_signal(cfg), make_history(cfg), single_alpha(cfg),
                                     cfg.t_end, cfg.dt, grid_of(cfg), cfg.t_min);
    for (const auto& w : rep.warnings)
        err << "warning: " << w << '\n';
    csv.header({"t", "rl", "caputo", "gap"});
    const auto& a = rep.rl.series;
    const auto& b = rep.caputo.series;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double gap = std::fabs(a.values[i] - b.values[i]) / std::max(1.0, std::fabs(a.values[i]));
        csv.row({a.t[i], a.values[i], b.values[i], gap});
    }
    err << "max gap " << format_number(rep.max_gap) << " at t = " << format_number(rep.t_at_max)
        << '\n';
    return rep.max_gap <= tol ? kPass : kToleranceFail;
}

int cmd_laplace(const RunConfig& cfg, Csv& csv)
{
    const double tol = cfg.tol.value_or(1e-10);
    const auto& ss = cfg.s.empty() ? kDefaultLaplaceSamples : cfg.s;
    const auto rows = transform_equality_report(make_signal(cfg), make_history(cfg),
                                                single_alpha(cfg), ss, grid_of(cfg));
    bool pass = true;
    csv.header({"s", "rl_total", "caputo_total", "gap"});
    for (const auto& r : rows) {
        pass = pass && r.gap <= tol;
        csv.row({r.s, r.rl_total, r.caputo_total, r.gap});
    }
    return pass ? kPass : kToleranceFail;
}

int cmd_psi(const RunConfig& cfg, Csv& csv)
{
    const double tol = cfg.tol.value_or(1e-3);
    const std::vector<double> ts = cfg.t.empty() ? std::vector<double>{0.1, 0.5, 1.0, 2.0, 5.0} : cfg.t;
    const auto history = make_history(cfg);
    const double alpha = single_alpha(cfg);
    const auto grid = grid_of(cfg);
    bool pass = true;
    csv.header({"t", "psi_time", "psi_diffusive", "diff"});
    for (double t : ts) {
        const auto p = psi(history, alpha, t, grid);
        const double diff = std::fabs(p.time - p.diffusive);
        pass = pass && diff <= tol * std::max(1.0, std::fabs(p.time));
        csv.row({t, p.time, p.diffusive, diff});
    }
    return pass ? kPass : kToleranceFail;
}

} // namespace

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Initialized Riemann-Liouville and Caputo derivatives via the diffusive representation",
                 "fracdiff"};
    app.set_config("--config", "", "Config file (key = value); command-line flags take precedence");
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--alpha", cfg.alpha, "Fractional order (repeatable for grid-check)");
    app.add_option("--a", cfg.a, "History length")->capture_default_str();
    app.add_option("--history", cfg.history, "History descriptor, e.g. const:1, poly:1,1, exp:c,l, sin:A,k[,phi], zero")
        ->capture_default_str();
    app.add_option("--signal", cfg.signal, "Signal descriptor (same language as --history)")
        ->capture_default_str();
    app.add_option("--t-end", cfg.t_end, "Final time")->capture_default_str();
    app.add_option("--dt", cfg.dt, "Time step")->capture_default_str();
    app.add_option("--t-min", cfg.t_min, "Start of the gap window (default 10*dt)");
    app.add_option("--omega-min", cfg.omega_min, "Lowest grid frequency")->capture_default_str();
    app.add_option("--omega-max", cfg.omega_max, "Highest grid frequency")->capture_default_str();
    app.add_option("--nodes", cfg.nodes, "Grid node count")->capture_default_str();
    app.add_option("--s", cfg.s, "Laplace sample (repeatable)");
    app.add_option("--t", cfg.t, "Time sample for psi (repeatable)");
    app.add_option("--tol", cfg.tol, "Pass threshold");
    app.add_option("--method", cfg.method, "derive: rl or caputo")->capture_default_str();
    app.add_option("--out", cfg.out, "Write CSV to this path instead of stdout");

    const std::vector<std::pair<const char*, const char*>> commands{
        {"grid-check", "Stieltjes identity sweep of the mu-weighted quadrature"},
        {"integrate", "Initialized fractional integral time series"},
        {"derive", "Initialized RL or Caputo derivative time series"},
        {"equivalence", "Time-domain gap between the RL and Caputo derivatives"},
        {"laplace", "Laplace-domain gap between the RL and Caputo transforms"},
        {"psi", "Initialization function, direct vs diffusive"},
    };
    for (const auto& [name, help] : commands)
        app.add_subcommand(name, help)->fallthrough();

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    if (!argv_rev.empty())
        argv_rev.pop_back();
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    std::ostringstream buffer;
    Csv csv(buffer);
    int code = kPass;
    try {
        validate(cfg);
        if (cfg.command == "grid-check")
            code = cmd_grid_check(cfg, csv);
        else if (cfg.command == "integrate")
            code = cmd_integrate(cfg, csv);
        else if (cfg.command == "derive")
            code = cmd_derive(cfg, csv, err);
        else if (cfg.command == "equivalence")
            code = cmd_equivalence(cfg, csv, err);
        else if (cfg.command == "laplace")
            code = cmd_laplace(cfg, csv);
        else
            code = cmd_psi(cfg, csv);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const CapabilityError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << '\n';
        return kToleranceFail;
    }

    if (cfg.out.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << cfg.out << '\n';
            return kUsageError;
        }
        file << buffer.str();
    }
    if (code == kToleranceFail)
        err << cfg.command << ": tolerance exceeded\n";
    return code;
}

} // namespace fracdiff::cli
