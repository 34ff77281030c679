#include "cli.hpp"

#include "fracmem/arfima.hpp"
#include "fracmem/csv.hpp"
#include "fracmem/errors.hpp"
#include "fracmem/exactops.hpp"
#include "fracmem/glops.hpp"
#include "fracmem/spectral.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fracmem::cli {
namespace {

using csv::format_number;

std::string describe(double v) { return format_number(v); }

void require(bool ok, const std::string& message) {
    if (!ok) throw UsageError(message);
}

Series load_series(const RunConfig& config, std::istream& in) {
    const std::string path = config.input_path.value_or("-");
    if (path == "-") return csv::read_series(in, "<stdin>");
    std::ifstream file(path);
    if (!file) throw ParseError(path, 0, 0, "cannot open input file");
    return csv::read_series(file, path);
}

// Flags that every numeric command shares.
void add_common(CLI::App* sub, RunConfig& c) {
    sub->add_option("-o,--output", c.output_path, "Output file ('-' for standard output)");
}

void add_input(CLI::App* sub, RunConfig& c) {
    sub->add_option("-i,--input", c.input_path, "Input CSV with header t,value ('-' for standard input)");
}

csv::Table kernel_table(const RunConfig& c) {
    const auto& p = c.params;
    const auto window = exactops::exact_kernel_window(*p.order, *p.truncation);
    csv::Table t;
    t.metadata = {"kernel=exact order=" + describe(*p.order) + " half_width=" + std::to_string(*p.truncation)};
    t.header = {"m", "weight"};
    const long M = static_cast<long>(window.half_width());
    for (long m = -M; m <= M; ++m) t.rows.push_back({static_cast<double>(m), window.at(m)});
    return t;
}

csv::Table coeffs_table(const RunConfig& c) {
    const auto& p = c.params;
    const auto coeffs = glops::gl_coefficients(*p.order, *p.truncation);
    csv::Table t;
    t.metadata = {"coefficients of (1-L)^order order=" + describe(*p.order) +
                  " truncation=" + std::to_string(*p.truncation)};
    t.header = {"m", "coefficient"};
    for (std::size_t m = 0; m <= coeffs.truncation(); ++m) t.rows.push_back({static_cast<double>(m), coeffs[m]});
    return t;
}

void write_difference(const RunConfig& c, std::istream& in, std::ostream& out) {
    const auto& p = c.params;
    const Series y = load_series(c, in);
    if (p.family == "gl") {
        const std::size_t m = p.truncation.value_or(default_truncation(y.size()));
        const Series z = glops::gl_difference(y, *p.order, m);
        const std::vector<std::string> meta = {"gl_difference order=" + describe(*p.order) +
                                               " truncation=" + std::to_string(m)};
        csv::write_series(out, z, meta);
        return;
    }
    const std::size_t half_width = p.truncation.value_or(64);
    const auto window = exactops::exact_kernel_window(*p.order, half_width);
    const auto boundary = p.boundary == "periodic" ? exactops::Boundary::periodic : exactops::Boundary::zero;
    const Series z = exactops::exact_difference(y, window, boundary);
    const std::vector<std::string> meta = {"exact_difference order=" + describe(*p.order) + " half_width=" +
                                           std::to_string(half_width) + " boundary=" + p.boundary};
    csv::write_series(out, z, meta);
}

void write_simulation(const RunConfig& c, std::ostream& out) {
    const auto& p = c.params;
    arfima::ArfimaSpec spec;
    spec.d = *p.d;
    spec.ar = p.ar;
    spec.ma = p.ma;
    spec.n = *p.n;
    spec.burn_in = p.burn_in;
    spec.truncation = p.truncation.value_or(default_truncation(spec.n + spec.burn_in));
    const arfima::NoiseSpec noise{p.sigma, p.seed};
    const Series y = arfima::simulate_arfima(spec, noise);

    std::vector<std::string> meta = {
        "d=" + describe(spec.d) + ", p=" + std::to_string(spec.ar.size()) + ", q=" + std::to_string(spec.ma.size()) +
            ", sigma=" + describe(p.sigma) + ", seed=" + std::to_string(p.seed) +
            ", truncation=" + std::to_string(spec.truncation),
        "burn_in=" + std::to_string(spec.burn_in),
    };
    if (!arfima::in_classical_stationary_range(spec.d)) meta.emplace_back("warning: |d| >= 0.5 is outside the stationary range");
    csv::write_series(out, y, meta);
}

csv::Table spectrum_table(const RunConfig& c, std::istream& in) {
    const Series y = load_series(c, in);
    const auto points = spectral::periodogram(y);
    csv::Table t;
    t.metadata = {"periodogram S = |yhat|^2 / n after mean removal, n=" + std::to_string(y.size()) +
                  ", omega in radians per time unit"};
    t.header = {"omega", "S"};
    for (const auto& pt : points) t.rows.push_back({pt.omega, pt.power});
    return t;
}

csv::Table response_table(const RunConfig& c) {
    const auto& p = c.params;
    const auto family = p.family == "gl" ? spectral::OperatorFamily::gl : spectral::OperatorFamily::exact;
    const std::size_t m = p.truncation.value_or(family == spectral::OperatorFamily::gl ? 4096 : 1024);
    const auto grid = spectral::uniform_grid(p.grid);
    const auto report = spectral::response_report(*p.order, family, m, grid);
    csv::Table t;
    t.metadata = {"response family=" + std::string(spectral::to_string(family)) + " order=" + describe(*p.order) +
                      " truncation=" + std::to_string(m),
                  "target=(i omega_T)^order, transform convention exp(-i omega t)"};
    t.header = {"omega_T", "measured_re", "measured_im", "target_re", "target_im", "rel_error", "magnitude_rel_error"};
    for (const auto& s : report.vs_power_law) {
        t.rows.push_back({s.omega_T, s.measured.real(), s.measured.imag(), s.target.real(), s.target.imag(),
                          s.rel_error, s.magnitude_rel_error});
    }
    return t;
}

void write_estimate(const RunConfig& c, std::istream& in, std::ostream& out) {
    const Series y = load_series(c, in);
    const std::size_t bw = c.params.bandwidth.value_or(arfima::default_bandwidth(y.size()));
    if (bw < 3 || bw > y.size() / 2) {
        throw UsageError("--bandwidth " + std::to_string(bw) + " outside [3, n/2] for n = " + std::to_string(y.size()));
    }
    const auto est = arfima::estimate_memory(y, bw);
    out << "d_hat,std_err,bandwidth,n,classification\n"
        << format_number(est.d_hat) << ',' << format_number(est.std_err) << ',' << est.bandwidth << ',' << est.n
        << ',' << arfima::to_string(est.classification) << '\n';
}

csv::Table acf_table(const RunConfig& c, std::istream& in) {
    const auto& p = c.params;
    csv::Table t;
    t.header = {"lag", "acvf"};
    std::vector<double> acov;
    if (p.d) {
        const std::size_t max_lag = p.max_lag.value_or(200);
        const std::size_t m = p.truncation.value_or(std::max<std::size_t>(10 * max_lag, 20000));
        acov = arfima::theoretical_acf(*p.d, p.sigma, max_lag, m);
        t.metadata = {"theoretical autocovariance d=" + describe(*p.d) + " sigma=" + describe(p.sigma) +
                      " truncation=" + std::to_string(m)};
    } else {
        const Series y = load_series(c, in);
        const std::size_t max_lag = p.max_lag.value_or(std::min<std::size_t>(y.size() - 1, 100));
        if (max_lag >= y.size()) {
            throw UsageError("--max-lag " + std::to_string(max_lag) + " must be below the series length " +
                             std::to_string(y.size()));
        }
        acov = spectral::sample_autocovariance(y, max_lag);
        t.metadata = {"sample autocovariance, biased (1/n) normalization, n=" + std::to_string(y.size())};
    }
    for (std::size_t k = 0; k < acov.size(); ++k) t.rows.push_back({static_cast<double>(k), acov[k]});
    return t;
}

void execute(const RunConfig& c, std::istream& in, std::ostream& out) {
    switch (c.command) {
        case Command::kernel: csv::write_table(out, kernel_table(c)); break;
        case Command::coeffs: csv::write_table(out, coeffs_table(c)); break;
        case Command::difference: write_difference(c, in, out); break;
        case Command::simulate: write_simulation(c, out); break;
        case Command::spectrum: csv::write_table(out, spectrum_table(c, in)); break;
        case Command::response: csv::write_table(out, response_table(c)); break;
        case Command::estimate: write_estimate(c, in, out); break;
        case Command::acf: csv::write_table(out, acf_table(c, in)); break;
    }
}

std::string one_line(std::string s) {
    for (char& ch : s) {
        if (ch == '\n' || ch == '\r') ch = ' ';
    }
    return s;
}

}  // namespace

std::size_t default_truncation(std::size_t n) { return std::min<std::size_t>(n, 4096); }

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& help_out) {
    RunConfig c;
    auto& p = c.params;
    CLI::App app{"Fractional differencing, exact fractional differences and long-memory diagnostics", "fracmem"};
    app.require_subcommand(1);

    auto* kernel = app.add_subcommand("kernel", "Exact fractional difference kernel K(-M..M) as m,weight");
    kernel->add_option("--order", p.order, "Order alpha (> -1)")->required();
    kernel->add_option("--half-width,--truncation", p.truncation, "Half-width M")->required();
    add_common(kernel, c);

    auto* coeffs = app.add_subcommand("coeffs", "Grunwald-Letnikov coefficients of (1-L)^order as m,coefficient");
    coeffs->add_option("--order", p.order, "Order")->required();
    coeffs->add_option("--truncation", p.truncation, "Last lag M")->required();
    add_common(coeffs, c);

    auto* difference = app.add_subcommand("difference", "Fractional difference of a t,value series");
    difference->add_option("--order", p.order, "Order (negative integrates)")->required();
    difference->add_option("--family", p.family, "gl or exact")->check(CLI::IsMember({"gl", "exact"}));
    difference->add_option("--truncation,--half-width", p.truncation,
                           "GL truncation (default min(n, 4096)) or exact half-width (default 64)");
    difference->add_option("--boundary", p.boundary, "zero or periodic (exact family)")
        ->check(CLI::IsMember({"zero", "periodic"}));
    add_input(difference, c);
    add_common(difference, c);

    auto* simulate = app.add_subcommand("simulate", "Simulate an ARFIMA(p,d,q) series");
    simulate->add_option("--d", p.d, "Memory order d, |d| < 1")->required();
    simulate->add_option("--n", p.n, "Sample count")->required();
    simulate->add_option("--seed", p.seed, "Noise seed");
    simulate->add_option("--sigma", p.sigma, "Noise standard deviation");
    simulate->add_option("--burn-in", p.burn_in, "Samples to discard");
    simulate->add_option("--truncation", p.truncation, "Fractional filter length (default min(n + burn-in, 4096))");
    simulate->add_option("--ar", p.ar, "AR coefficients, comma separated")->delimiter(',');
    simulate->add_option("--ma", p.ma, "MA coefficients, comma separated")->delimiter(',');
    add_common(simulate, c);

    auto* spectrum = app.add_subcommand("spectrum", "Periodogram of a t,value series as omega,S");
    add_input(spectrum, c);
    add_common(spectrum, c);

    auto* response = app.add_subcommand("response", "Frequency response against (i omega T)^order");
    response->add_option("--family", p.family, "gl or exact")->check(CLI::IsMember({"gl", "exact"}));
    response->add_option("--order", p.order, "Order")->required();
    response->add_option("--truncation,--half-width", p.truncation,
                         "GL truncation (default 4096) or exact half-width (default 1024)");
    response->add_option("--grid", p.grid, "Number of grid points omega_T = pi j / grid");
    add_common(response, c);

    auto* estimate = app.add_subcommand("estimate", "Log-periodogram estimate of the memory order d");
    estimate->add_option("--bandwidth", p.bandwidth, "Number of low frequencies (default floor(sqrt(n)))");
    add_input(estimate, c);
    add_common(estimate, c);

    auto* acf = app.add_subcommand("acf", "Sample autocovariance of a series, or the ARFIMA(0,d,0) one with --d");
    acf->add_option("--max-lag", p.max_lag, "Largest lag");
    acf->add_option("--d", p.d, "Theoretical autocovariance for this d instead of reading input");
    acf->add_option("--sigma", p.sigma, "Noise standard deviation (theoretical)");
    acf->add_option("--truncation", p.truncation, "psi-weight truncation (theoretical)");
    add_input(acf, c);
    add_common(acf, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        help_out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        help_out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    const std::pair<CLI::App*, Command> table[] = {
        {kernel, Command::kernel},     {coeffs, Command::coeffs},     {difference, Command::difference},
        {simulate, Command::simulate}, {spectrum, Command::spectrum}, {response, Command::response},
        {estimate, Command::estimate}, {acf, Command::acf},
    };
    for (const auto& [sub, cmd] : table) {
        if (sub->parsed()) c.command = cmd;
    }
    return c;
}

void validate(const RunConfig& c) {
    const auto& p = c.params;
    auto finite = [](const std::optional<double>& v) { return v && std::isfinite(*v); };
    switch (c.command) {
        case Command::kernel:
            require(finite(p.order) && *p.order > -1.0, "--order must be > -1");
            require(p.truncation && *p.truncation >= 1, "--half-width must be >= 1");
            require(*p.truncation <= glops::max_truncation, "--half-width must be <= 1000000");
            break;
        case Command::coeffs:
            require(finite(p.order), "--order must be finite");
            require(p.truncation && *p.truncation <= glops::max_truncation, "--truncation must be <= 1000000");
            break;
        case Command::difference:
            require(finite(p.order), "--order must be finite");
            if (p.family == "exact") {
                require(*p.order > -1.0, "--order must be > -1 for the exact family");
                require(!p.truncation || *p.truncation >= 1, "--half-width must be >= 1");
            }
            require(!p.truncation || *p.truncation <= glops::max_truncation, "--truncation must be <= 1000000");
            break;
        case Command::simulate:
            require(finite(p.d) && std::abs(*p.d) < 1.0, "--d must satisfy |d| < 1");
            require(p.n && *p.n >= 1, "--n must be >= 1");
            require(std::isfinite(p.sigma) && p.sigma > 0.0, "--sigma must be > 0");
            require(!p.truncation || *p.truncation <= glops::max_truncation, "--truncation must be <= 1000000");
            for (const auto& r : arfima::ar_characteristic_roots(p.ar)) {
                require(std::abs(r) < 1.0 - arfima::ar_root_tolerance,
                        "--ar polynomial is unstable (root magnitude " + describe(std::abs(r)) + ")");
            }
            break;
        case Command::spectrum: break;
        case Command::response:
            require(finite(p.order), "--order must be finite");
            if (p.family == "exact") {
                require(*p.order > -1.0, "--order must be > -1 for the exact family");
                require(!p.truncation || *p.truncation >= 1, "--half-width must be >= 1");
            }
            require(!p.truncation || *p.truncation <= glops::max_truncation, "--truncation must be <= 1000000");
            require(p.grid >= 1 && p.grid <= 1'000'000, "--grid must lie in [1, 1000000]");
            break;
        case Command::estimate:
            require(!p.bandwidth || *p.bandwidth >= 3, "--bandwidth must be >= 3");
            break;
        case Command::acf:
            if (p.d) {
                require(std::isfinite(*p.d) && std::abs(*p.d) < 0.5, "--d must satisfy |d| < 0.5");
                require(std::isfinite(p.sigma) && p.sigma > 0.0, "--sigma must be > 0");
                const std::size_t max_lag = p.max_lag.value_or(200);
                require(!p.truncation || *p.truncation >= 10 * max_lag, "--truncation must be >= 10 * max-lag");
            }
            break;
    }
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        std::ostringstream buffer;
        execute(config, in, buffer);
        if (config.output_path == "-") {
            out << buffer.str();
            out.flush();
        } else {
            std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
            if (!file) throw UsageError("cannot open output file " + config.output_path);
            file << buffer.str();
            if (!file.flush()) throw UsageError("failed to write output file " + config.output_path);
        }
        return exit_ok;
    } catch (const ParseError& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return exit_input;
    } catch (const ConsistencyError& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return exit_consistency;
    } catch (const ConvergenceError& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return exit_consistency;
    } catch (const std::exception& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return exit_usage;
    }
}

int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    std::optional<RunConfig> config;
    try {
        config = parse_args(argc, argv, out);
    } catch (const std::exception& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return exit_usage;
    }
    if (!config) return exit_ok;
    return run(*config, in, out, err);
}

}  // namespace fracmem::cli
