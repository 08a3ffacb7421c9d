#include "weierlab/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "weierlab/complex_io.hpp"
#include "weierlab/errors.hpp"
#include "weierlab/modular.hpp"
#include "weierlab/verify.hpp"

namespace weierlab::cli
{

namespace
{

using Complex = std::complex<double>;

constexpr std::array<std::pair<std::string_view, Function>, 13> function_names{{
    {"zeta", Function::zeta},
    {"zetaHat", Function::zeta_hat},
    {"wp", Function::wp},
    {"sigma", Function::sigma},
    {"theta", Function::theta},
    {"thetaPrime", Function::theta_prime},
    {"raiseTheta", Function::raise_theta},
    {"indexZeroQuotient", Function::index_zero_quotient},
    {"eta", Function::eta},
    {"e2", Function::e2},
    {"g2", Function::g2},
    {"g2Star", Function::g2_star},
    {"sRegularized", Function::s_regularized},
}};

constexpr const char *shell_env = "WEIERLAB_SHELL_RADIUS";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Complex require_complex(const std::string &text, std::string_view what)
{
    auto value = parse_complex(text);
    if (!value) {
        throw UsageError("cannot parse " + std::string(what) + " '" + text + "' (expected a+bi)");
    }
    return *value;
}

Scheme parse_scheme(const std::string &text)
{
    if (text == "lattice") {
        return Scheme::LatticeSum;
    }
    if (text == "qseries") {
        return Scheme::QSeries;
    }
    throw UsageError("unknown scheme '" + text + "' (expected lattice or qseries)");
}

// --shell wins over the environment, which wins over the default.
TruncationPolicy make_policy(const std::optional<std::int64_t> &shell, const std::optional<int> &terms)
{
    TruncationPolicy policy;
    if (shell) {
        policy.shell_radius = *shell;
    } else if (const char *env = std::getenv(shell_env); env != nullptr && *env != '\0') {
        std::int64_t value = 0;
        const std::string_view text(env);
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            throw UsageError(std::string(shell_env) + " is not an integer: '" + std::string(text) + "'");
        }
        policy.shell_radius = value;
    }
    if (terms) {
        policy.q_terms = *terms;
    }
    try {
        policy.validate();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    return policy;
}

std::set<std::string> parse_suite(const std::string &suite)
{
    std::set<std::string> selection;
    if (suite == "all") {
        return selection;
    }
    std::stringstream ss(suite);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        find_check(item);
        selection.insert(item);
    }
    if (selection.empty()) {
        throw UsageError("empty --suite");
    }
    return selection;
}

void add_common_options(CLI::App *cmd, std::optional<std::int64_t> &shell, std::optional<int> &terms)
{
    cmd->add_option("--shell", shell, "Shell radius N of the lattice sums (overrides WEIERLAB_SHELL_RADIUS)");
    cmd->add_option("--terms", terms, "Number of q-series terms");
}

} // namespace

std::optional<Function> parse_function(std::string_view name)
{
    for (const auto &[key, f] : function_names) {
        if (key == name) {
            return f;
        }
    }
    return std::nullopt;
}

std::string_view function_name(Function f)
{
    for (const auto &[key, value] : function_names) {
        if (value == f) {
            return key;
        }
    }
    return "?";
}

bool takes_z(Function f)
{
    switch (f) {
        case Function::eta:
        case Function::e2:
        case Function::g2:
        case Function::g2_star:
        case Function::s_regularized:
            return false;
        default:
            return true;
    }
}

bool is_grid_function(Function f)
{
    switch (f) {
        case Function::zeta:
        case Function::zeta_hat:
        case Function::wp:
        case Function::sigma:
        case Function::theta:
        case Function::index_zero_quotient:
            return true;
        default:
            return false;
    }
}

Complex evaluate(Function f, const Complex &z, const TauParameter &tau, const TruncationPolicy &policy,
                 Scheme scheme)
{
    const auto terms = QSeriesTerms::from(policy);
    switch (f) {
        case Function::zeta:
            return scheme == Scheme::LatticeSum ? zeta_lattice(z, tau, policy) : zeta_qseries(z, tau, terms);
        case Function::zeta_hat:
            return zeta_hat(z, tau, policy, scheme).total;
        case Function::wp:
            return wp_lattice(z, tau, policy);
        case Function::sigma:
            return sigma_product(z, tau, policy);
        case Function::theta:
            return jacobi_theta(z, tau, terms);
        case Function::theta_prime:
            return theta_prime(z, tau, terms);
        case Function::raise_theta:
            return raise_theta(z, tau, terms);
        case Function::index_zero_quotient:
            return index_zero_quotient(z, tau, terms);
        case Function::eta:
            return dedekind_eta(tau, terms);
        case Function::e2:
            return eisenstein_e2(tau, terms);
        case Function::g2:
            return g2(tau, terms);
        case Function::g2_star:
            return g2_star(tau, terms);
        case Function::s_regularized:
            return s_regularized_sum(tau, policy);
    }
    throw std::logic_error("unhandled function");
}

void write_grid(const GridRequest &request, const TruncationPolicy &policy, std::ostream &out)
{
    const auto tau = make_tau(request.tau);
    const double da = (request.a_max - request.a_min) / request.nx;
    const double db = (request.b_max - request.b_min) / request.ny;
    out << "a,b,re_z,im_z,re_f,im_f\n";
    for (int j = 0; j < request.ny; ++j) {
        const double b = request.b_min + j * db;
        for (int i = 0; i < request.nx; ++i) {
            const double a = request.a_min + i * da;
            const Complex z = a + b * tau.value();
            out << format_real_roundtrip(a) << ',' << format_real_roundtrip(b) << ','
                << format_real_roundtrip(z.real()) << ',' << format_real_roundtrip(z.imag()) << ',';
            try {
                const auto f = evaluate(request.function, z, tau, policy, request.scheme);
                out << format_real_roundtrip(f.real()) << ',' << format_real_roundtrip(f.imag());
            } catch (const PoleAtLatticePoint &) {
                out << ',';
            }
            out << '\n';
        }
    }
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Weierstrass zeta, its completion, and the q-series identities behind them", "weierlab"};
    app.require_subcommand(1);

    // eval
    auto *eval = app.add_subcommand("eval", "Evaluate a function at one point and print \"<re> <im>\"");
    std::string eval_function, eval_tau, eval_z, eval_scheme = "qseries";
    std::optional<std::int64_t> eval_shell;
    std::optional<int> eval_terms;
    eval->add_option("function", eval_function, "zeta, zetaHat, wp, sigma, theta, thetaPrime, raiseTheta, "
                                                "indexZeroQuotient, eta, e2, g2, g2Star, sRegularized")
        ->required();
    eval->add_option("--tau", eval_tau, "Lattice parameter, a+bi with b > 0")->required();
    eval->add_option("--z", eval_z, "Evaluation point, a+bi");
    eval->add_option("--scheme", eval_scheme, "lattice or qseries (zeta and zetaHat)");
    add_common_options(eval, eval_shell, eval_terms);

    // verify
    auto *verify = app.add_subcommand("verify", "Run the identity checks and print a JSON report");
    std::string suite = "all";
    SampleSpec spec;
    double tol_scale = 1.0;
    bool json_only = false;
    std::optional<std::int64_t> verify_shell;
    std::optional<int> verify_terms;
    verify->add_option("--suite", suite, "all, or a comma separated list of check names");
    verify->add_option("--seed", spec.seed, "Sampling seed");
    verify->add_option("--tau-samples", spec.tau_count, "Number of tau samples per check");
    verify->add_option("--z-samples", spec.z_count, "Number of z samples per tau");
    verify->add_option("--tol-scale", tol_scale, "Multiplier applied to every default tolerance");
    verify->add_flag("--json", json_only, "Print only the JSON report (no summary on stderr)");
    add_common_options(verify, verify_shell, verify_terms);

    // grid
    auto *grid = app.add_subcommand("grid", "Sample a function on a grid in lattice coordinates and write CSV");
    std::string grid_function, grid_tau, grid_scheme = "qseries", grid_out;
    GridRequest request;
    std::vector<double> box{0, 1, 0, 1};
    std::optional<std::int64_t> grid_shell;
    std::optional<int> grid_terms;
    grid->add_option("function", grid_function, "zeta, zetaHat, wp, sigma, theta, indexZeroQuotient")->required();
    grid->add_option("--tau", grid_tau, "Lattice parameter, a+bi with b > 0")->required();
    grid->add_option("--nx", request.nx, "Samples along a (>= 2)");
    grid->add_option("--ny", request.ny, "Samples along b (>= 2)");
    grid->add_option("--box", box, "aMin,aMax,bMin,bMax with z = a + b*tau")->expected(4)->delimiter(',');
    grid->add_option("--scheme", grid_scheme, "lattice or qseries (zeta and zetaHat)");
    grid->add_option("--out", grid_out, "Output CSV path, or - for standard output")->required();
    add_common_options(grid, grid_shell, grid_terms);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (eval->parsed()) {
            const auto f = parse_function(eval_function);
            if (!f) {
                throw UsageError("unknown function '" + eval_function + "'");
            }
            const auto policy = make_policy(eval_shell, eval_terms);
            const auto scheme = parse_scheme(eval_scheme);
            const auto tau = make_tau(require_complex(eval_tau, "--tau"));
            Complex z(0);
            if (takes_z(*f)) {
                if (eval_z.empty()) {
                    throw UsageError(std::string(function_name(*f)) + " needs --z");
                }
                z = require_complex(eval_z, "--z");
            }
            const auto value = evaluate(*f, z, tau, policy, scheme);
            out << format_real15(value.real()) << ' ' << format_real15(value.imag()) << '\n';
            return ok;
        }

        if (verify->parsed()) {
            const auto selection = parse_suite(suite);
            const auto policy = make_policy(verify_shell, verify_terms);
            if (!(tol_scale > 0)) {
                throw UsageError("--tol-scale must be positive");
            }
            try {
                spec.validate(policy);
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
            const auto checks = run_suite(spec, policy, QSeriesTerms::from(policy), selection, tol_scale);
            out << report_json(checks) << '\n';
            bool all_passed = true;
            for (const auto &c : checks) {
                all_passed = all_passed && c.passed;
                if (!json_only) {
                    err << (c.passed ? "PASS " : "FAIL ") << c.name << " max_residual=" << c.max_residual
                        << " tolerance=" << c.tolerance << " samples=" << c.sample_count << '\n';
                }
            }
            return all_passed ? ok : checks_failed;
        }

        if (grid->parsed()) {
            const auto f = parse_function(grid_function);
            if (!f || !is_grid_function(*f)) {
                throw UsageError("unsupported grid function '" + grid_function + "'");
            }
            request.function = *f;
            request.scheme = parse_scheme(grid_scheme);
            request.tau = require_complex(grid_tau, "--tau");
            request.a_min = box[0];
            request.a_max = box[1];
            request.b_min = box[2];
            request.b_max = box[3];
            if (request.nx < 2 || request.ny < 2) {
                throw UsageError("--nx and --ny must be >= 2");
            }
            if (!(request.a_min < request.a_max) || !(request.b_min < request.b_max)) {
                throw UsageError("--box must be nondegenerate");
            }
            const auto policy = make_policy(grid_shell, grid_terms);
            make_tau(request.tau);

            std::ostringstream csv;
            write_grid(request, policy, csv);
            if (grid_out == "-") {
                out << csv.str();
                return ok;
            }
            std::ofstream file(grid_out, std::ios::binary | std::ios::trunc);
            if (!file) {
                err << "error: cannot write " << grid_out << '\n';
                return unwritable_output;
            }
            file << csv.str();
            file.flush();
            if (!file) {
                err << "error: cannot write " << grid_out << '\n';
                return unwritable_output;
            }
            return ok;
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const UnknownCheckName &e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const PoleAtLatticePoint &e) {
        err << "error: " << e.what() << '\n';
        return pole;
    } catch (const NotInUpperHalfPlane &e) {
        err << "error: " << e.what() << '\n';
        return bad_tau;
    } catch (const TauBelowGuard &e) {
        err << "error: " << e.what() << '\n';
        return bad_tau;
    }
    return usage_error;
}

} // namespace weierlab::cli
