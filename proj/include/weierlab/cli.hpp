#ifndef WEIERLAB_CLI_HPP
#define WEIERLAB_CLI_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "weierlab/lattice.hpp"
#include "weierlab/weierstrass.hpp"

namespace weierlab::cli
{

/// Process exit statuses.
enum ExitCode : int {
    ok = 0,
    checks_failed = 1,
    usage_error = 2,
    pole = 3,
    bad_tau = 4,
    unwritable_output = 5,
};

enum class Function {
    zeta,
    zeta_hat,
    wp,
    sigma,
    theta,
    theta_prime,
    raise_theta,
    index_zero_quotient,
    eta,
    e2,
    g2,
    g2_star,
    s_regularized,
};

std::optional<Function> parse_function(std::string_view name);
std::string_view function_name(Function f);

/// True for the functions that take a z argument.
bool takes_z(Function f);

/// Functions accepted by `grid`.
bool is_grid_function(Function f);

/// Evaluates f; z is ignored for functions of tau alone.
std::complex<double> evaluate(Function f, const std::complex<double> &z, const TauParameter &tau,
                              const TruncationPolicy &policy, Scheme scheme);

struct GridRequest {
    Function function = Function::zeta_hat;
    std::complex<double> tau{0, 1};
    int nx = 2;
    int ny = 2;
    /// Lattice coordinates of the half-open sampled rectangle [a_min, a_max) x [b_min, b_max).
    double a_min = 0, a_max = 1, b_min = 0, b_max = 1;
    Scheme scheme = Scheme::QSeries;
};

/// Writes the CSV `a,b,re_z,im_z,re_f,im_f` for the request, b outer and a inner.
/// Samples at poles get empty re_f/im_f fields.
void write_grid(const GridRequest &request, const TruncationPolicy &policy, std::ostream &out);

/// Runs the command line (without the program name). Returns the exit status.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace weierlab::cli

#endif
