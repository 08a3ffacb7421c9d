#include "weierlab/verify.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "weierlab/errors.hpp"
#include "weierlab/theta_sigma.hpp"
#include "weierlab/weierstrass.hpp"

namespace weierlab
{

namespace
{

using Complex = std::complex<double>;
constexpr double pi = std::numbers::pi;

// Finite-difference checks sample z away from the poles, where the O(h^2) term of the
// difference quotient would swamp the tolerance.
constexpr std::array<CheckInfo, 12> registry{{
    {"theorem1_shift1", 1e-8, 1e-3},
    {"theorem1_shiftTau", 1e-8, 1e-3},
    {"theorem1_general_w", 1e-8, 1e-3},
    {"sigma_logderiv", 1e-4, 1e-3},
    {"theta_sigma", 1e-5, 1e-3},
    {"theta_quotient", 1e-4, 1e-3},
    {"index_zero_periodic", 1e-10, 0.05},
    {"e2_quasiperiod", 1e-4, 1e-3},
    {"s_equals_g2star", 1e-2, 1e-3},
    {"legendre", 1e-4, 1e-3},
    {"wp_is_minus_zeta_prime", 1e-4, 0.05},
    {"zetahat_antiholomorphic", 1e-5, 0.25},
}};

// theta_sigma compares against a product truncated at the shell radius; beyond this the
// exp(-eta1 z^2 / 2) factor amplifies the truncation error.
constexpr double theta_sigma_radius = 0.75;
constexpr double logderiv_step = 1e-5;
constexpr double wirtinger_step = 1e-4;

class Sampler
{
public:
    Sampler(const SampleSpec &spec, std::size_t check_index)
        : m_spec(spec)
    {
        std::seed_seq seq{spec.seed, static_cast<std::uint64_t>(check_index)};
        m_engine.seed(seq);
    }

    // Uniform on [lo, hi), independent of the standard library's distributions.
    double uniform(double lo, double hi)
    {
        const double unit = static_cast<double>(m_engine() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * unit;
    }

    TauParameter tau()
    {
        const double re = uniform(m_spec.re_tau_min, m_spec.re_tau_max);
        const double im = uniform(m_spec.im_tau_min, m_spec.im_tau_max);
        return make_tau(Complex(re, im));
    }

    Complex z(const TauParameter &tau, double radius, double min_distance)
    {
        for (int attempt = 0; attempt < 100000; ++attempt) {
            const double r = radius * std::sqrt(uniform(0, 1));
            const double phi = uniform(0, 2 * pi);
            const auto z = std::polar(r, phi);
            if (lattice_distance(z, tau) >= min_distance) {
                return z;
            }
        }
        throw std::runtime_error("sampling region is covered by the lattice exclusion disks");
    }

private:
    const SampleSpec &m_spec;
    std::mt19937_64 m_engine;
};

struct Accumulator {
    std::int64_t samples = 0;
    double max_residual = 0;

    void add(double residual)
    {
        ++samples;
        if (std::isnan(residual) || std::isnan(max_residual)) {
            max_residual = std::numeric_limits<double>::quiet_NaN();
        } else {
            max_residual = std::max(max_residual, residual);
        }
    }
};

struct Context {
    const SampleSpec &spec;
    const TruncationPolicy &policy;
    const QSeriesTerms &terms;
};

using PointResidual = std::function<void(const TauParameter &, const Complex &, Accumulator &)>;
using TauResidual = std::function<void(const TauParameter &, Accumulator &)>;

Accumulator over_points(const Context &ctx, std::size_t index, double radius, const PointResidual &residual)
{
    Sampler sampler(ctx.spec, index);
    Accumulator acc;
    for (int t = 0; t < ctx.spec.tau_count; ++t) {
        const auto tau = sampler.tau();
        for (int k = 0; k < ctx.spec.z_count; ++k) {
            const auto z = sampler.z(tau, radius, registry[index].min_lattice_distance);
            residual(tau, z, acc);
        }
    }
    return acc;
}

Accumulator over_taus(const Context &ctx, std::size_t index, const TauResidual &residual)
{
    Sampler sampler(ctx.spec, index);
    Accumulator acc;
    for (int t = 0; t < ctx.spec.tau_count; ++t) {
        residual(sampler.tau(), acc);
    }
    return acc;
}

Accumulator run_check(const Context &ctx, std::size_t index)
{
    const auto &policy = ctx.policy;
    const auto &terms = ctx.terms;
    const double radius = ctx.spec.z_radius;
    auto hat = [&](const Complex &z, const TauParameter &tau) {
        return zeta_hat(z, tau, policy, Scheme::QSeries).total;
    };

    switch (index) {
        case 0:
            return over_points(ctx, index, radius, [&](const auto &tau, const auto &z, auto &acc) {
                acc.add(std::abs(hat(z + 1.0, tau) - hat(z, tau)));
            });
        case 1:
            return over_points(ctx, index, radius, [&](const auto &tau, const auto &z, auto &acc) {
                acc.add(std::abs(hat(z + tau.value(), tau) - hat(z, tau)));
            });
        case 2:
            return over_points(ctx, index, radius, [&](const auto &tau, const auto &z, auto &acc) {
                const auto base = hat(z, tau);
                for (int m = -3; m <= 3; ++m) {
                    for (int n = -3; n <= 3; ++n) {
                        if (m != 0 || n != 0) {
                            acc.add(std::abs(hat(z + embed(LatticeVector{m, n}, tau), tau) - base));
                        }
                    }
                }
            });
        case 3:
            // Lattice-product sigma against the q-series zeta.
            return over_points(ctx, index, radius, [&](const auto &tau, const auto &z, auto &acc) {
                const double h = logderiv_step;
                const auto quotient = (sigma_product(z + h, tau, policy) - sigma_product(z - h, tau, policy))
                                      / (2 * h * sigma_product(z, tau, policy));
                acc.add(std::abs(quotient - zeta_qseries(z, tau, terms)));
            });
        case 4:
            return over_points(ctx, index, std::min(radius, theta_sigma_radius),
                               [&](const auto &tau, const auto &z, auto &acc) {
                                   const auto residual = theta_sigma_residual(z, tau, policy, terms);
                                   acc.add(std::abs(residual) / (1 + std::abs(jacobi_theta(z, tau, terms))));
                               });
        case 5:
            return over_points(ctx, index, radius, [&](const auto &tau, const auto &z, auto &acc) {
                const auto log_deriv = theta_prime(z, tau, terms) / jacobi_theta(z, tau, terms);
                acc.add(std::abs(zeta_lattice(z, tau, policy) - (log_deriv + g2(tau, terms) * z)));
            });
        case 6:
            return over_points(ctx, index, radius, [&](const auto &tau, const auto &z, auto &acc) {
                const auto f = index_zero_quotient(z, tau, terms);
                acc.add(std::max(std::abs(index_zero_quotient(z + 1.0, tau, terms) - f),
                                 std::abs(index_zero_quotient(z + tau.value(), tau, terms) - f)));
            });
        case 7:
            return over_taus(ctx, index, [&](const auto &tau, auto &acc) {
                const auto eta1 = quasi_periods(tau, policy).eta1;
                acc.add(std::abs(eisenstein_e2(tau, terms) - 3.0 * eta1 / (pi * pi)));
            });
        case 8:
            return over_taus(ctx, index, [&](const auto &tau, auto &acc) {
                acc.add(std::abs(s_regularized_sum(tau, policy) - g2_star(tau, terms)));
            });
        case 9:
            return over_taus(ctx, index, [&](const auto &tau, auto &acc) {
                const auto qp = quasi_periods(tau, policy);
                acc.add(std::abs(qp.eta1 * tau.value() - qp.eta2 - Complex(0, 2 * pi)));
            });
        case 10:
            return over_points(ctx, index, radius, [&](const auto &tau, const auto &z, auto &acc) {
                const double h = logderiv_step;
                const auto dzeta = (zeta_lattice(z + h, tau, policy) - zeta_lattice(z - h, tau, policy)) / (2 * h);
                acc.add(std::abs(wp_lattice(z, tau, policy) + dzeta));
            });
        case 11:
            // d/dconj(z) = (d/dx + i d/dy) / 2, which must equal -pi / Im(tau).
            return over_points(ctx, index, radius, [&](const auto &tau, const auto &z, auto &acc) {
                const double h = wirtinger_step;
                const Complex ih(0, h);
                const auto dx = (hat(z + h, tau) - hat(z - h, tau)) / (2 * h);
                const auto dy = (hat(z + ih, tau) - hat(z - ih, tau)) / (2 * h);
                const auto dbar = 0.5 * (dx + Complex(0, 1) * dy);
                acc.add(std::abs(dbar + pi / tau.imag()));
            });
        default:
            throw std::logic_error("check index out of range");
    }
}

std::string json_number(double value)
{
    if (!std::isfinite(value)) {
        return "null";
    }
    std::array<char, 64> buf{};
    const auto [ptr, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::scientific, 15);
    return std::string(buf.data(), ptr);
}

} // namespace

void SampleSpec::validate(const TruncationPolicy &policy) const
{
    if (tau_count < 1 || z_count < 1) {
        throw std::invalid_argument("sample counts must be >= 1");
    }
    if (!(re_tau_min <= re_tau_max) || !(im_tau_min <= im_tau_max)) {
        throw std::invalid_argument("tau sampling box is empty");
    }
    if (im_tau_min < policy.min_im_tau) {
        throw std::invalid_argument("tau sampling box reaches below the Im(tau) guard");
    }
    if (!(z_radius > 0)) {
        throw std::invalid_argument("z sampling radius must be positive");
    }
}

std::span<const CheckInfo> check_registry()
{
    return registry;
}

const CheckInfo &find_check(std::string_view name)
{
    for (const auto &info : registry) {
        if (info.name == name) {
            return info;
        }
    }
    throw UnknownCheckName(std::string(name));
}

std::vector<IdentityCheck> run_suite(const SampleSpec &spec, const TruncationPolicy &policy,
                                     const QSeriesTerms &terms, const std::set<std::string> &selection,
                                     double tolerance_scale)
{
    for (const auto &name : selection) {
        find_check(name);
    }
    policy.validate();
    spec.validate(policy);

    const Context ctx{spec, policy, terms};
    std::vector<IdentityCheck> out;
    for (std::size_t i = 0; i < registry.size(); ++i) {
        const auto &info = registry[i];
        if (!selection.empty() && !selection.contains(std::string(info.name))) {
            continue;
        }
        const auto acc = run_check(ctx, i);
        IdentityCheck check;
        check.name = std::string(info.name);
        check.sample_count = acc.samples;
        check.max_residual = acc.max_residual;
        check.tolerance = info.tolerance * tolerance_scale;
        check.passed = acc.max_residual <= check.tolerance;
        out.push_back(std::move(check));
    }
    return out;
}

std::string report_json(std::span<const IdentityCheck> checks)
{
    std::string out = "{\"checks\":[";
    bool all_passed = true;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto &c = checks[i];
        all_passed = all_passed && c.passed;
        if (i > 0) {
            out += ',';
        }
        out += "{\"name\":" + nlohmann::json(c.name).dump();
        out += ",\"samples\":" + std::to_string(c.sample_count);
        out += ",\"max_residual\":" + json_number(c.max_residual);
        out += ",\"tolerance\":" + json_number(c.tolerance);
        out += std::string(",\"passed\":") + (c.passed ? "true" : "false") + "}";
    }
    out += std::string("],\"all_passed\":") + (all_passed ? "true" : "false") + "}";
    return out;
}

} // namespace weierlab
