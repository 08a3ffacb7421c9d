#ifndef WEIERLAB_MODULAR_HPP
#define WEIERLAB_MODULAR_HPP

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "weierlab/errors.hpp"
#include "weierlab/lattice.hpp"

// q-series side: the odd Jacobi theta function, Dedekind eta, the weight 2 Eisenstein series
// and the objects built from them.

namespace weierlab
{

/// Term count for the q-series, plus the Im(tau) guard under which they are refused.
struct QSeriesTerms {
    int count = 64;
    double min_im_tau = 0.05;

    static QSeriesTerms from(const TruncationPolicy &policy)
    {
        return {policy.q_terms, policy.min_im_tau};
    }
};

/// zeta(2) = pi^2 / 6, the normalisation in G2 = 2 zeta(2) E2.
template <std::floating_point Scalar>
inline constexpr Scalar zeta_two = std::numbers::pi_v<Scalar> * std::numbers::pi_v<Scalar> / 6;

/// Distance to the lattice below which the poles of zeta, wp and theta'/theta are reported.
inline constexpr double pole_guard = 1e-12;

namespace detail
{

template <std::floating_point Scalar>
void check_guard(const Tau<Scalar> &tau, const QSeriesTerms &terms)
{
    if (terms.count < 1) {
        throw std::invalid_argument("q-series term count must be >= 1");
    }
    if (tau.imag() < static_cast<Scalar>(terms.min_im_tau)) {
        std::ostringstream oss;
        oss << "Im(tau) = " << tau.imag() << " is below the q-series guard " << terms.min_im_tau;
        throw TauBelowGuard(oss.str());
    }
}

template <std::floating_point Scalar>
void check_not_pole(const std::complex<Scalar> &z, const Tau<Scalar> &tau)
{
    if (lattice_distance(z, tau) < static_cast<Scalar>(pole_guard)) {
        std::ostringstream oss;
        oss << "z = " << z << " is a lattice point (pole)";
        throw PoleAtLatticePoint(oss.str());
    }
}

// Number of half-integer indices per side. Once |Im z| exceeds Im(tau) the terms grow
// before they decay, so the count is extended by the position of the peak.
template <std::floating_point Scalar>
int theta_term_count(const std::complex<Scalar> &z, const Tau<Scalar> &tau, const QSeriesTerms &terms)
{
    return terms.count + static_cast<int>(std::ceil(std::abs(z.imag()) / tau.imag()));
}

template <std::floating_point Scalar>
struct ThetaPair {
    std::complex<Scalar> value;
    std::complex<Scalar> derivative;
};

// Pairs the n and -n terms of the half-integer sum:
//   theta(z) = i * sum_k (-1)^k (E+ - E-),   theta'(z) = -pi * sum_k (-1)^k (2k+1) (E+ + E-),
//   E+/- = exp(pi i (k+1/2)^2 tau +/- (2k+1) pi i z).
// theta(0) = 0 and theta(-z) = -theta(z) then hold exactly in floating point.
template <std::floating_point Scalar>
ThetaPair<Scalar> theta_with_derivative(const std::complex<Scalar> &z, const Tau<Scalar> &tau,
                                        const QSeriesTerms &terms)
{
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    const std::complex<Scalar> i_unit(0, 1);
    const int count = theta_term_count(z, tau, terms);
    std::complex<Scalar> value(0), derivative(0);
    for (int k = 0; k < count; ++k) {
        const Scalar n = static_cast<Scalar>(k) + Scalar(0.5);
        const Scalar two_n = 2 * n;
        const auto quad = i_unit * (pi * n * n) * tau.value();
        const auto lin = i_unit * (pi * two_n) * z;
        const auto ep = std::exp(quad + lin);
        const auto em = std::exp(quad - lin);
        const Scalar sign = (k % 2 == 0) ? Scalar(1) : Scalar(-1);
        value += sign * (ep - em);
        derivative += (sign * two_n) * (ep + em);
    }
    return {i_unit * value, -pi * derivative};
}

} // namespace detail

/// Odd Jacobi theta function, the sum over n in 1/2 + Z of exp(pi i n^2 tau + 2 pi i n (z + 1/2)).
template <std::floating_point Scalar>
std::complex<Scalar> jacobi_theta(const std::complex<Scalar> &z, const Tau<Scalar> &tau,
                                  const QSeriesTerms &terms = {})
{
    detail::check_guard(tau, terms);
    return detail::theta_with_derivative(z, tau, terms).value;
}

/// z-derivative of jacobi_theta, taken term by term.
template <std::floating_point Scalar>
std::complex<Scalar> theta_prime(const std::complex<Scalar> &z, const Tau<Scalar> &tau,
                                 const QSeriesTerms &terms = {})
{
    detail::check_guard(tau, terms);
    return detail::theta_with_derivative(z, tau, terms).derivative;
}

/// Modulus of the first omitted theta term, a bound on the truncation tail.
template <std::floating_point Scalar>
Scalar theta_tail_bound(const std::complex<Scalar> &z, const Tau<Scalar> &tau, const QSeriesTerms &terms = {})
{
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    const Scalar n = static_cast<Scalar>(detail::theta_term_count(z, tau, terms)) + Scalar(0.5);
    return std::exp(-pi * n * n * tau.imag() + 2 * pi * n * std::abs(z.imag()));
}

/// Divisor sums sigma_1(n) for n = 0..limit (entry 0 is unused and zero), by sieve.
inline std::vector<std::uint64_t> divisor_sigma1(int limit)
{
    std::vector<std::uint64_t> sums(static_cast<std::size_t>(limit) + 1, 0);
    for (int d = 1; d <= limit; ++d) {
        for (int multiple = d; multiple <= limit; multiple += d) {
            sums[static_cast<std::size_t>(multiple)] += static_cast<std::uint64_t>(d);
        }
    }
    return sums;
}

/// Dedekind eta, q^(1/24) * prod_{n=1}^{M} (1 - q^n).
template <std::floating_point Scalar>
std::complex<Scalar> dedekind_eta(const Tau<Scalar> &tau, const QSeriesTerms &terms = {})
{
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    detail::check_guard(tau, terms);
    const auto q = tau.nome();
    std::complex<Scalar> product(1), qn(1);
    for (int n = 1; n <= terms.count; ++n) {
        qn *= q;
        product *= Scalar(1) - qn;
    }
    const auto q24 = std::polar(std::exp(-2 * pi * tau.imag() / 24), 2 * pi * tau.real() / 24);
    return q24 * product;
}

/// Normalised weight 2 Eisenstein series, 1 - 24 sum_{n=1}^{M} sigma_1(n) q^n.
template <std::floating_point Scalar>
std::complex<Scalar> eisenstein_e2(const Tau<Scalar> &tau, const QSeriesTerms &terms = {})
{
    detail::check_guard(tau, terms);
    const auto sigma1 = divisor_sigma1(terms.count);
    const auto q = tau.nome();
    std::complex<Scalar> sum(0), qn(1);
    for (int n = 1; n <= terms.count; ++n) {
        qn *= q;
        sum += static_cast<Scalar>(sigma1[static_cast<std::size_t>(n)]) * qn;
    }
    return Scalar(1) - Scalar(24) * sum;
}

/// G2 = 2 zeta(2) E2. Equal to the quasi-period eta1 of Z + Z*tau.
template <std::floating_point Scalar>
std::complex<Scalar> g2(const Tau<Scalar> &tau, const QSeriesTerms &terms = {})
{
    return (2 * zeta_two<Scalar>)*eisenstein_e2(tau, terms);
}

/// Non-holomorphic completion G2* = G2 - pi / Im(tau).
template <std::floating_point Scalar>
std::complex<Scalar> g2_star(const Tau<Scalar> &tau, const QSeriesTerms &terms = {})
{
    return g2(tau, terms) - std::numbers::pi_v<Scalar> / tau.imag();
}

/// Raising operator applied to theta: theta' + 2 pi i (Im z / Im tau) theta.
template <std::floating_point Scalar>
std::complex<Scalar> raise_theta(const std::complex<Scalar> &z, const Tau<Scalar> &tau,
                                 const QSeriesTerms &terms = {})
{
    detail::check_guard(tau, terms);
    const auto [theta, dtheta] = detail::theta_with_derivative(z, tau, terms);
    const std::complex<Scalar> correction(0, 2 * std::numbers::pi_v<Scalar> * z.imag() / tau.imag());
    return dtheta + correction * theta;
}

/// Y+ theta / theta. Doubly periodic in z, with a simple pole at each lattice point.
template <std::floating_point Scalar>
std::complex<Scalar> index_zero_quotient(const std::complex<Scalar> &z, const Tau<Scalar> &tau,
                                         const QSeriesTerms &terms = {})
{
    detail::check_guard(tau, terms);
    detail::check_not_pole(z, tau);
    const auto [theta, dtheta] = detail::theta_with_derivative(z, tau, terms);
    if (theta == std::complex<Scalar>(0)) {
        throw PoleAtLatticePoint("theta vanishes at the evaluation point");
    }
    const std::complex<Scalar> correction(0, 2 * std::numbers::pi_v<Scalar> * z.imag() / tau.imag());
    return dtheta / theta + correction;
}

/// Weierstrass zeta on the q-series footing: theta'/theta + eta1 z with eta1 = G2(tau).
template <std::floating_point Scalar>
std::complex<Scalar> zeta_qseries(const std::complex<Scalar> &z, const Tau<Scalar> &tau,
                                  const QSeriesTerms &terms = {})
{
    detail::check_guard(tau, terms);
    detail::check_not_pole(z, tau);
    const auto [theta, dtheta] = detail::theta_with_derivative(z, tau, terms);
    if (theta == std::complex<Scalar>(0)) {
        throw PoleAtLatticePoint("theta vanishes at the evaluation point");
    }
    return dtheta / theta + g2(tau, terms) * z;
}

} // namespace weierlab

#endif
